"""测试二次高斯和"""

import numpy as np
import pytest

from qdqi.core.errors import SingularMatrixError
from qdqi.core.field import PrimeModulus
from qdqi.gauss.sums import (
    gauss_one,
    general_quad_sum_brute,
    general_quad_sum_closed,
    general_quad_sum_value,
    multidim_quad_sum,
    multidim_quad_sum_brute,
    omega,
    quad_gauss_brute,
    quad_gauss_closed,
)

PRIMES = [3, 5, 7, 11, 13]


class TestQuadGauss:
    """测试一维二次高斯和"""

    def test_gauss_one(self):
        assert gauss_one(5) == pytest.approx(np.sqrt(5))
        assert gauss_one(7) == pytest.approx(1j * np.sqrt(7))

    def test_omega_reduces_exponent(self):
        assert omega(7, 5) == pytest.approx(omega(2, 5))
        assert omega(-1, 5) == pytest.approx(omega(4, 5))

    @pytest.mark.parametrize("p", PRIMES)
    def test_closed_matches_brute(self, p):
        for a in PrimeModulus(p).elements():
            assert abs(quad_gauss_closed(a) - quad_gauss_brute(a)) < 1e-9

    def test_zero_argument(self):
        assert quad_gauss_closed(PrimeModulus(7)(0)) == 7


class TestGeneralQuadSum:
    """测试一般二次指数和"""

    @pytest.mark.parametrize("p", [3, 5, 7])
    def test_closed_matches_brute(self, p):
        modulus = PrimeModulus(p)
        for a in modulus.elements():
            for b in modulus.elements():
                for c in modulus.elements():
                    closed = general_quad_sum_closed(a, b, c)
                    assert abs(closed - general_quad_sum_brute(a, b, c)) < 1e-9

    def test_degenerate_linear_sum(self):
        assert general_quad_sum_value(0, 3, 1, 5) == 0
        assert general_quad_sum_value(0, 0, 0, 5) == pytest.approx(5)


class TestMultidimQuadSum:
    """测试对角二次型的多维高斯和"""

    @pytest.mark.parametrize(
        "p,diagonal",
        [(3, [1, 2]), (5, [2]), (5, [1, 2, 3]), (7, [3, 5]), (7, [1, 1, 6]), (11, [2, 7])],
    )
    def test_closed_matches_brute(self, p, diagonal):
        assert abs(multidim_quad_sum(diagonal, p) - multidim_quad_sum_brute(diagonal, p)) < 1e-9

    def test_rejects_zero_diagonal(self):
        with pytest.raises(SingularMatrixError):
            multidim_quad_sum([1, 0], 5)

    def test_brute_allows_zero_diagonal(self):
        # x_2 自由变化，结果为 p·g(1)
        assert multidim_quad_sum_brute([1, 0], 5) == pytest.approx(5 * np.sqrt(5))
