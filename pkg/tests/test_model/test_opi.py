"""测试OPI实例生成"""

from itertools import product

import numpy as np
import pytest

from qdqi.model.opi import (
    make_linear_opi,
    make_quadratic_opi,
    make_random_quadsat,
    opi_objective,
    opi_subsets,
    rs_matrix,
)
from qdqi.model.quadsat import satisfied_count
from tests.fixtures.instances import OPI5_SUBSETS, linsat5, opi5


class TestRsMatrix:
    """测试求值矩阵 γ^{ij}"""

    def test_p5(self):
        assert rs_matrix(5, 2).tolist() == [[1, 1], [1, 2], [1, 4], [1, 3]]

    def test_p7(self):
        assert rs_matrix(7, 3).tolist() == [
            [1, 1, 1],
            [1, 3, 2],
            [1, 2, 4],
            [1, 6, 1],
            [1, 4, 2],
            [1, 5, 4],
        ]


class TestMakeOpi:
    """测试OPI构造"""

    def test_quadratic_opi(self):
        inst = opi5()
        assert not inst.B.any()
        assert inst.D.tolist() == rs_matrix(5, 2).tolist()
        assert inst.F == tuple(tuple(s) for s in OPI5_SUBSETS)

    def test_linear_opi(self):
        inst = linsat5(n=2)
        assert inst.kind == "linsat"
        assert inst.B.tolist() == rs_matrix(5, 2).tolist()
        assert not inst.D.any()

    def test_random_subsets_are_reproducible(self):
        first = make_quadratic_opi(7, 2, r=3, seed=11)
        second = make_quadratic_opi(7, 2, r=3, seed=11)
        assert first.F == second.F
        assert first.seed == 11
        assert all(len(s) == 3 for s in first.F)

    @pytest.mark.parametrize("n", [0, 4, 5])
    def test_rejects_bad_n(self, n):
        with pytest.raises(ValueError):
            make_quadratic_opi(5, n, r=2, seed=0)

    def test_requires_r_without_subsets(self):
        with pytest.raises(ValueError):
            make_linear_opi(5, 2)

    def test_rejects_wrong_subset_count(self):
        with pytest.raises(ValueError):
            make_quadratic_opi(5, 2, subsets=OPI5_SUBSETS[:3])


class TestOpiObjective:
    """测试多项式形式的OPI目标"""

    def test_subsets_keyed_by_evaluation_point(self):
        assert opi_subsets(opi5()) == {1: (1, 3), 2: (0, 2), 4: (2, 4), 3: (1, 4)}

    def test_quadratic_opi_matches_quadsat_objective(self):
        """系数 q_j = x_j² 时两种目标一致"""
        inst = opi5()
        subsets = opi_subsets(inst)
        for x in product(range(5), repeat=2):
            coeffs = [v * v % 5 for v in x]
            assert opi_objective(coeffs, subsets, 5) == satisfied_count(inst, x)

    def test_linear_opi_matches_quadsat_objective(self):
        inst = linsat5()
        subsets = opi_subsets(inst)
        for x in product(range(5), repeat=3):
            assert opi_objective(list(x), subsets, 5) == satisfied_count(inst, x)


class TestRandomQuadsat:
    """测试随机实例"""

    def test_shape_and_parts(self):
        inst = make_random_quadsat(5, 3, 6, 2, seed=1, linear=False)
        assert inst.B.shape == (6, 3)
        assert not inst.B.any()
        assert inst.r == 2

    def test_reproducible(self):
        first = make_random_quadsat(7, 2, 4, 3, seed=5)
        second = make_random_quadsat(7, 2, 4, 3, seed=5)
        assert np.array_equal(first.B, second.B) and np.array_equal(first.D, second.D)

    def test_requires_some_part(self):
        with pytest.raises(ValueError):
            make_random_quadsat(5, 2, 3, 2, linear=False, quadratic=False)
