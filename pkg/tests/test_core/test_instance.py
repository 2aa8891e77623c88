"""测试实例与派生数据结构"""

import numpy as np
import pytest

from qdqi.core.instance import QuadSatInstance, SatDistribution, WeightVector
from tests.fixtures.instances import linsat5, opi5, single_constraint


class TestQuadSatInstance:
    """测试 max-QUADSAT 实例"""

    @pytest.fixture
    def inst(self):
        """二次OPI实例"""
        return opi5()

    def test_dimensions(self, inst):
        assert (inst.p, inst.m, inst.n, inst.r) == (5, 4, 2, 2)
        assert inst.kind == "opi"

    def test_quadratic_opi_has_no_linear_part(self, inst):
        assert not inst.has_linear_part
        assert not inst.is_linear

    def test_linear_opi_is_linear(self):
        inst = linsat5()
        assert inst.is_linear
        assert inst.has_linear_part

    def test_subsets_are_sorted(self):
        inst = QuadSatInstance(modulus=5, B=[[0]], D=[[1]], F=((4, 1),))
        assert inst.F == ((1, 4),)

    def test_matrices_are_read_only(self, inst):
        with pytest.raises(ValueError):
            inst.D[0, 0] = 3

    def test_membership(self):
        inst = single_constraint()
        assert inst.membership.tolist() == [[False, True, False, False, True]]

    def test_rank(self):
        inst = QuadSatInstance(modulus=5, B=[[0, 0, 0]], D=[[1, 0, 3]], F=((0,),))
        assert inst.rank(0) == 2

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"B": [[0, 0]], "D": [[1]], "F": ((1,),)},
            {"B": [[0]], "D": [[1]], "F": ((1,), (2,))},
            {"B": [[0], [0]], "D": [[1], [1]], "F": ((1,), (2, 3))},
            {"B": [[0]], "D": [[1]], "F": ((0, 1, 2, 3, 4),)},
            {"B": [[0]], "D": [[5]], "F": ((1,),)},
            {"B": [[0]], "D": [[1]], "F": ((1, 1),)},
            {"B": [[0]], "D": [[1]], "F": ((7,),)},
        ],
    )
    def test_invalid_instances(self, kwargs):
        with pytest.raises(ValueError):
            QuadSatInstance(modulus=5, **kwargs)


class TestSatDistribution:
    """测试满足数分布"""

    def test_probabilities_are_exact(self):
        dist = SatDistribution(counts=(1, 4), total=5)
        assert dist.m == 1
        assert [str(v) for v in dist.probabilities()] == ["1/5", "4/5"]

    def test_total_must_match(self):
        with pytest.raises(ValueError):
            SatDistribution(counts=(1, 3), total=5)


class TestWeightVector:
    """测试权重向量"""

    def test_ell_and_norm(self):
        w = WeightVector((3.0, 4.0))
        assert w.ell == 1
        assert w.norm == pytest.approx(5.0)
        assert not w.is_unit()

    def test_normalized(self):
        w = WeightVector((3.0, 4.0)).normalized()
        assert w.is_unit()
        assert w[0] == pytest.approx(0.6)
        assert np.allclose(w.as_array(), [0.6, 0.8])

    @pytest.mark.parametrize("values", [(), (1.0, float("nan"))])
    def test_rejects_invalid(self, values):
        with pytest.raises(ValueError):
            WeightVector(values)

    def test_zero_cannot_normalize(self):
        with pytest.raises(ValueError):
            WeightVector((0.0, 0.0)).normalized()
