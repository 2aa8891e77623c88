"""测试稀疏态矢量与单数字算符"""

import numpy as np
import pytest

from qdqi.core.errors import DimensionMismatchError, ZeroNormError
from qdqi.core.field import PrimeModulus
from qdqi.gauss.sums import general_quad_sum_brute
from qdqi.quantum.statevector import (
    RegisterLayout,
    SparseState,
    apply_single_digit_operator,
    distance_up_to_phase_scale,
    f_alpha_matrix,
    measure_distribution,
    qft,
    qft_matrix,
    satisfied_distribution,
)
from tests.fixtures.instances import single_constraint


def random_sparse_state(layout: RegisterLayout, seed: int, density: float = 0.4) -> SparseState:
    """在随机挑选的基态上放随机复振幅"""
    rng = np.random.default_rng(seed)
    size = layout.p**layout.total_digits
    vector = (rng.normal(size=size) + 1j * rng.normal(size=size)) * (rng.random(size) < density)
    vector[0] = 1.0
    return SparseState.from_dense(layout, vector)


class TestRegisterLayout:
    """测试寄存器布局"""

    def test_digit_range(self):
        layout = RegisterLayout((("y", 3), ("syndrome", 2)), 5)
        assert layout.total_digits == 5
        assert layout.names == ["y", "syndrome"]
        assert layout.digit_range("syndrome") == range(3, 5)

    def test_unknown_register(self):
        with pytest.raises(KeyError):
            RegisterLayout.single("x", 2, 5).digit_range("y")

    def test_duplicate_names(self):
        with pytest.raises(ValueError):
            RegisterLayout((("x", 1), ("x", 2)), 5)


class TestSparseState:
    """测试稀疏态的基本操作"""

    @pytest.fixture
    def layout(self):
        """两位 F_5 寄存器"""
        return RegisterLayout.single("x", 2, 5)

    def test_prunes_tiny_amplitudes(self, layout):
        state = SparseState({(0, 1): 1.0, (2, 3): 1e-20}, layout)
        assert len(state) == 1

    def test_rejects_out_of_range_digits(self, layout):
        with pytest.raises(DimensionMismatchError):
            SparseState({(0, 5): 1.0}, layout)
        with pytest.raises(DimensionMismatchError):
            SparseState({(0,): 1.0}, layout)

    def test_dense_round_trip(self, layout):
        vector = np.arange(25) * (1 + 1j)
        state = SparseState.from_dense(layout, vector)
        assert len(state) == 24
        assert state.amplitude((0, 3)) == 3 + 3j
        assert np.allclose(state.to_dense(), vector)

    def test_iteration_is_sorted(self, layout):
        state = SparseState({(3, 0): 1.0, (0, 4): 2.0, (1, 1): 3.0}, layout)
        assert [digits for digits, _ in state] == [(0, 4), (1, 1), (3, 0)]

    def test_zero_norm(self, layout):
        with pytest.raises(ZeroNormError):
            SparseState({}, layout).normalized()

    def test_project(self, layout):
        state = SparseState({(0, 0): 1.0, (1, 0): 1.0, (2, 0): np.sqrt(2)}, layout)
        kept, probability = state.project(lambda d: d[0] < 2)
        assert probability == pytest.approx(0.5)
        assert len(kept) == 2

    def test_map_basis_merges_collisions(self, layout):
        state = SparseState({(0, 1): 1.0, (0, 2): 2.0}, layout)
        merged = state.map_basis(lambda d: (d[0], 0))
        assert merged.amplitude((0, 0)) == 3.0


class TestOperators:
    """测试单数字算符与QFT"""

    def test_qft_matrix_is_unitary(self):
        matrix = qft_matrix(7)
        assert np.allclose(matrix @ matrix.conj().T, np.eye(7))
        assert np.allclose(qft_matrix(7, inverse=True), matrix.conj())

    def test_qft_of_zero_is_uniform(self):
        layout = RegisterLayout.single("x", 2, 3)
        state = qft(SparseState.basis(layout, (0, 0)), "x")
        assert len(state) == 9
        assert np.allclose(np.abs(state.to_dense()), 1 / 3)

    def test_qft_inverse_restores_state(self):
        layout = RegisterLayout.single("x", 2, 5)
        state = SparseState.from_dense(layout, np.linspace(1, 2, 25))
        restored = qft(qft(state, "x"), "x", inverse=True)
        assert np.allclose(restored.to_dense(), state.to_dense())

    @pytest.mark.parametrize("p", [3, 5, 7])
    @pytest.mark.parametrize("inverse", [False, True])
    def test_qft_preserves_norm(self, p, inverse):
        layout = RegisterLayout.single("x", 2, p)
        for seed in range(5):
            state = random_sparse_state(layout, seed)
            assert qft(state, "x", inverse=inverse).norm() == pytest.approx(state.norm(), rel=1e-12)

    @pytest.mark.parametrize("p", [3, 5, 7])
    def test_operators_on_distinct_digits_commute(self, p):
        """不同位上的算符可交换"""
        layout = RegisterLayout.single("x", 3, p)
        rng = np.random.default_rng(p)
        a = rng.normal(size=(p, p)) + 1j * rng.normal(size=(p, p))
        b = rng.normal(size=(p, p)) + 1j * rng.normal(size=(p, p))
        state = random_sparse_state(layout, p)
        ab = apply_single_digit_operator(apply_single_digit_operator(state, 0, a), 2, b)
        ba = apply_single_digit_operator(apply_single_digit_operator(state, 2, b), 0, a)
        assert np.allclose(ab.to_dense(), ba.to_dense(), atol=1e-12)

    def test_identity_is_noop(self):
        layout = RegisterLayout.single("x", 2, 5)
        state = random_sparse_state(layout, 11)
        for index in range(2):
            result = apply_single_digit_operator(state, index, np.eye(5))
            assert result.amplitudes == state.amplitudes

    def test_operator_bounds(self):
        state = SparseState.basis(RegisterLayout.single("x", 1, 5), (0,))
        with pytest.raises(IndexError):
            apply_single_digit_operator(state, 1, np.eye(5))
        with pytest.raises(DimensionMismatchError):
            apply_single_digit_operator(state, 0, np.eye(3))


class TestFAlpha:
    """测试条件二次相位算符"""

    @pytest.mark.parametrize("p", [3, 5, 7])
    def test_matrix_elements(self, p):
        modulus = PrimeModulus(p)
        for alpha in range(p):
            matrix = f_alpha_matrix(alpha, p)
            for z in range(p):
                for x in range(p):
                    expected = general_quad_sum_brute(modulus(-x), modulus(z - alpha), modulus(0))
                    assert abs(matrix[z, x] - expected) < 1e-9

    def test_zero_column(self):
        column = f_alpha_matrix(2, 5)[:, 0]
        assert np.allclose(column, 5 * np.eye(5)[2])

    def test_alpha_is_reduced(self):
        assert f_alpha_matrix(7, 5) is f_alpha_matrix(2, 5)


class TestMeasurement:
    """测试距离与测量分布"""

    def test_distance_ignores_phase_and_scale(self):
        layout = RegisterLayout.single("x", 1, 5)
        state = SparseState.from_dense(layout, [1, 2j, 0, -1, 0.5])
        assert distance_up_to_phase_scale(state, state.scaled(-3j)) < 1e-12

    def test_distance_of_orthogonal_states(self):
        layout = RegisterLayout.single("x", 1, 5)
        assert distance_up_to_phase_scale(
            SparseState.basis(layout, (0,)), SparseState.basis(layout, (1,))
        ) == pytest.approx(1.0)

    @pytest.mark.parametrize("seed", range(4))
    def test_distance_is_symmetric(self, seed):
        layout = RegisterLayout.single("x", 2, 5)
        s1 = random_sparse_state(layout, seed)
        s2 = random_sparse_state(layout, seed + 100)
        assert distance_up_to_phase_scale(s1, s2) == pytest.approx(distance_up_to_phase_scale(s2, s1), abs=1e-12)

    def test_measure_distribution(self):
        layout = RegisterLayout.single("x", 1, 5)
        state = SparseState.from_dense(layout, [1, 1, 1, 1, 0])
        probabilities = measure_distribution(state, lambda d: d[0] % 2, size=3)
        assert np.allclose(probabilities, [0.5, 0.5, 0.0])

    def test_satisfied_distribution_of_uniform_state(self):
        inst = single_constraint()
        state = SparseState.from_dense(RegisterLayout.single("x", 1, 5), np.ones(5))
        assert np.allclose(satisfied_distribution(state, inst), [0.2, 0.8])

    def test_satisfied_distribution_layout_mismatch(self):
        inst = single_constraint()
        state = SparseState.basis(RegisterLayout.single("x", 2, 5), (0, 0))
        with pytest.raises(DimensionMismatchError):
            satisfied_distribution(state, inst)
