"""测试相位制备原语"""

from itertools import product

import numpy as np
import pytest

from qdqi.quantum.primitives import (
    quadratic_phase_target,
    sim_quadratic_form_phase,
    sim_quadratic_phase,
    sim_quantum_condition,
    sim_shifted_quadratic_phase,
)
from qdqi.quantum.statevector import (
    RegisterLayout,
    SparseState,
    apply_to_register,
    distance_up_to_phase_scale,
    f_alpha_matrix,
)

PRIMES = [3, 5, 7, 11]


class TestQuadraticPhase:
    """测试二次相位制备"""

    @pytest.mark.parametrize("p", PRIMES)
    def test_state_matches_target(self, p):
        for a in range(p):
            state, _ = sim_quadratic_phase(a, p)
            assert distance_up_to_phase_scale(state, quadratic_phase_target(a, p)) < 1e-9
            assert state.norm() == pytest.approx(1.0)

    @pytest.mark.parametrize("p", PRIMES)
    def test_joint_probability_is_one_quarter(self, p):
        """标志位与分支各以 1/2 的概率保留"""
        for a in range(p):
            _, probability = sim_quadratic_phase(a, p)
            assert probability == pytest.approx(0.25)

    @pytest.mark.parametrize("p", [5, 7])
    def test_shifted_phase(self, p):
        for a, b in product(range(p), repeat=2):
            state, probability = sim_shifted_quadratic_phase(a, b, p)
            assert distance_up_to_phase_scale(state, quadratic_phase_target(a, p, shift=b)) < 1e-9
            assert probability == pytest.approx(0.25 / p)

    def test_non_prime_modulus(self):
        with pytest.raises(ValueError):
            sim_quadratic_phase(1, 9)


class TestQuadraticFormPhase:
    """测试对角二次型相位"""

    @pytest.mark.parametrize("p,diagonal", [(3, (1, 2)), (5, (0, 3)), (7, (2, 5)), (5, (1, 2, 4))])
    def test_matches_dense_phases(self, p, diagonal):
        state = sim_quadratic_form_phase(diagonal, p)
        n = len(diagonal)
        x = np.stack(np.unravel_index(np.arange(p**n), (p,) * n), axis=1)
        exponents = (x * x) @ np.array(diagonal) % p
        target = SparseState.from_dense(state.layout, np.exp(2j * np.pi * exponents / p))
        assert distance_up_to_phase_scale(state, target) < 1e-9

    def test_empty_diagonal(self):
        with pytest.raises(ValueError):
            sim_quadratic_form_phase([], 5)


class TestQuantumCondition:
    """测试按谓词选择的条件变换"""

    @pytest.fixture
    def f0_transform(self):
        """用条件变换拼出 F_0：x = 0 与 x ≠ 0 两个分支"""
        f0 = f_alpha_matrix(0, 5)
        return f0, sim_quantum_condition(lambda x: x == 0, lambda x: f0[:, x], lambda x: f0[:, 0], 5)

    def test_builds_f0(self, f0_transform):
        f0, transform = f0_transform
        layout = RegisterLayout.single("z", 1, 5)
        state = SparseState.from_dense(layout, np.arange(1, 6))
        result, probability = transform(state, 0)
        assert distance_up_to_phase_scale(result, apply_to_register(state, "z", f0)) < 1e-9
        assert 0 < probability <= 1

    def test_single_branch_probability(self, f0_transform):
        """所有基态落在同一分支时 Hadamard 后选择概率为 1/2"""
        _, transform = f0_transform
        state = SparseState.basis(RegisterLayout.single("z", 1, 5), (3,))
        _, probability = transform(state, 0)
        assert probability == pytest.approx(0.5)

    def test_acts_on_selected_digit(self):
        shift = sim_quantum_condition(
            lambda x: x % 2, lambda x: np.eye(5)[(x + 1) % 5], lambda x: np.eye(5)[(x + 2) % 5], 5
        )
        state = SparseState.basis(RegisterLayout.single("x", 2, 5), (1, 2))
        result, _ = shift(state, 1)
        assert list(result.amplitudes) == [(1, 3)]

    def test_index_out_of_range(self, f0_transform):
        _, transform = f0_transform
        with pytest.raises(IndexError):
            transform(SparseState.basis(RegisterLayout.single("z", 1, 5), (0,)), 1)

    def test_branch_vector_length(self):
        transform = sim_quantum_condition(lambda x: True, lambda x: np.ones(5), lambda x: np.ones(3), 5)
        with pytest.raises(ValueError):
            transform(SparseState.basis(RegisterLayout.single("z", 1, 5), (0,)), 0)
