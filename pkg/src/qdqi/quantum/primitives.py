"""相位制备原语的逐步模拟

后选择通过投影实现，成功概率记为投影前后的平方范数之比，各阶段概率相乘得到联合概率。
"""

from __future__ import annotations

from typing import Callable, Sequence

import numpy as np

from qdqi.core.field import FieldElement, as_modulus, is_plus_branch, mod_inverse, nonresidue, sqrt_invertible_int
from qdqi.quantum.statevector import RegisterLayout, SparseState, apply_single_digit_operator, qft
from qdqi.utils.logger import get_logger

logger = get_logger(__name__)

Transformer = Callable[[SparseState, int], tuple[SparseState, float]]


def _hadamard_block(p: int) -> np.ndarray:
    """在 {|0⟩, |1⟩} 上作 Hadamard，其余基态不变"""
    matrix = np.eye(p, dtype=complex)
    matrix[:2, :2] = np.array([[1, 1], [1, -1]]) / np.sqrt(2)
    return matrix


def quadratic_phase_target(a: int, p: int, shift: int = 0) -> SparseState:
    """目标态 Σ_x ω_p^{a(x+shift)²}|x⟩（未归一化）"""
    x = np.arange(p)
    phases = np.exp(2j * np.pi * ((a * (x + shift) ** 2) % p) / p)
    return SparseState.from_dense(RegisterLayout.single("x", 1, p), phases)


def sim_quadratic_phase(a: int | FieldElement, p: int) -> tuple[SparseState, float]:
    """
    模拟二次相位制备 Σ_x ω_p^{a x²}|x⟩

    分支寄存器选择 QFT|a⟩ 或 QFT|aν⁻¹⟩，经可逆平方根重标记后，标志位记录 s 所在的分支；
    后选择标志位与分支一致、清除标志位，再对分支寄存器作 Hadamard 并后选择 0。

    Returns:
        (归一化的后选择态, 联合成功概率)
    """
    p = as_modulus(p).p
    a = int(a) % p
    nu_inverse = mod_inverse(nonresidue(p), p)
    layout = RegisterLayout((("x", 1), ("flag", 1), ("branch", 1)), p)
    half = 1 / np.sqrt(2)
    state = SparseState({(a, 0, 0): half, (a * nu_inverse % p, 0, 1): half}, layout)

    state = qft(state, "x")
    state = state.map_basis(lambda d: (sqrt_invertible_int(d[0], p), d[1], d[2]))
    state = state.map_basis(lambda d: (d[0], (d[1] + (0 if is_plus_branch(d[0], p) else 1)) % p, d[2]))

    state, flag_probability = state.project(lambda d: d[1] == d[2])
    state = state.map_basis(lambda d: (d[0], (d[1] - d[2]) % p, d[2]))

    state = apply_single_digit_operator(state, 2, _hadamard_block(p))
    state, branch_probability = state.project(lambda d: d[2] == 0)

    probability = flag_probability * branch_probability
    logger.debug(f"二次相位 a={a}, p={p}: 标志位 {flag_probability:.6g}, 分支 {branch_probability:.6g}")
    result = state.map_basis(lambda d: d[:1], RegisterLayout.single("x", 1, p))
    return result.normalized(), probability


def sim_shifted_quadratic_phase(a: int | FieldElement, b: int | FieldElement, p: int) -> tuple[SparseState, float]:
    """
    模拟平移二次相位 Σ_x ω_p^{a(x+b)²}|x⟩

    在二次相位态旁放置 |b⟩，受控减法 x ← x − b 后对 b 寄存器作QFT并后选择 0（概率 1/p）。

    Returns:
        (归一化的后选择态, 二次相位概率与清除概率之积)
    """
    p = as_modulus(p).p
    b = int(b) % p
    base, base_probability = sim_quadratic_phase(a, p)
    layout = RegisterLayout((("x", 1), ("shift", 1)), p)
    state = base.map_basis(lambda d: (d[0], b), layout)
    state = state.map_basis(lambda d: ((d[0] - d[1]) % p, d[1]))
    state = qft(state, "shift")
    state, uncompute_probability = state.project(lambda d: d[1] == 0)
    result = state.map_basis(lambda d: d[:1], RegisterLayout.single("x", 1, p))
    return result.normalized(), base_probability * uncompute_probability


def sim_quadratic_form_phase(D_diag: Sequence[int | FieldElement], p: int) -> SparseState:
    """对角二次型相位 Σ_x ω_p^{xᵀDx}|x⟩，逐位张量积"""
    p = as_modulus(p).p
    if not D_diag:
        raise ValueError("对角线至少包含一个元素")
    vector = np.ones(1, dtype=complex)
    for d in D_diag:
        factor, _ = sim_quadratic_phase(d, p)
        vector = np.kron(vector, factor.to_dense())
    return SparseState.from_dense(RegisterLayout.single("x", len(D_diag), p), vector).normalized()


def sim_quantum_condition(
    predicate: Callable[[int], bool | int],
    U0: Callable[[int], np.ndarray],
    U1: Callable[[int], np.ndarray],
    p: int,
) -> Transformer:
    """
    按谓词选择作用 U0 或 U1 的变换

    辅助位记录 P(x)，受控作用 U_{P(x)} 后无法再反算 P(x)，改为对辅助位作 Hadamard 并后选择 0。

    Args:
        predicate: 单个数字上的谓词
        U0, U1: 数字值 → 长度为 p 的振幅向量
        p: 模数

    Returns:
        transformer(state, index) -> (归一化的后选择态, Hadamard 后选择概率)
    """
    p = as_modulus(p).p
    branches = (U0, U1)

    def transform(state: SparseState, index: int) -> tuple[SparseState, float]:
        layout = state.layout
        if not 0 <= index < layout.total_digits:
            raise IndexError(f"数字下标 {index} 越界（共 {layout.total_digits} 位）")
        extended = RegisterLayout(layout.registers + (("condition", 1),), p)
        marked = state.map_basis(lambda d: d + (1 if predicate(d[index]) else 0,), extended)

        applied: dict[tuple[int, ...], complex] = {}
        for digits, amp in marked:
            column = np.asarray(branches[digits[-1]](digits[index]), dtype=complex)
            if column.shape != (p,):
                raise ValueError(f"分支映射必须返回长度为 {p} 的向量，收到 {column.shape}")
            for z in np.flatnonzero(np.abs(column) > 0):
                key = digits[:index] + (int(z),) + digits[index + 1 :]
                applied[key] = applied.get(key, 0j) + amp * column[z]
        conditioned = SparseState(applied, extended)

        conditioned = apply_single_digit_operator(conditioned, extended.total_digits - 1, _hadamard_block(p))
        kept, probability = conditioned.project(lambda d: d[-1] == 0)
        result = kept.map_basis(lambda d: d[:-1], layout)
        return result.normalized(), probability

    return transform
