"""DQI 态的三种构造

- build_direct：枚举 x，按满足数直接写出振幅
- build_qft_form：在傅里叶侧用 F_α 列拼出 QFT 后的态，再作逆QFT
- run_pipeline：逐步模拟八步制备流程，保留每一步的快照
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product
from math import comb, prod, sqrt
from typing import Protocol, Sequence

import numpy as np

from qdqi.core.errors import BudgetExceededError, DecoderError, PipelinePreconditionError
from qdqi.core.config import resolve_budget
from qdqi.core.instance import QuadSatInstance, WeightVector
from qdqi.decoding.decoder import DecodeRecord, SyndromeCode, SyndromeDecoder
from qdqi.model.quadsat import constraint_values, enumerate_assignments, satisfied_counts
from qdqi.quantum.statevector import (
    RegisterLayout,
    SparseState,
    apply_single_digit_operator,
    apply_to_register,
    f_alpha_matrix,
    qft,
)
from qdqi.spectral.tridiagonal import optimal_weights
from qdqi.utils.logger import get_logger

logger = get_logger(__name__)

PIPELINE_STEPS = {
    1: "prepare_weights",
    2: "prepare_dicke",
    3: "uncompute_weight",
    4: "create_error_register",
    5: "compute_syndrome",
    6: "uncompute_error_by_decoding",
    7: "apply_f0",
    8: "apply_qft",
}


class Decoder(Protocol):
    def decode(self, syndrome: Sequence[int]) -> tuple[int, ...]: ...


def elementary_symmetric_values(g_sat: float, g_unsat: float, m: int, k: int) -> np.ndarray:
    """
    e_k 在 s 个变量取 g_sat、其余取 g_unsat 时的值，s = 0..m

    即 (1 + g_sat·t)^s (1 + g_unsat·t)^{m−s} 中 t^k 的系数。
    """
    values = np.zeros(m + 1)
    for s in range(m + 1):
        values[s] = sum(
            comb(s, j) * g_sat**j * comb(m - s, k - j) * g_unsat ** (k - j)
            for j in range(max(0, k - (m - s)), min(k, s) + 1)
        )
    return values


def elementary_symmetric_brute(values: Sequence[float], k: int) -> float:
    """逐子集求和的 e_k"""
    return float(sum(prod(subset) for subset in combinations(values, k)))


def _validate_weights(inst: QuadSatInstance, w: WeightVector) -> None:
    if w.ell >= inst.m:
        raise ValueError(f"要求 ℓ < m，收到 ℓ={w.ell}, m={inst.m}")


def dqi_polynomial_values(inst: QuadSatInstance, w: WeightVector) -> np.ndarray:
    """
    P(s) = Σ_k w_k·e_k(s)/√(p^{n−k}·C(m,k))，s = 0..m

    所有满足 s 个约束的 x 共享振幅 P(s)。
    """
    _validate_weights(inst, w)
    spectrum = constraint_values(inst)
    total = np.zeros(inst.m + 1)
    for k, weight in enumerate(w.w):
        prefactor = 1.0 / sqrt(inst.p ** (inst.n - k) * comb(inst.m, k))
        total += weight * prefactor * elementary_symmetric_values(spectrum.g_sat, spectrum.g_unsat, inst.m, k)
    return total


def default_weights(inst: QuadSatInstance, ell: int) -> WeightVector:
    """A^{(m,ℓ,d)} 最大特征向量给出的最优权重"""
    _, w = optimal_weights(inst.m, ell, inst.r, inst.p)
    return w


def position_layout(inst: QuadSatInstance) -> RegisterLayout:
    return RegisterLayout.single("x", inst.n, inst.p)


def build_direct(inst: QuadSatInstance, w: WeightVector, budget: int | None = None) -> SparseState:
    """
    直接构造 Σ_k w_k|P^{(k)}⟩

    对任意 B 和对角 C 成立，因为 g_i 只取两个值，e_k 只依赖满足数 s。

    Raises:
        BudgetExceededError: p^n 超过枚举预算
    """
    amplitudes_by_s = dqi_polynomial_values(inst, w)
    assignments = enumerate_assignments(inst.n, inst.p, budget)
    amplitudes = amplitudes_by_s[satisfied_counts(inst, assignments)]
    logger.debug(f"直接构造: {len(assignments)} 个基态, ℓ={w.ell}")
    return SparseState.from_dense(position_layout(inst), amplitudes)


def build_qft_form(inst: QuadSatInstance, w: WeightVector, budget: int | None = None) -> SparseState:
    """
    由傅里叶侧表达式构造

    Σ_k (w_k/√C(m,k)) Σ_{|y|=k} Π_i g̃_i(y_i) ⊗_j F_{(Bᵀy)_j}|(Dᵀy)_j⟩ 是DQI态的QFT，
    对其作逆QFT得到位置基下的DQI态。
    """
    _validate_weights(inst, w)
    budget = resolve_budget(budget)
    p, n, m = inst.p, inst.n, inst.m
    if p**n > budget:
        raise BudgetExceededError(p**n, budget, f"F_{p}^{n} 稠密向量")
    spectrum = constraint_values(inst)
    columns = {alpha: f_alpha_matrix(alpha, p) for alpha in range(p)}

    fourier_side = np.zeros((p,) * n, dtype=complex)
    terms = 0
    for k, weight in enumerate(w.w):
        if weight == 0:
            continue
        prefactor = weight / sqrt(comb(m, k))
        for support in combinations(range(m), k):
            rows = list(support)
            for values in product(range(1, p), repeat=k):
                coefficient = prefactor * prod(spectrum.g_tilde[i, y] for i, y in zip(rows, values))
                if abs(coefficient) < 1e-15:
                    continue
                y = np.array(values, dtype=np.int64)
                alpha = (inst.B[rows].T @ y) % p if k else np.zeros(n, dtype=np.int64)
                beta = (inst.D[rows].T @ y) % p if k else np.zeros(n, dtype=np.int64)
                factor = columns[int(alpha[0])][:, int(beta[0])]
                for j in range(1, n):
                    factor = np.multiply.outer(factor, columns[int(alpha[j])][:, int(beta[j])])
                fourier_side += coefficient * factor
                terms += 1
    logger.debug(f"QFT形式构造: {terms} 项")
    state = SparseState.from_dense(position_layout(inst), fourier_side.ravel())
    return qft(state, "x", inverse=True)


@dataclass
class PipelineTrace:
    """八步流程的快照与记录"""

    snapshots: dict[int, SparseState] = field(default_factory=dict)
    probabilities: dict[str, float] = field(default_factory=dict)
    decoder_success: bool = False
    decoder_records: list[DecodeRecord] = field(default_factory=list)

    @property
    def final(self) -> SparseState:
        return self.snapshots[max(self.snapshots)]

    def step_name(self, step: int) -> str:
        return PIPELINE_STEPS[step]


def _check_pipeline_preconditions(inst: QuadSatInstance, w: WeightVector) -> None:
    if inst.has_linear_part:
        raise PipelinePreconditionError("流水线要求所有 b_i = 0（B 为零矩阵），该实例含线性部分")
    _validate_weights(inst, w)
    if w.ell >= inst.p:
        raise PipelinePreconditionError(f"权重寄存器用一位 F_{inst.p} 数字保存 k，要求 ℓ < p，收到 ℓ={w.ell}")


def _prepare_dicke(state: SparseState, layout: RegisterLayout, m: int) -> SparseState:
    """|k⟩ → |k⟩|D_{m,k}⟩，μ 寄存器初始为 |0…0⟩"""
    amplitudes: dict[tuple[int, ...], complex] = {}
    for (k,), amp in state:
        norm = 1 / sqrt(comb(m, k))
        for support in combinations(range(m), k):
            mu = [0] * m
            for i in support:
                mu[i] = 1
            amplitudes[(k, *mu)] = amp * norm
    return SparseState(amplitudes, layout)


def _g_matrix(g_tilde_row: np.ndarray, p: int) -> np.ndarray:
    """G_i：|0⟩ → |0⟩，|1⟩ → Σ_y g̃_i(y)|y⟩，其余列取单位"""
    matrix = np.eye(p, dtype=complex)
    matrix[:, 1] = g_tilde_row
    return matrix


def run_pipeline(inst: QuadSatInstance, w: WeightVector, decoder: Decoder | None = None) -> PipelineTrace:
    """
    模拟八步制备流程

    Args:
        inst: B = 0 的实例
        w: 权重，ℓ < min(m, p)
        decoder: 带 decode(syndrome) 方法的译码器，默认使用半径 ℓ 的暴力译码

    Returns:
        PipelineTrace，最后一步的快照即DQI态

    Raises:
        PipelinePreconditionError: 实例含线性部分或 ℓ 过大
        DecoderError: 某个综合征无法唯一译码，异常携带该综合征
    """
    _check_pipeline_preconditions(inst, w)
    p, n, m = inst.p, inst.n, inst.m
    trace = PipelineTrace()
    if decoder is None:
        decoder = SyndromeDecoder(SyndromeCode.for_instance(inst, w.ell, linear=False))

    # 1. 权重寄存器 Σ_k w_k|k⟩
    weight_layout = RegisterLayout.single("k", 1, p)
    state = SparseState({(k,): weight for k, weight in enumerate(w.w)}, weight_layout)
    trace.snapshots[1] = state

    # 2. 以 k 为条件制备 Dicke 态 |D_{m,k}⟩
    dicke_layout = RegisterLayout((("k", 1), ("mu", m)), p)
    state = _prepare_dicke(state, dicke_layout, m)
    trace.snapshots[2] = state

    # 3. k ← k − |μ|，之后 k 寄存器应全为 0
    mu_layout = RegisterLayout.single("mu", m, p)
    state = state.map_basis(lambda d: ((d[0] - sum(d[1:])) % p,) + d[1:])
    kept, retained = state.project(lambda d: d[0] == 0)
    state = kept.map_basis(lambda d: d[1:], mu_layout)
    trace.probabilities["uncompute_weight"] = retained
    trace.snapshots[3] = state

    # 4. 在每一位上作用 G_i
    spectrum = constraint_values(inst)
    error_layout = RegisterLayout.single("y", m, p)
    state = SparseState(state.amplitudes, error_layout)
    for i in range(m):
        state = apply_single_digit_operator(state, i, _g_matrix(spectrum.g_tilde[i], p))
    trace.snapshots[4] = state

    # 5. 计算综合征 Dᵀy
    syndrome_layout = RegisterLayout((("y", m), ("syndrome", n)), p)
    transpose = inst.D.T

    def with_syndrome(digits: tuple[int, ...]) -> tuple[int, ...]:
        return digits + tuple(int(v) for v in (transpose @ np.array(digits)) % p)

    state = state.map_basis(with_syndrome, syndrome_layout)
    trace.snapshots[5] = state

    # 6. 译码清除 y
    only_syndrome = RegisterLayout.single("syndrome", n, p)
    uncomputed: dict[tuple[int, ...], complex] = {}
    for digits, amp in state:
        y, syndrome = digits[:m], digits[m:]
        try:
            decoded = decoder.decode(syndrome)
        except DecoderError as e:
            logger.error(f"第6步译码失败: {e}")
            raise
        if tuple(decoded) != tuple(y):
            raise DecoderError(syndrome, f"译码结果 {list(decoded)} 与错误向量 {list(y)} 不一致")
        uncomputed[syndrome] = uncomputed.get(syndrome, 0j) + amp
    before = state.norm() ** 2
    state = SparseState(uncomputed, only_syndrome)
    trace.probabilities["uncompute_error"] = state.norm() ** 2 / before
    trace.decoder_success = True
    trace.decoder_records = list(getattr(decoder, "records", []))
    trace.snapshots[6] = state

    # 7. 每一位作用 F_0
    state = SparseState(state.amplitudes, RegisterLayout.single("z", n, p))
    state = apply_to_register(state, "z", f_alpha_matrix(0, p))
    trace.snapshots[7] = state

    # 8. QFT
    state = qft(SparseState(state.amplitudes, RegisterLayout.single("x", n, p)), "x")
    trace.snapshots[8] = state
    logger.debug(f"流水线完成: 末态 {len(state)} 个基态, 综合征 {len(uncomputed)} 个")
    return trace
