"""F_p 取值寄存器上的稀疏复态矢量

态是 "数字元组 → 复振幅" 的字典，单个数字上的算符用 p×p 稠密矩阵表示。
所有算符返回新态，原态不变。
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterator, Mapping, Sequence

import numpy as np

from qdqi.core.errors import DimensionMismatchError, ZeroNormError
from qdqi.core.instance import QuadSatInstance
from qdqi.gauss.sums import general_quad_sum_value, omega_table
from qdqi.model.quadsat import satisfied_counts

PRUNE_THRESHOLD = 1e-14

Digits = tuple[int, ...]


@dataclass(frozen=True)
class RegisterLayout:
    """寄存器布局：若干 (名称, 位数) 对，共享同一个模数 p"""

    registers: tuple[tuple[str, int], ...]
    p: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "registers", tuple((str(name), int(size)) for name, size in self.registers))
        names = [name for name, _ in self.registers]
        if len(set(names)) != len(names):
            raise ValueError(f"寄存器名称重复: {names}")
        if any(size < 1 for _, size in self.registers):
            raise ValueError("每个寄存器至少包含一位")

    @classmethod
    def single(cls, name: str, size: int, p: int) -> RegisterLayout:
        return cls(((name, size),), p)

    @property
    def total_digits(self) -> int:
        return sum(size for _, size in self.registers)

    @property
    def names(self) -> list[str]:
        return [name for name, _ in self.registers]

    def digit_range(self, name: str) -> range:
        """寄存器在数字元组中占据的下标区间"""
        offset = 0
        for reg_name, size in self.registers:
            if reg_name == name:
                return range(offset, offset + size)
            offset += size
        raise KeyError(f"寄存器不存在: {name}")


@dataclass(frozen=True, eq=False)
class SparseState:
    """稀疏态矢量，振幅小于 PRUNE_THRESHOLD 的项不保存"""

    amplitudes: Mapping[Digits, complex]
    layout: RegisterLayout
    _pruned: bool = field(default=False, repr=False)

    def __post_init__(self) -> None:
        if not self._pruned:
            k, p = self.layout.total_digits, self.layout.p
            cleaned: dict[Digits, complex] = {}
            for digits, amp in self.amplitudes.items():
                key = tuple(int(d) for d in digits)
                if len(key) != k or any(not 0 <= d < p for d in key):
                    raise DimensionMismatchError(f"基态 {key} 与布局 {self.layout.registers} (p={p}) 不符")
                if abs(amp) >= PRUNE_THRESHOLD:
                    cleaned[key] = complex(amp)
            object.__setattr__(self, "amplitudes", cleaned)
            object.__setattr__(self, "_pruned", True)

    # ----- 构造 -----

    @classmethod
    def basis(cls, layout: RegisterLayout, digits: Sequence[int], amplitude: complex = 1.0) -> SparseState:
        return cls({tuple(digits): amplitude}, layout)

    @classmethod
    def from_dense(cls, layout: RegisterLayout, vector: np.ndarray) -> SparseState:
        """由字典序排列的稠密向量构造"""
        vector = np.asarray(vector, dtype=complex).ravel()
        shape = (layout.p,) * layout.total_digits
        if vector.size != layout.p**layout.total_digits:
            raise DimensionMismatchError(f"向量长度 {vector.size} 与布局维数 {layout.p ** layout.total_digits} 不符")
        nonzero = np.flatnonzero(np.abs(vector) >= PRUNE_THRESHOLD)
        digits = np.stack(np.unravel_index(nonzero, shape), axis=1) if nonzero.size else np.zeros((0, len(shape)), int)
        return cls({tuple(int(d) for d in row): vector[i] for row, i in zip(digits, nonzero)}, layout)

    # ----- 基本量 -----

    def __len__(self) -> int:
        return len(self.amplitudes)

    def __iter__(self) -> Iterator[tuple[Digits, complex]]:
        return iter(sorted(self.amplitudes.items()))

    def amplitude(self, digits: Sequence[int]) -> complex:
        return self.amplitudes.get(tuple(digits), 0j)

    def norm(self) -> float:
        return float(np.sqrt(sum(abs(a) ** 2 for a in self.amplitudes.values())))

    def normalized(self) -> SparseState:
        norm = self.norm()
        if norm == 0:
            raise ZeroNormError("零范数的态无法归一化")
        return self.scaled(1 / norm)

    def scaled(self, factor: complex) -> SparseState:
        return SparseState({k: v * factor for k, v in self.amplitudes.items()}, self.layout)

    def inner(self, other: SparseState) -> complex:
        """⟨self|other⟩"""
        _require_same_layout(self, other)
        small, large = (self, other) if len(self) <= len(other) else (other, self)
        total = sum(np.conj(self.amplitude(k)) * other.amplitude(k) for k in small.amplitudes if k in large.amplitudes)
        return complex(total)

    def to_dense(self) -> np.ndarray:
        vector = np.zeros(self.layout.p**self.layout.total_digits, dtype=complex)
        shape = (self.layout.p,) * self.layout.total_digits
        for digits, amp in self.amplitudes.items():
            vector[np.ravel_multi_index(digits, shape)] = amp
        return vector

    # ----- 基变换 -----

    def map_basis(self, func: Callable[[Digits], Digits], layout: RegisterLayout | None = None) -> SparseState:
        """把每个基态 |d⟩ 映到 |func(d)⟩，碰撞的振幅相加"""
        target: dict[Digits, complex] = defaultdict(complex)
        for digits, amp in self.amplitudes.items():
            target[tuple(func(digits))] += amp
        return SparseState(dict(target), layout or self.layout)

    def project(self, predicate: Callable[[Digits], bool]) -> tuple[SparseState, float]:
        """
        投影到满足谓词的基态上

        Returns:
            (未归一化的投影态, 投影前后的平方范数之比)
        """
        before = self.norm() ** 2
        if before == 0:
            raise ZeroNormError("零范数的态无法投影")
        kept = SparseState({k: v for k, v in self.amplitudes.items() if predicate(k)}, self.layout)
        return kept, kept.norm() ** 2 / before


def _require_same_layout(s1: SparseState, s2: SparseState) -> None:
    if s1.layout != s2.layout:
        raise DimensionMismatchError(f"布局不一致: {s1.layout} 与 {s2.layout}")


@lru_cache(maxsize=None)
def qft_matrix(p: int, inverse: bool = False) -> np.ndarray:
    """单个数字上的QFT矩阵，M[y, x] = ω_p^{±xy}/√p"""
    x = np.arange(p)
    phases = omega_table(p)[np.outer(x, x) % p]
    matrix = (np.conj(phases) if inverse else phases) / np.sqrt(p)
    matrix.setflags(write=False)
    return matrix


def apply_single_digit_operator(state: SparseState, index: int, matrix: np.ndarray) -> SparseState:
    """
    在第 index 位上作用 p×p 矩阵，其他位不变

    Raises:
        IndexError: index 越界
        DimensionMismatchError: 矩阵不是 p×p
    """
    p = state.layout.p
    if not 0 <= index < state.layout.total_digits:
        raise IndexError(f"数字下标 {index} 越界（共 {state.layout.total_digits} 位）")
    matrix = np.asarray(matrix)
    if matrix.shape != (p, p):
        raise DimensionMismatchError(f"矩阵形状 {matrix.shape} 与 p={p} 不符")

    result: dict[Digits, complex] = defaultdict(complex)
    for digits, amp in state.amplitudes.items():
        column = matrix[:, digits[index]]
        for z in np.flatnonzero(column):
            new_digits = digits[:index] + (int(z),) + digits[index + 1 :]
            result[new_digits] += amp * column[z]
    return SparseState(dict(result), state.layout)


def apply_to_register(state: SparseState, register: str, matrix: np.ndarray) -> SparseState:
    """在寄存器的每一位上作用同一个单数字算符"""
    for index in state.layout.digit_range(register):
        state = apply_single_digit_operator(state, index, matrix)
    return state


def qft(state: SparseState, register: str, inverse: bool = False) -> SparseState:
    """
    对寄存器逐位作QFT

    正变换核为 ω_p^{xy}/√p，逆变换使用共轭核。
    """
    return apply_to_register(state, register, qft_matrix(state.layout.p, inverse))


@lru_cache(maxsize=None)
def _f_alpha_cached(alpha: int, p: int) -> np.ndarray:
    matrix = np.zeros((p, p), dtype=complex)
    for x in range(p):
        for z in range(p):
            matrix[z, x] = general_quad_sum_value(-x, z - alpha, 0, p)
    matrix.setflags(write=False)
    return matrix


def f_alpha_matrix(alpha: int, p: int) -> np.ndarray:
    """
    条件二次相位算符 F_α

    第 z 行第 x 列为 Σ_t ω_p^{(z−α)t − x t²}：x = 0 列为 p|α⟩，
    x ≠ 0 列为 χ(−x)·g(1;p)·ω_p^{x⁻¹(z−α)²/4}。
    """
    return _f_alpha_cached(int(alpha) % p, p)


def distance_up_to_phase_scale(s1: SparseState, s2: SparseState) -> float:
    """
    min_c ‖s1 − c·s2‖/‖s1‖

    最优 c = ⟨s2,s1⟩/⟨s2,s2⟩，直接计算投影残差。

    Raises:
        DimensionMismatchError: 布局不同
        ZeroNormError: 任一态范数为零
    """
    _require_same_layout(s1, s2)
    n1, n2 = s1.norm(), s2.norm()
    if n1 == 0 or n2 == 0:
        raise ZeroNormError("比较的态范数为零")
    c = s2.inner(s1) / n2**2
    keys = set(s1.amplitudes) | set(s2.amplitudes)
    residual = np.sqrt(sum(abs(s1.amplitude(k) - c * s2.amplitude(k)) ** 2 for k in keys))
    return float(residual / n1)


def measure_distribution(
    state: SparseState,
    classifier: Callable[[Digits], int],
    size: int | None = None,
) -> np.ndarray:
    """
    按 classifier 取值聚合的玻恩概率

    Args:
        state: 非零态
        classifier: 基态 → 非负整数
        size: 输出数组长度，默认取最大类别 + 1

    Raises:
        ZeroNormError: 态范数为零
    """
    norm_sq = state.norm() ** 2
    if norm_sq == 0:
        raise ZeroNormError("零范数的态没有测量分布")
    buckets: dict[int, float] = defaultdict(float)
    for digits, amp in state.amplitudes.items():
        buckets[int(classifier(digits))] += abs(amp) ** 2
    length = size if size is not None else max(buckets) + 1
    probabilities = np.zeros(length)
    for key in sorted(buckets):
        probabilities[key] += buckets[key] / norm_sq
    return probabilities


def satisfied_distribution(state: SparseState, inst: QuadSatInstance) -> np.ndarray:
    """以满足约束数为类别的测量分布，长度 m+1"""
    if state.layout.total_digits != inst.n or state.layout.p != inst.p:
        raise DimensionMismatchError(f"态的布局 {state.layout.registers} 与实例 (n={inst.n}, p={inst.p}) 不符")
    keys = sorted(state.amplitudes)
    norm_sq = state.norm() ** 2
    if norm_sq == 0:
        raise ZeroNormError("零范数的态没有测量分布")
    counts = satisfied_counts(inst, np.array(keys, dtype=np.int64))
    weights = np.array([abs(state.amplitudes[k]) ** 2 for k in keys]) / norm_sq
    return np.bincount(counts, weights=weights, minlength=inst.m + 1)


def expectation_satisfied(state: SparseState, inst: QuadSatInstance) -> float:
    """Σ_s s·Pr[s]"""
    probabilities = satisfied_distribution(state, inst)
    return float(np.dot(np.arange(inst.m + 1), probabilities))
