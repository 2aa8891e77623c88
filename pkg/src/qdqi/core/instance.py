"""max-QUADSAT 实例及派生数据结构"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Sequence

import numpy as np

from qdqi.core.field import PrimeModulus, as_modulus


def _readonly(values: Sequence[Sequence[int]] | np.ndarray) -> np.ndarray:
    array = np.array(values, dtype=np.int64)
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class QuadSatInstance:
    """
    max-QUADSAT 实例

    第i个约束为 f_i(b_i·x + Σ_j D_ij x_j²)，f_i 在 F_i 上取 +1，否则取 -1。
    """

    modulus: PrimeModulus
    B: np.ndarray  # m×n，第i行为 b_i
    D: np.ndarray  # m×n，第i行为 C_i 的对角线
    F: tuple[tuple[int, ...], ...]  # F_i = f_i^{-1}(+1)，升序
    seed: int | None = None
    kind: str = "quadsat"

    def __post_init__(self) -> None:
        object.__setattr__(self, "modulus", as_modulus(self.modulus))
        object.__setattr__(self, "B", _readonly(self.B))
        object.__setattr__(self, "D", _readonly(self.D))
        object.__setattr__(self, "F", tuple(tuple(sorted(int(v) for v in subset)) for subset in self.F))
        self._validate()

    def _validate(self) -> None:
        p = self.p
        if self.B.ndim != 2 or self.D.ndim != 2:
            raise ValueError("B和D必须是二维矩阵")
        if self.B.shape != self.D.shape:
            raise ValueError(f"B的形状 {self.B.shape} 与 D的形状 {self.D.shape} 不一致")
        m, n = self.B.shape
        if m < 1 or n < 1:
            raise ValueError(f"要求 m ≥ 1 且 n ≥ 1，收到 m={m}, n={n}")
        for name, matrix in (("B", self.B), ("D", self.D)):
            if matrix.size and (matrix.min() < 0 or matrix.max() >= p):
                raise ValueError(f"{name}的元素必须在 [0, {p}) 内")
        if len(self.F) != m:
            raise ValueError(f"F的个数 {len(self.F)} 与约束数 m={m} 不一致")
        sizes = {len(subset) for subset in self.F}
        if len(sizes) != 1:
            raise ValueError(f"所有 F_i 的大小必须相同，收到 {sorted(sizes)}")
        r = sizes.pop()
        if not 1 <= r <= p - 1:
            raise ValueError(f"r 必须在 1..{p - 1} 内，收到 r={r}")
        for i, subset in enumerate(self.F):
            if len(set(subset)) != r:
                raise ValueError(f"F_{i} 含重复元素: {list(subset)}")
            if subset[0] < 0 or subset[-1] >= p:
                raise ValueError(f"F_{i} 的元素必须在 [0, {p}) 内")

    @property
    def p(self) -> int:
        return self.modulus.p

    @property
    def m(self) -> int:
        return int(self.B.shape[0])

    @property
    def n(self) -> int:
        return int(self.B.shape[1])

    @property
    def r(self) -> int:
        return len(self.F[0])

    @property
    def is_linear(self) -> bool:
        """没有二次部分（max-LINSAT）"""
        return not self.D.any()

    @property
    def has_linear_part(self) -> bool:
        return bool(self.B.any())

    @cached_property
    def membership(self) -> np.ndarray:
        """m×p 布尔表，membership[i, v] 表示 v ∈ F_i"""
        table = np.zeros((self.m, self.p), dtype=bool)
        for i, subset in enumerate(self.F):
            table[i, list(subset)] = True
        table.setflags(write=False)
        return table

    def rank(self, i: int) -> int:
        """C_i 的秩，即第i行对角线上非零元素个数"""
        return int(np.count_nonzero(self.D[i]))


@dataclass(frozen=True)
class ConstraintSpectrum:
    """平移缩放后的约束函数 g_i 及其傅里叶变换"""

    f_mean: float
    phi: float
    g_sat: float
    g_unsat: float
    g_tilde: np.ndarray  # m×p 复数表，g_tilde[i, y] = g̃_i(y)


@dataclass(frozen=True)
class SatDistribution:
    """按满足约束数 s 统计的赋值个数"""

    counts: tuple[int, ...]
    total: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "counts", tuple(int(c) for c in self.counts))
        if any(c < 0 for c in self.counts):
            raise ValueError("计数不能为负")
        if sum(self.counts) != self.total:
            raise ValueError(f"计数之和 {sum(self.counts)} 不等于总数 {self.total}")

    @property
    def m(self) -> int:
        return len(self.counts) - 1

    def probabilities(self) -> list[Fraction]:
        """精确的有理数分布"""
        return [Fraction(c, self.total) for c in self.counts]


@dataclass(frozen=True)
class WeightVector:
    """DQI 多项式在 ℓ+1 个分量上的系数 w_0..w_ℓ"""

    w: tuple[float, ...]

    def __post_init__(self) -> None:
        values = tuple(float(v) for v in np.asarray(self.w, dtype=float).ravel())
        if not values:
            raise ValueError("权重向量至少包含 w_0")
        if not np.all(np.isfinite(values)):
            raise ValueError(f"权重必须是有限实数: {values}")
        object.__setattr__(self, "w", values)

    @property
    def ell(self) -> int:
        return len(self.w) - 1

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.w))

    def is_unit(self, tol: float = 1e-9) -> bool:
        return abs(self.norm - 1.0) <= tol

    def normalized(self) -> "WeightVector":
        norm = self.norm
        if norm == 0:
            raise ValueError("零权重向量无法归一化")
        return WeightVector(tuple(v / norm for v in self.w))

    def as_array(self) -> np.ndarray:
        return np.array(self.w)

    def __len__(self) -> int:
        return len(self.w)

    def __getitem__(self, k: int) -> float:
        return self.w[k]
