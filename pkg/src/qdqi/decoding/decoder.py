"""有界重量错误向量的综合征译码

H = Dᵀ（或线性实例的 Bᵀ）把错误向量 y ∈ F_p^m 映到综合征 Hy ∈ F_p^n。
参考实现按重量 0..ℓ、支撑字典序、非零取值字典序逐一枚举。
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations, product
from math import comb
from typing import Iterator, Sequence

import numpy as np

from qdqi.core.config import resolve_budget
from qdqi.core.errors import AmbiguousSyndromeError, BudgetExceededError, SyndromeNotFoundError
from qdqi.core.instance import QuadSatInstance
from qdqi.utils.logger import get_logger

logger = get_logger(__name__)

Vector = tuple[int, ...]


@dataclass(frozen=True, eq=False)
class SyndromeCode:
    """校验矩阵 H（n×m）与译码半径 ℓ"""

    H: np.ndarray
    p: int
    max_weight: int

    def __post_init__(self) -> None:
        matrix = np.array(self.H, dtype=np.int64) % self.p
        if matrix.ndim != 2:
            raise ValueError("H 必须是二维矩阵")
        if self.max_weight < 0:
            raise ValueError(f"译码半径必须非负，收到 {self.max_weight}")
        matrix.setflags(write=False)
        object.__setattr__(self, "H", matrix)

    @classmethod
    def for_instance(cls, inst: QuadSatInstance, max_weight: int, linear: bool | None = None) -> SyndromeCode:
        """
        由实例构造综合征码

        Args:
            inst: 实例
            max_weight: 译码半径 ℓ
            linear: 为真时使用 Bᵀ；默认对 max-LINSAT 实例使用 Bᵀ，其余使用 Dᵀ
        """
        use_linear = inst.is_linear if linear is None else linear
        matrix = inst.B if use_linear else inst.D
        return cls(H=matrix.T, p=inst.p, max_weight=max_weight)

    @property
    def n(self) -> int:
        return int(self.H.shape[0])

    @property
    def m(self) -> int:
        return int(self.H.shape[1])

    def syndrome(self, y: Sequence[int]) -> Vector:
        vector = np.asarray(y, dtype=np.int64)
        return tuple(int(v) for v in (self.H @ vector) % self.p)


def enumerate_errors(m: int, p: int, max_weight: int) -> Iterator[Vector]:
    """按重量、支撑字典序、取值字典序枚举重量 ≤ max_weight 的向量"""
    for weight in range(min(max_weight, m) + 1):
        for support in combinations(range(m), weight):
            for values in product(range(1, p), repeat=weight):
                y = [0] * m
                for position, value in zip(support, values):
                    y[position] = value
                yield tuple(y)


def error_count(m: int, p: int, max_weight: int) -> int:
    """重量 ≤ max_weight 的向量个数"""
    return sum(comb(m, w) * (p - 1) ** w for w in range(min(max_weight, m) + 1))


def decode_brute(code: SyndromeCode, syndrome: Sequence[int]) -> Vector:
    """
    暴力综合征译码

    Returns:
        唯一满足 Hy = syndrome 且 |y| ≤ ℓ 的 y

    Raises:
        SyndromeNotFoundError: 译码半径内无解
        AmbiguousSyndromeError: 有两个以上的解
    """
    target = tuple(int(s) % code.p for s in syndrome)
    matches: list[Vector] = []
    for y in enumerate_errors(code.m, code.p, code.max_weight):
        if code.syndrome(y) == target:
            matches.append(y)
            if len(matches) > 1:
                raise AmbiguousSyndromeError(target, matches)
    if not matches:
        raise SyndromeNotFoundError(target, code.max_weight)
    return matches[0]


def syndrome_table(code: SyndromeCode, budget: int | None = None) -> dict[Vector, list[Vector]]:
    """
    综合征 → 产生它的全部低重量错误向量

    Raises:
        BudgetExceededError: 低重量向量个数超过枚举预算
    """
    count = error_count(code.m, code.p, code.max_weight)
    budget = resolve_budget(budget)
    if count > budget:
        raise BudgetExceededError(count, budget, "综合征表")
    table: dict[Vector, list[Vector]] = {}
    for y in enumerate_errors(code.m, code.p, code.max_weight):
        table.setdefault(code.syndrome(y), []).append(y)
    return table


def verify_unique_decoding(code: SyndromeCode) -> bool:
    """任意两个不同的低重量向量综合征都不同时返回真"""
    return all(len(candidates) == 1 for candidates in syndrome_table(code).values())


def dual_min_distance(code: SyndromeCode, budget: int | None = None) -> int:
    """
    y ↦ Hy 核中非零向量的最小重量

    按重量递增枚举，首个非零值固定为1以去掉标量倍数。映射单射时返回哨兵值 m+1。

    Raises:
        BudgetExceededError: p^m 超过枚举预算
    """
    budget = resolve_budget(budget)
    size = code.p**code.m
    if size > budget:
        raise BudgetExceededError(size, budget, "核向量枚举")
    for weight in range(1, code.m + 1):
        for support in combinations(range(code.m), weight):
            columns = code.H[:, support]
            for tail in product(range(1, code.p), repeat=weight - 1):
                values = np.array((1,) + tail, dtype=np.int64)
                if not ((columns @ values) % code.p).any():
                    logger.debug(f"最小核向量: support={support}, values={values.tolist()}")
                    return weight
    return code.m + 1


@dataclass
class DecodeRecord:
    """一次译码的日志记录"""

    syndrome: Vector
    y: Vector
    weight: int
    elapsed: float


@dataclass
class SyndromeDecoder:
    """
    带缓存的译码器

    首次调用时建立完整综合征表，之后每次查表，同时检测歧义。
    """

    code: SyndromeCode
    records: list[DecodeRecord] = field(default_factory=list)
    _table: dict[Vector, list[Vector]] | None = field(default=None, repr=False)

    def decode(self, syndrome: Sequence[int]) -> Vector:
        start = time.perf_counter()
        if self._table is None:
            self._table = syndrome_table(self.code)
            logger.debug(f"综合征表已建立: {len(self._table)} 个综合征")
        target = tuple(int(s) % self.code.p for s in syndrome)
        candidates = self._table.get(target)
        if not candidates:
            raise SyndromeNotFoundError(target, self.code.max_weight)
        if len(candidates) > 1:
            raise AmbiguousSyndromeError(target, candidates)
        y = candidates[0]
        record = DecodeRecord(
            syndrome=target,
            y=y,
            weight=sum(1 for v in y if v),
            elapsed=time.perf_counter() - start,
        )
        self.records.append(record)
        return y
