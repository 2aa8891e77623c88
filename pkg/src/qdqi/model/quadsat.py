"""max-QUADSAT 目标函数、约束谱与满足数分布"""

from fractions import Fraction
from math import comb, prod
from typing import Sequence

import numpy as np

from qdqi.core.config import resolve_budget
from qdqi.core.errors import BudgetExceededError, DimensionMismatchError, SingularMatrixError
from qdqi.core.field import FieldElement, i_p, legendre_symbol
from qdqi.core.instance import ConstraintSpectrum, QuadSatInstance, SatDistribution
from qdqi.gauss.sums import omega_table
from qdqi.utils.logger import get_logger

logger = get_logger(__name__)


def enumerate_assignments(n: int, p: int, budget: int | None = None) -> np.ndarray:
    """
    按字典序枚举 F_p^n，最后一位变化最快

    Returns:
        形状为 (p^n, n) 的整数矩阵

    Raises:
        BudgetExceededError: p^n 超过枚举预算
    """
    budget = resolve_budget(budget)
    size = p**n
    if size > budget:
        raise BudgetExceededError(size, budget, f"F_{p}^{n} 枚举")
    if n == 0:
        return np.zeros((1, 0), dtype=np.int64)
    digits = np.unravel_index(np.arange(size, dtype=np.int64), (p,) * n)
    return np.stack(digits, axis=1).astype(np.int64)


def constraint_arguments(inst: QuadSatInstance, assignments: np.ndarray) -> np.ndarray:
    """对每个赋值计算全部约束的自变量 b_i·x + Σ_j D_ij x_j²，形状 (N, m)"""
    x = np.atleast_2d(np.asarray(assignments, dtype=np.int64))
    if x.shape[1] != inst.n:
        raise DimensionMismatchError(f"赋值长度 {x.shape[1]} 与变量数 n={inst.n} 不一致")
    return (x @ inst.B.T + (x * x) @ inst.D.T) % inst.p


def satisfied_counts(inst: QuadSatInstance, assignments: np.ndarray) -> np.ndarray:
    """每个赋值满足的约束个数"""
    values = constraint_arguments(inst, assignments)
    rows = np.arange(inst.m)
    return inst.membership[rows, values].sum(axis=1)


def _as_vector(inst: QuadSatInstance, x: Sequence[FieldElement | int]) -> np.ndarray:
    vector = np.array([int(v) for v in x], dtype=np.int64)
    if vector.shape != (inst.n,):
        raise DimensionMismatchError(f"赋值长度 {len(vector)} 与变量数 n={inst.n} 不一致")
    return vector % inst.p


def satisfied_count(inst: QuadSatInstance, x: Sequence[FieldElement | int]) -> int:
    """x 满足的约束个数 s，目标函数为 2s − m"""
    return int(satisfied_counts(inst, _as_vector(inst, x)[None, :])[0])


def objective_eval(inst: QuadSatInstance, x: Sequence[FieldElement | int]) -> int:
    """
    目标函数 Σ_i f_i(b_i·x + xᵀC_i x)

    Raises:
        DimensionMismatchError: x 的长度不是 n
    """
    return 2 * satisfied_count(inst, x) - inst.m


def constraint_values(inst: QuadSatInstance) -> ConstraintSpectrum:
    """
    平移缩放约束 g_i 的两个取值及其傅里叶变换

    f̄ = 2r/p − 1，φ = 2√(r(1 − r/p))，g_sat = (1 − f̄)/φ，g_unsat = (−1 − f̄)/φ，
    g̃_i(y) = p^{-1/2} Σ_x ω_p^{xy} g_i(x)。
    """
    p, r = inst.p, inst.r
    f_mean = 2 * r / p - 1
    phi = 2 * np.sqrt(r * (1 - r / p))
    g_sat = (1 - f_mean) / phi
    g_unsat = (-1 - f_mean) / phi

    g_table = np.where(inst.membership, g_sat, g_unsat)
    x = np.arange(p)
    fourier = omega_table(p)[np.outer(x, x) % p]
    g_tilde = g_table @ fourier / np.sqrt(p)
    # g̃_i(0) 解析上为零，消去浮点残差
    g_tilde[:, 0] = 0.0
    g_tilde.setflags(write=False)
    return ConstraintSpectrum(f_mean=f_mean, phi=phi, g_sat=g_sat, g_unsat=g_unsat, g_tilde=g_tilde)


def sat_distribution(inst: QuadSatInstance, budget: int | None = None) -> SatDistribution:
    """
    枚举 F_p^n 得到按满足数统计的精确计数

    Raises:
        BudgetExceededError: p^n 超过枚举预算
    """
    assignments = enumerate_assignments(inst.n, inst.p, budget)
    counts = np.bincount(satisfied_counts(inst, assignments), minlength=inst.m + 1)
    logger.debug(f"满足数分布: p={inst.p}, n={inst.n}, m={inst.m}, counts={counts.tolist()}")
    return SatDistribution(counts=tuple(int(c) for c in counts), total=inst.p**inst.n)


def binomial_reference(m: int, r: int, p: int) -> list[Fraction]:
    """精确的二项分布 C(m,s)(r/p)^s(1−r/p)^{m−s}"""
    q = Fraction(r, p)
    return [comb(m, s) * q**s * (1 - q) ** (m - s) for s in range(m + 1)]


def moment(dist: SatDistribution | Sequence[Fraction], k: int) -> Fraction:
    """
    k阶原点矩 Σ_s s^k·dist[s]/total，精确有理数

    Args:
        dist: 计数分布，或已归一化的有理概率序列
        k: 阶数，k ≥ 0
    """
    if k < 0:
        raise ValueError(f"矩的阶数必须非负，收到 {k}")
    if isinstance(dist, SatDistribution):
        weights, total = dist.counts, dist.total
    else:
        weights, total = list(dist), sum(dist, Fraction(0))
    return sum((Fraction(s) ** k * w for s, w in enumerate(weights)), Fraction(0)) / total


def _lambda_values(lambdas: Sequence[FieldElement | int], p: int) -> list[int]:
    values = [int(v) % p for v in lambdas]
    if not values or any(v == 0 for v in values):
        raise SingularMatrixError(f"对角元素必须全部非零: {values}")
    return values


def uniformity_closed_form(lambdas: Sequence[FieldElement | int], a: FieldElement) -> float:
    """
    Pr_x[Σ_i λ_i x_i² = a] 的闭式，x 在 F_p^rank 上均匀

    偶数秩：1/p + χ(Πλ)·i_p^rank·(p·δ_{a,0} − 1)/p^{rank/2+1}；
    奇数秩：1/p + χ(Πλ)·i_p^{rank+1}·χ(−a)·√p/p^{rank/2+1}。

    Raises:
        SingularMatrixError: 有零对角元素
    """
    p = a.p
    values = _lambda_values(lambdas, p)
    rank = len(values)
    character = legendre_symbol(prod(values), p)
    scale = p ** (rank / 2 + 1)
    if rank % 2 == 0:
        delta = 1 if a.value == 0 else 0
        correction = character * i_p(p) ** rank * (p * delta - 1) / scale
    else:
        correction = character * i_p(p) ** (rank + 1) * legendre_symbol(-a.value, p) * np.sqrt(p) / scale
    return float((1 / p + correction).real)


def uniformity_enumerated(lambdas: Sequence[FieldElement | int], a: FieldElement) -> Fraction:
    """枚举 F_p^rank 得到 Pr_x[Σ_i λ_i x_i² = a] 的精确值"""
    p = a.p
    values = np.array([int(v) % p for v in lambdas], dtype=np.int64)
    assignments = enumerate_assignments(len(values), p)
    hits = int(np.count_nonzero(((assignments * assignments) @ values) % p == a.value))
    return Fraction(hits, p ** len(values))


def linear_image_counts(B: np.ndarray, p: int, budget: int | None = None) -> dict[tuple[int, ...], int]:
    """枚举 x ∈ F_p^n，统计 Bx 的每个取值出现次数"""
    matrix = np.asarray(B, dtype=np.int64)
    assignments = enumerate_assignments(matrix.shape[1], p, budget)
    images = (assignments @ matrix.T) % p
    values, counts = np.unique(images, axis=0, return_counts=True)
    return {tuple(int(v) for v in row): int(c) for row, c in zip(values, counts)}


def has_full_row_rank(B: np.ndarray, p: int) -> bool:
    """B 的行在 F_p 上线性无关：不存在非零 u 使 uᵀB = 0"""
    matrix = np.asarray(B, dtype=np.int64) % p
    left = enumerate_assignments(matrix.shape[0], p)[1:]
    return not bool(np.any(np.all((left @ matrix) % p == 0, axis=1)))


def default_ell(n: int, ceil_radius: bool = False) -> int:
    """
    OPI 实例默认的 ℓ

    默认取唯一译码半径 ⌊n/2⌋；ceil_radius 为真时取 ⌊(n+1)/2⌋。
    """
    return (n + 1) // 2 if ceil_radius else n // 2
