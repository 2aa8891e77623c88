"""OPI（最优多项式交）实例生成

二次OPI把系数限制为平方后嵌入 max-QUADSAT：D_ij = γ^{i·j}，B = 0，
第i个约束对应求值点 y = γ^i。线性OPI则把同一矩阵放进 B，作为 max-LINSAT 使用。
"""

from typing import Collection, Mapping, Sequence

import numpy as np

from qdqi.core.field import FieldElement, PrimeModulus, as_modulus, primitive_root_int
from qdqi.core.instance import QuadSatInstance
from qdqi.utils.logger import get_logger

logger = get_logger(__name__)


def rs_matrix(p: int, n: int) -> np.ndarray:
    """(p−1)×n 矩阵，第i行第j列为 γ^{i·j} mod p"""
    gamma = primitive_root_int(p)
    return np.array(
        [[pow(gamma, i * j, p) for j in range(n)] for i in range(p - 1)],
        dtype=np.int64,
    )


def random_subsets(p: int, m: int, r: int, seed: int | None) -> list[list[int]]:
    """用带种子的生成器无放回抽取 m 个大小为 r 的子集"""
    if not 1 <= r <= p - 1:
        raise ValueError(f"r 必须在 1..{p - 1} 内，收到 r={r}")
    rng = np.random.default_rng(seed)
    return [sorted(int(v) for v in rng.choice(p, size=r, replace=False)) for _ in range(m)]


def _resolve_subsets(
    p: int,
    m: int,
    r: int | None,
    seed: int | None,
    subsets: Sequence[Collection[int]] | None,
) -> list[list[int]]:
    if subsets is not None:
        if len(subsets) != m:
            raise ValueError(f"需要 {m} 个子集，收到 {len(subsets)}")
        return [sorted(int(v) % p for v in subset) for subset in subsets]
    if r is None:
        raise ValueError("未提供子集时必须指定 r")
    return random_subsets(p, m, r, seed)


def _check_opi_dimensions(p: int, n: int) -> None:
    if n < 1:
        raise ValueError(f"n 必须至少为1，收到 n={n}")
    if n >= p - 1:
        raise ValueError(f"OPI 要求 n < p−1，收到 p={p}, n={n}")


def make_quadratic_opi(
    p: PrimeModulus | int,
    n: int,
    r: int | None = None,
    seed: int | None = None,
    subsets: Sequence[Collection[int]] | None = None,
) -> QuadSatInstance:
    """
    构造二次OPI实例

    Args:
        p: 奇素数
        n: 多项式系数个数（次数 ≤ n−1）
        r: 每个子集的大小，随机生成时必填
        seed: 随机种子
        subsets: 显式给出的 F_0..F_{p−2}，第i个对应求值点 γ^i

    Returns:
        m = p−1、B = 0、D_ij = γ^{i·j} 的实例

    Raises:
        ValueError: n ≥ p−1 或子集参数非法
    """
    modulus = as_modulus(p)
    _check_opi_dimensions(modulus.p, n)
    m = modulus.p - 1
    F = _resolve_subsets(modulus.p, m, r, seed, subsets)
    D = rs_matrix(modulus.p, n)
    logger.debug(f"生成二次OPI: p={modulus.p}, n={n}, γ={primitive_root_int(modulus.p)}, seed={seed}")
    return QuadSatInstance(
        modulus=modulus,
        B=np.zeros_like(D),
        D=D,
        F=tuple(tuple(s) for s in F),
        seed=seed if subsets is None else None,
        kind="opi",
    )


def make_linear_opi(
    p: PrimeModulus | int,
    n: int,
    r: int | None = None,
    seed: int | None = None,
    subsets: Sequence[Collection[int]] | None = None,
) -> QuadSatInstance:
    """OPI 的 max-LINSAT 形式：B_ij = γ^{i·j}，D = 0"""
    modulus = as_modulus(p)
    _check_opi_dimensions(modulus.p, n)
    m = modulus.p - 1
    F = _resolve_subsets(modulus.p, m, r, seed, subsets)
    B = rs_matrix(modulus.p, n)
    return QuadSatInstance(
        modulus=modulus,
        B=B,
        D=np.zeros_like(B),
        F=tuple(tuple(s) for s in F),
        seed=seed if subsets is None else None,
        kind="linsat",
    )


def make_random_quadsat(
    p: PrimeModulus | int,
    n: int,
    m: int,
    r: int,
    seed: int | None = None,
    linear: bool = True,
    quadratic: bool = True,
) -> QuadSatInstance:
    """均匀随机的 max-QUADSAT 实例，B 与 D 的各元素独立均匀"""
    modulus = as_modulus(p)
    if not (linear or quadratic):
        raise ValueError("线性部分与二次部分至少保留一个")
    rng = np.random.default_rng(seed)
    B = rng.integers(0, modulus.p, size=(m, n)) if linear else np.zeros((m, n), dtype=np.int64)
    D = rng.integers(0, modulus.p, size=(m, n)) if quadratic else np.zeros((m, n), dtype=np.int64)
    F = [sorted(int(v) for v in rng.choice(modulus.p, size=r, replace=False)) for _ in range(m)]
    return QuadSatInstance(modulus=modulus, B=B, D=D, F=tuple(tuple(s) for s in F), seed=seed, kind="quadsat")


def opi_subsets(inst: QuadSatInstance) -> dict[int, tuple[int, ...]]:
    """OPI 实例的子集族，以求值点 y = γ^i 为键"""
    gamma = primitive_root_int(inst.p)
    return {pow(gamma, i, inst.p): subset for i, subset in enumerate(inst.F)}


def opi_objective(
    q_coeffs: Sequence[FieldElement | int],
    subsets: Mapping[int, Collection[int]],
    p: PrimeModulus | int,
) -> int:
    """
    OPI 目标：满足 Q(y) ∈ F_y 的 y ∈ {1..p−1} 的个数

    Args:
        q_coeffs: Q 的系数，q_coeffs[j] 为 y^j 的系数
        subsets: y ↦ F_y
        p: 模数
    """
    p_int = as_modulus(p).p
    coeffs = [int(c) % p_int for c in q_coeffs]
    total = 0
    for y in range(1, p_int):
        value = 0
        for c in reversed(coeffs):
            value = (value * y + c) % p_int
        if value in set(int(v) % p_int for v in subsets.get(y, ())):
            total += 1
    return total
