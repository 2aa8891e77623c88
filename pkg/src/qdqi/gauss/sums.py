"""二次高斯和的闭式与暴力枚举

每个闭式都配有一个按 x 升序逐项求和的枚举版本，二者在测试和验证套件中互相校验。
"""

from functools import lru_cache
from itertools import product
from typing import Sequence

import numpy as np

from qdqi.core.errors import SingularMatrixError
from qdqi.core.field import (
    FieldElement,
    PrimeModulus,
    as_modulus,
    i_p,
    legendre_symbol,
    mod_inverse,
)


@lru_cache(maxsize=None)
def omega_table(p: int) -> np.ndarray:
    """ω_p^k，k = 0..p-1"""
    table = np.exp(2j * np.pi * np.arange(p) / p)
    table.setflags(write=False)
    return table


def omega(k: int, p: int) -> complex:
    """单位根 ω_p^k，指数先约化到 [0, p)"""
    return complex(omega_table(p)[int(k) % p])


def gauss_one(p: int) -> complex:
    """g(1;p) = i_p·√p"""
    return i_p(p) * np.sqrt(p)


def quad_gauss_closed(a: FieldElement) -> complex:
    """g(a;p)：a = 0 时为 p，否则为 i_p·χ(a)·√p"""
    if a.value == 0:
        return complex(a.p)
    return legendre_symbol(a.value, a.p) * gauss_one(a.p)


def quad_gauss_brute(a: FieldElement) -> complex:
    """按定义逐项求和 Σ_x ω_p^{a x²}"""
    p = a.p
    x = np.arange(p)
    return complex(np.sum(omega_table(p)[(a.value * x * x) % p]))


def general_quad_sum_value(a: int, b: int, c: int, p: int) -> complex:
    """
    Σ_x ω_p^{a x² + b x + c} 的闭式（整数参数版本）

    a = 0 时为 p·ω_p^c·δ_{b,0}；否则为 ω_p^{c − a⁻¹b²/4}·χ(a)·g(1;p)。
    """
    a, b, c = a % p, b % p, c % p
    if a == 0:
        return p * omega(c, p) if b == 0 else 0j
    exponent = c - mod_inverse(a, p) * b * b * mod_inverse(4, p)
    return omega(exponent, p) * legendre_symbol(a, p) * gauss_one(p)


def general_quad_sum_closed(a: FieldElement, b: FieldElement, c: FieldElement) -> complex:
    """一般二次指数和的闭式"""
    return general_quad_sum_value(a.value, b.value, c.value, a.p)


def general_quad_sum_brute(a: FieldElement, b: FieldElement, c: FieldElement) -> complex:
    """逐项求和 Σ_x ω_p^{a x² + b x + c}"""
    p = a.p
    x = np.arange(p)
    exponents = (a.value * x * x + b.value * x + c.value) % p
    return complex(np.sum(omega_table(p)[exponents]))


def _diagonal_values(diagonal: Sequence[FieldElement | int], p: PrimeModulus | int) -> tuple[list[int], int]:
    modulus = as_modulus(p)
    values = [int(v) % modulus.p for v in diagonal]
    return values, modulus.p


def multidim_quad_sum(diagonal: Sequence[FieldElement | int], p: PrimeModulus | int) -> complex:
    """
    对角二次型的多维高斯和 Σ_{x∈F_p^n} ω_p^{xᵀDx}

    Args:
        diagonal: D的对角元素，必须全部非零
        p: 模数

    Returns:
        i_p^n · p^{n/2} · χ(Π D_i)

    Raises:
        SingularMatrixError: 对角元素中有零
    """
    values, p_int = _diagonal_values(diagonal, p)
    if any(v == 0 for v in values):
        raise SingularMatrixError(f"对角矩阵含零元素: {values}")
    n = len(values)
    determinant = 1
    for v in values:
        determinant = determinant * v % p_int
    return i_p(p_int) ** n * p_int ** (n / 2) * legendre_symbol(determinant, p_int)


def multidim_quad_sum_brute(diagonal: Sequence[FieldElement | int], p: PrimeModulus | int) -> complex:
    """枚举 F_p^n 逐项求和，零对角元素也允许"""
    values, p_int = _diagonal_values(diagonal, p)
    table = omega_table(p_int)
    total = 0j
    for x in product(range(p_int), repeat=len(values)):
        total += table[sum(v * xi * xi for v, xi in zip(values, x)) % p_int]
    return complex(total)
