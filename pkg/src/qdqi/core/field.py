"""素域F_p上的精确算术

包含二次特征、模逆、可逆平方根双射以及本原根。所有运算只用整数，
复数只出现在 i_p 中。
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from sympy import isprime, primefactors
from sympy.ntheory import sqrt_mod

from qdqi.core.errors import FieldMismatchError, NoInverseError


@dataclass(frozen=True)
class PrimeModulus:
    """奇素数模数p"""

    p: int

    def __post_init__(self) -> None:
        if isinstance(self.p, bool) or not isinstance(self.p, int):
            raise TypeError(f"p必须是整数，收到 {type(self.p).__name__}")
        if self.p < 3 or self.p % 2 == 0:
            raise ValueError(f"p必须是奇素数，收到 {self.p}")
        if not isprime(self.p):
            raise ValueError(f"p必须是素数，收到 {self.p}")

    @property
    def residue_class(self) -> int:
        """p mod 4，取值1或3"""
        return self.p % 4

    def __call__(self, value: int) -> FieldElement:
        return FieldElement(value, self)

    def elements(self) -> list[FieldElement]:
        """按升序返回F_p的全部元素"""
        return [FieldElement(v, self) for v in range(self.p)]

    def __int__(self) -> int:
        return self.p


@dataclass(frozen=True)
class FieldElement:
    """F_p中的元素，value总是约化到 [0, p)"""

    value: int
    modulus: PrimeModulus

    def __post_init__(self) -> None:
        object.__setattr__(self, "value", int(self.value) % self.modulus.p)

    @property
    def p(self) -> int:
        return self.modulus.p

    def _coerce(self, other: FieldElement | int) -> FieldElement:
        if isinstance(other, FieldElement):
            if other.modulus != self.modulus:
                raise FieldMismatchError(f"模数不一致: {self.p} 与 {other.p}")
            return other
        if isinstance(other, int):
            return FieldElement(other, self.modulus)
        raise TypeError(f"不支持与 {type(other).__name__} 运算")

    def __add__(self, other: FieldElement | int) -> FieldElement:
        return add(self, self._coerce(other))

    __radd__ = __add__

    def __sub__(self, other: FieldElement | int) -> FieldElement:
        return sub(self, self._coerce(other))

    def __rsub__(self, other: int) -> FieldElement:
        return sub(self._coerce(other), self)

    def __mul__(self, other: FieldElement | int) -> FieldElement:
        return mul(self, self._coerce(other))

    __rmul__ = __mul__

    def __neg__(self) -> FieldElement:
        return FieldElement(-self.value, self.modulus)

    def __truediv__(self, other: FieldElement | int) -> FieldElement:
        return mul(self, inv(self._coerce(other)))

    def __pow__(self, exponent: int) -> FieldElement:
        if exponent < 0:
            return inv(self) ** (-exponent)
        return FieldElement(pow(self.value, exponent, self.p), self.modulus)

    def __int__(self) -> int:
        return self.value

    def __index__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"{self.value} (mod {self.p})"


def as_modulus(p: PrimeModulus | int) -> PrimeModulus:
    """把整数或PrimeModulus统一成PrimeModulus"""
    if isinstance(p, PrimeModulus):
        return p
    return _modulus(int(p))


@lru_cache(maxsize=None)
def _modulus(p: int) -> PrimeModulus:
    return PrimeModulus(p)


def _check_same(a: FieldElement, b: FieldElement) -> None:
    if a.modulus != b.modulus:
        raise FieldMismatchError(f"模数不一致: {a.p} 与 {b.p}")


def add(a: FieldElement, b: FieldElement) -> FieldElement:
    _check_same(a, b)
    return FieldElement(a.value + b.value, a.modulus)


def sub(a: FieldElement, b: FieldElement) -> FieldElement:
    _check_same(a, b)
    return FieldElement(a.value - b.value, a.modulus)


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    _check_same(a, b)
    return FieldElement(a.value * b.value, a.modulus)


# ---------------------------------------------------------------------------
# 整数层面的核心函数，供向量化代码直接调用
# ---------------------------------------------------------------------------


def mod_inverse(a: int, p: int) -> int:
    """
    扩展欧几里得求模逆

    Raises:
        NoInverseError: a ≡ 0 (mod p)
    """
    a %= p
    if a == 0:
        raise NoInverseError(f"0 在 F_{p} 中没有逆元")
    old_r, r = a, p
    old_s, s = 1, 0
    while r:
        quotient = old_r // r
        old_r, r = r, old_r - quotient * r
        old_s, s = s, old_s - quotient * s
    return old_s % p


def legendre_symbol(a: int, p: int) -> int:
    """欧拉判别法计算二次特征，返回 -1、0 或 1"""
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


@lru_cache(maxsize=None)
def nonresidue(p: int) -> int:
    """
    可逆平方根使用的固定非剩余ν

    p ≡ 3 (mod 4) 时取 -1，此时 κ(s) = χ(s)；p ≡ 1 (mod 4) 时取最小的非剩余。
    """
    if p % 4 == 3:
        return p - 1
    for candidate in range(2, p):
        if legendre_symbol(candidate, p) == -1:
            return candidate
    raise ValueError(f"F_{p} 中找不到非剩余")


def is_plus_branch(s: int, p: int) -> bool:
    """s 是否位于 "+" 分支（逆映射为 s ↦ s²）"""
    s %= p
    if s == 0:
        return True
    if p % 4 == 3:
        return legendre_symbol(s, p) == 1
    return s <= (p - 1) // 2


def branch_factor(s: int, p: int) -> int:
    """κ(s)：+分支为1，-分支为ν"""
    return 1 if is_plus_branch(s, p) else nonresidue(p)


def sqrt_invertible_int(x: int, p: int) -> int:
    """sqrt_invertible 的整数版本"""
    x %= p
    if x == 0:
        return 0
    if legendre_symbol(x, p) == 1:
        want_plus, target = True, x
    else:
        want_plus, target = False, x * mod_inverse(nonresidue(p), p) % p
    for root in sorted(sqrt_mod(target, p, all_roots=True)):
        if is_plus_branch(root, p) == want_plus:
            return int(root)
    raise ArithmeticError(f"{x} 在 F_{p} 中找不到满足分支条件的平方根")


def sqrt_inverse_int(s: int, p: int) -> int:
    """可逆平方根的逆映射 s ↦ κ(s)·s²"""
    s %= p
    return branch_factor(s, p) * s * s % p


# ---------------------------------------------------------------------------
# 域元素层面的公开接口
# ---------------------------------------------------------------------------


def inv(a: FieldElement) -> FieldElement:
    """
    模逆

    Raises:
        NoInverseError: a = 0
    """
    return FieldElement(mod_inverse(a.value, a.p), a.modulus)


def chi(a: FieldElement) -> int:
    """二次特征：非零平方为+1，非零非平方为-1，0为0"""
    return legendre_symbol(a.value, a.p)


def i_p(p: PrimeModulus | int) -> complex:
    """p ≡ 1 (mod 4) 时为1，p ≡ 3 (mod 4) 时为虚数单位"""
    return 1 + 0j if int(as_modulus(p).p) % 4 == 1 else 1j


def sqrt_invertible(x: FieldElement) -> FieldElement:
    """
    F_p上的可逆平方根双射

    0 ↦ 0；剩余x映射到 "+" 分支的平方根；非剩余x映射到 x·ν⁻¹ 在 "-" 分支的平方根。
    p ≡ 3 (mod 4) 时 "+" 分支即本身是剩余的那个根，逆映射化为 s ↦ χ(s)s²。

    Args:
        x: 任意域元素

    Returns:
        满足 sqrt_inverse(s) = x 的唯一 s
    """
    return FieldElement(sqrt_invertible_int(x.value, x.p), x.modulus)


def sqrt_inverse(s: FieldElement) -> FieldElement:
    """sqrt_invertible 的逆映射 s ↦ κ(s)·s²"""
    return FieldElement(sqrt_inverse_int(s.value, s.p), s.modulus)


@lru_cache(maxsize=None)
def primitive_root_int(p: int) -> int:
    """F_p^× 的最小生成元"""
    factors = primefactors(p - 1)
    for g in range(2, p):
        if all(pow(g, (p - 1) // q, p) != 1 for q in factors):
            return g
    raise ValueError(f"{p} 没有本原根")


def primitive_root(p: PrimeModulus | int) -> FieldElement:
    """最小本原根γ"""
    modulus = as_modulus(p)
    return FieldElement(primitive_root_int(modulus.p), modulus)
