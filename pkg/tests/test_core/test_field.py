"""测试素域算术"""

import pytest
from sympy import legendre_symbol as sympy_legendre
from sympy import primerange
from sympy.ntheory import primitive_root as sympy_primitive_root

from qdqi.core.errors import FieldMismatchError, NoInverseError
from qdqi.core.field import (
    FieldElement,
    PrimeModulus,
    add,
    chi,
    i_p,
    inv,
    legendre_symbol,
    mod_inverse,
    nonresidue,
    primitive_root,
    sqrt_inverse,
    sqrt_invertible,
)

PRIMES = [3, 5, 7, 11, 13, 17, 19, 23]
PRIMES_TO_101 = list(primerange(3, 102))


class TestPrimeModulus:
    """测试模数校验"""

    @pytest.mark.parametrize("p", [1, 2, 4, 9, 15, 21])
    def test_rejects_non_odd_primes(self, p):
        with pytest.raises(ValueError):
            PrimeModulus(p)

    def test_rejects_non_integer(self):
        with pytest.raises(TypeError):
            PrimeModulus(7.0)

    def test_residue_class(self):
        assert PrimeModulus(7).residue_class == 3
        assert PrimeModulus(13).residue_class == 1

    def test_elements_in_order(self):
        assert [e.value for e in PrimeModulus(5).elements()] == [0, 1, 2, 3, 4]


class TestFieldElement:
    """测试域元素运算"""

    @pytest.fixture
    def f7(self):
        return PrimeModulus(7)

    def test_value_is_reduced(self, f7):
        assert f7(9).value == 2
        assert f7(-1).value == 6

    def test_arithmetic(self, f7):
        a = f7(3)
        assert (a + 5).value == 1
        assert (a - 5).value == 5
        assert (10 - a).value == 0
        assert (a * 5).value == 1
        assert (a / 3).value == 1
        assert (-a).value == 4
        assert (a**-1).value == 5
        assert (a**6).value == 1

    def test_add_function(self, f7):
        """add 与 + 运算符一致，且不接受不同模数"""
        assert add(f7(3), f7(5)) == f7(3) + 5
        assert add(f7(6), f7(1)).value == 0
        with pytest.raises(FieldMismatchError):
            add(f7(1), PrimeModulus(5)(1))

    def test_equality_uses_reduced_value(self, f7):
        assert f7(1) == f7(8)

    def test_mismatched_modulus(self, f7):
        with pytest.raises(FieldMismatchError):
            f7(1) + PrimeModulus(5)(1)

    def test_non_integer_operand(self, f7):
        with pytest.raises(TypeError):
            f7(3) + 1.5

    def test_division_by_zero(self, f7):
        with pytest.raises(NoInverseError):
            f7(3) / 0
        with pytest.raises(ZeroDivisionError):
            inv(f7(0))


class TestCharacterAndInverse:
    """测试二次特征与模逆"""

    @pytest.mark.parametrize("p", PRIMES)
    def test_legendre_matches_sympy(self, p):
        for a in range(1, p):
            assert legendre_symbol(a, p) == sympy_legendre(a, p)

    @pytest.mark.parametrize("p", PRIMES_TO_101)
    def test_chi_is_multiplicative(self, p):
        """χ(ab) = χ(a)χ(b)，对所有 a, b ∈ F_p 穷举"""
        field = PrimeModulus(p)
        elements = field.elements()
        table = [chi(a) for a in elements]
        for a in elements:
            for b in elements:
                assert chi(a * b) == table[a.value] * table[b.value]

    @pytest.mark.parametrize("p", PRIMES_TO_101)
    def test_chi_of_inverse(self, p):
        field = PrimeModulus(p)
        for a in range(1, p):
            assert chi(inv(field(a))) == chi(field(a))

    def test_chi_of_zero(self):
        assert chi(PrimeModulus(11)(0)) == 0

    @pytest.mark.parametrize("p", PRIMES)
    def test_mod_inverse(self, p):
        for a in range(1, p):
            assert a * mod_inverse(a, p) % p == 1

    def test_mod_inverse_of_zero(self):
        with pytest.raises(NoInverseError):
            mod_inverse(7, 7)

    def test_i_p(self):
        assert i_p(5) == 1
        assert i_p(7) == 1j
        assert i_p(PrimeModulus(13)) == 1

    @pytest.mark.parametrize("p", PRIMES)
    def test_nonresidue(self, p):
        nu = nonresidue(p)
        assert legendre_symbol(nu, p) == -1
        if p % 4 == 3:
            assert nu == p - 1


class TestSqrtInvertible:
    """测试可逆平方根"""

    def test_examples_mod_7(self):
        f7 = PrimeModulus(7)
        assert sqrt_invertible(f7(4)).value == 2
        assert sqrt_invertible(f7(3)).value == 5
        assert sqrt_invertible(f7(0)).value == 0

    def test_examples_mod_5(self):
        f5 = PrimeModulus(5)
        assert sqrt_invertible(f5(4)).value == 2
        assert sqrt_invertible(f5(2)).value == 4
        assert sqrt_invertible(f5(3)).value == 3

    @pytest.mark.parametrize("p", PRIMES)
    def test_bijection_with_inverse(self, p):
        modulus = PrimeModulus(p)
        images = [sqrt_invertible(x) for x in modulus.elements()]
        assert sorted(s.value for s in images) == list(range(p))
        for x, s in zip(modulus.elements(), images):
            assert sqrt_inverse(s) == x

    @pytest.mark.parametrize("p", [3, 7, 11, 19, 23])
    def test_character_form_of_inverse(self, p):
        """p ≡ 3 (mod 4) 时逆映射为 s ↦ χ(s)s²"""
        for s in PrimeModulus(p).elements():
            assert sqrt_inverse(s) == s * s * chi(s) or s.value == 0


class TestPrimitiveRoot:
    """测试本原根"""

    @pytest.mark.parametrize("p,expected", [(3, 2), (5, 2), (7, 3), (11, 2), (13, 2), (23, 5)])
    def test_smallest_primitive_root(self, p, expected):
        assert primitive_root(p).value == expected

    @pytest.mark.parametrize("p", PRIMES)
    def test_matches_sympy(self, p):
        assert primitive_root(p).value == sympy_primitive_root(p)

    @pytest.mark.parametrize("p", PRIMES)
    def test_generates_multiplicative_group(self, p):
        gamma = primitive_root(p)
        assert {(gamma**k).value for k in range(p - 1)} == set(range(1, p))
