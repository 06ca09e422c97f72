from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from closeness_lollipop.numerics import (
    HALF,
    MANTISSA_BITS,
    ZERO,
    Dyadic,
    DyadicOverflowError,
    dyadic_add,
    dyadic_cmp,
    dyadic_mul,
    dyadic_sub,
    pow2,
)

dyadics = st.builds(Dyadic, st.integers(-(2**40), 2**40), st.integers(0, 40))


def d(num, exp=0):
    return Dyadic(num, exp)


class TestArithmetic:
    def test_add(self):
        assert dyadic_add(d(1, 1), d(1, 2)) == d(3, 2)
        x = d(5, 3)
        assert dyadic_add(x, ZERO) == x

    def test_add_normalizes_to_integer(self):
        s = dyadic_add(d(3, 3), d(5, 3))
        assert (s.mantissa, s.exponent) == (1, 0)

    def test_sub(self):
        assert dyadic_sub(d(3, 1), d(3, 1)) == ZERO
        assert dyadic_sub(d(3, 1), d(7, 2)) == d(-1, 2)
        assert 1 - pow2(-3) == d(7, 3)

    def test_mul(self):
        assert dyadic_mul(d(3, 1), d(3, 1)) == d(9, 2)
        assert dyadic_mul(d(7, 5), d(1)) == d(7, 5)
        # 2 C(p) C(q) for two P3 leaves
        assert 2 * dyadic_mul(d(3, 2), d(3, 2)) == d(9, 3)

    def test_cmp(self):
        assert dyadic_cmp(d(1, 1), d(1, 2)) == 1
        assert dyadic_cmp(d(5, 3), d(5, 3)) == 0
        assert dyadic_cmp(d(-1, 2), ZERO) == -1

    @pytest.mark.parametrize("e, expected", [(0, d(1)), (-3, d(1, 3)), (4, d(16))])
    def test_pow2(self, e, expected):
        assert pow2(e) == expected

    def test_division_by_power_of_two_only(self):
        assert d(3) / 4 == d(3, 2)
        assert d(3) / -2 == d(-3, 1)
        with pytest.raises(ValueError):
            d(3) / 3
        with pytest.raises(ZeroDivisionError):
            d(3) / 0

    def test_int_operands(self):
        assert 2 + HALF == d(5, 1)
        assert 1 - HALF == HALF
        assert 3 * HALF == d(3, 1)
        # floats never compare equal to exact values
        assert (HALF == 0.5) is False


class TestRepresentation:
    def test_normal_form(self):
        x = d(12, 4)
        assert (x.mantissa, x.exponent) == (3, 2)
        z = d(0, 9)
        assert (z.mantissa, z.exponent) == (0, 0)
        big = d(16)
        assert (big.mantissa, big.exponent) == (16, 0)

    def test_string_round_trip(self):
        x = d(-43, 2)
        assert str(x) == "-43/2^2"
        assert Dyadic.parse(str(x)) == x
        assert Dyadic.parse("7") == d(7)

    def test_json_view(self):
        assert d(43, 2).to_json() == {"exact": "43/2^2", "decimal": 10.75}

    def test_from_fraction(self):
        assert Dyadic.from_fraction(Fraction(3, 8)) == d(3, 3)
        with pytest.raises(ValueError):
            Dyadic.from_fraction(Fraction(1, 3))

    def test_immutable(self):
        with pytest.raises(AttributeError):
            d(1).foo = 2

    def test_overflow_is_reported(self):
        top = pow2(MANTISSA_BITS - 2)
        with pytest.raises(DyadicOverflowError):
            top + top
        with pytest.raises(DyadicOverflowError):
            pow2(MANTISSA_BITS)
        with pytest.raises(DyadicOverflowError):
            1 - pow2(-200)

    def test_bad_constructor_args(self):
        with pytest.raises(ValueError):
            Dyadic(1, -1)
        with pytest.raises(TypeError):
            Dyadic(1.5)


@given(st.integers(-(2**60), 2**60), st.integers(0, 60))
def test_round_trip_exact(a, e):
    assert Dyadic.from_parts(a, e).to_fraction() == Fraction(a, 2**e)


@given(dyadics)
def test_normalized_invariant(x):
    assert x.mantissa % 2 == 1 or x.exponent == 0
    assert Dyadic(x.mantissa, x.exponent) == x


@given(dyadics, dyadics, dyadics)
def test_field_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a - b) + b == a


@given(dyadics, dyadics)
def test_matches_fraction_arithmetic(a, b):
    fa, fb = a.to_fraction(), b.to_fraction()
    assert (a + b).to_fraction() == fa + fb
    assert (a - b).to_fraction() == fa - fb
    assert (a * b).to_fraction() == fa * fb


@given(dyadics, dyadics)
def test_cmp_agrees_with_sign_of_difference(a, b):
    assert dyadic_cmp(a, b) == (a - b).sign()
    assert (a < b) == (a.to_fraction() < b.to_fraction())


@given(dyadics)
def test_hash_consistent(x):
    y = Dyadic(x.mantissa * 4, x.exponent + 2)
    assert x == y and hash(x) == hash(y)
