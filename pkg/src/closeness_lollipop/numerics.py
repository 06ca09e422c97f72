"""Exact dyadic rationals.

Every closeness value handled by this package has the form ``a / 2**e``.
:class:`Dyadic` stores that pair in normalized form so that equality of
two values is equality of their fields, and formula checks never need a
tolerance.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

MANTISSA_BITS = 128

# signed budget: one bit of the 128 is the sign
_MAX_MAGNITUDE_BITS = MANTISSA_BITS - 1


class DyadicOverflowError(OverflowError):
    """Raised when a result mantissa leaves the 128-bit signed budget."""


def _normalize(mantissa: int, exponent: int) -> tuple[int, int]:
    if mantissa == 0:
        return 0, 0
    if exponent > 0:
        # strip common factors of two between mantissa and denominator
        shift = min((mantissa & -mantissa).bit_length() - 1, exponent)
        mantissa >>= shift
        exponent -= shift
    if abs(mantissa).bit_length() > _MAX_MAGNITUDE_BITS:
        raise DyadicOverflowError(
            f"mantissa of {mantissa}/2^{exponent} exceeds {MANTISSA_BITS}-bit budget"
        )
    return mantissa, exponent


class Dyadic:
    """Signed rational ``mantissa / 2**exponent`` with ``exponent >= 0``.

    Instances are immutable and always normalized: either the mantissa is
    odd, or the exponent is zero (integers), or the value is ``0/2^0``.
    Plain ``int`` operands are accepted by the arithmetic operators.
    Division is only defined by powers of two.
    """

    __slots__ = ("_mantissa", "_exponent")

    def __init__(self, mantissa: int = 0, exponent: int = 0) -> None:
        if isinstance(mantissa, bool) or not isinstance(mantissa, int):
            raise TypeError("mantissa must be an int")
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative int")
        m, e = _normalize(mantissa, exponent)
        object.__setattr__(self, "_mantissa", m)
        object.__setattr__(self, "_exponent", e)

    def __setattr__(self, name, value):
        raise AttributeError("Dyadic is immutable")

    @classmethod
    def from_parts(cls, mantissa: int, exponent: int) -> "Dyadic":
        return cls(mantissa, exponent)

    @classmethod
    def from_fraction(cls, value: Union[Fraction, int]) -> "Dyadic":
        value = Fraction(value)
        den = value.denominator
        if den & (den - 1):
            raise ValueError(f"{value} has a non-dyadic denominator")
        return cls(value.numerator, den.bit_length() - 1)

    @classmethod
    def parse(cls, text: str) -> "Dyadic":
        """Inverse of ``str()``: accepts ``"a/2^e"`` or a bare integer."""
        text = text.strip()
        if "/2^" in text:
            num, exp = text.split("/2^", 1)
            return cls(int(num), int(exp))
        return cls(int(text))

    @property
    def mantissa(self) -> int:
        return self._mantissa

    @property
    def exponent(self) -> int:
        return self._exponent

    def to_fraction(self) -> Fraction:
        return Fraction(self._mantissa, 1 << self._exponent)

    def __float__(self) -> float:
        # report output only; comparisons stay exact
        return self._mantissa / (1 << self._exponent)

    def sign(self) -> int:
        return (self._mantissa > 0) - (self._mantissa < 0)

    def is_integer(self) -> bool:
        return self._exponent == 0

    # arithmetic

    @staticmethod
    def _coerce(other) -> "Dyadic":
        if isinstance(other, Dyadic):
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return Dyadic(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        e = max(self._exponent, other._exponent)
        m = (self._mantissa << (e - self._exponent)) + (other._mantissa << (e - other._exponent))
        return Dyadic(m, e)

    __radd__ = __add__

    def __neg__(self) -> "Dyadic":
        return Dyadic(-self._mantissa, self._exponent)

    def __pos__(self) -> "Dyadic":
        return self

    def __abs__(self) -> "Dyadic":
        return self if self._mantissa >= 0 else -self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Dyadic(self._mantissa * other._mantissa, self._exponent + other._exponent)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, bool) or not isinstance(other, int):
            return NotImplemented
        if other == 0:
            raise ZeroDivisionError("Dyadic division by zero")
        mag = abs(other)
        if mag & (mag - 1):
            raise ValueError(f"division by {other} leaves the dyadic rationals")
        result = Dyadic(self._mantissa, self._exponent + mag.bit_length() - 1)
        return -result if other < 0 else result

    # comparison

    def _cmp(self, other) -> int:
        e = max(self._exponent, other._exponent)
        a = self._mantissa << (e - self._exponent)
        b = other._mantissa << (e - other._exponent)
        return (a > b) - (a < b)

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._mantissa == other._mantissa and self._exponent == other._exponent

    def __lt__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._cmp(other) < 0

    def __le__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._cmp(other) <= 0

    def __gt__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._cmp(other) > 0

    def __ge__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._cmp(other) >= 0

    def __hash__(self) -> int:
        return hash((self._mantissa, self._exponent))

    def __str__(self) -> str:
        return f"{self._mantissa}/2^{self._exponent}"

    def __repr__(self) -> str:
        return f"Dyadic({self._mantissa}, {self._exponent})"

    def to_json(self) -> dict:
        return {"exact": str(self), "decimal": float(self)}


ZERO = Dyadic(0)
ONE = Dyadic(1)
HALF = Dyadic(1, 1)


def dyadic_add(a: Dyadic, b: Dyadic) -> Dyadic:
    return a + b


def dyadic_sub(a: Dyadic, b: Dyadic) -> Dyadic:
    return a - b


def dyadic_mul(a: Dyadic, b: Dyadic) -> Dyadic:
    return a * b


def dyadic_cmp(a: Dyadic, b: Dyadic) -> int:
    """Three-way comparison: -1, 0 or 1."""
    return a._cmp(b)


def pow2(e: int) -> Dyadic:
    """Exact ``2**e`` for any integer ``e`` inside the mantissa budget."""
    if e >= 0:
        if e >= _MAX_MAGNITUDE_BITS:
            raise DyadicOverflowError(f"2^{e} exceeds {MANTISSA_BITS}-bit budget")
        return Dyadic(1 << e)
    return Dyadic(1, -e)
