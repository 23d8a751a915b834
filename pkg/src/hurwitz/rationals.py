"""Exact rational scalars, optionally extended by a formal infinity.

Plain values are `fractions.Fraction` (arbitrary precision, always reduced).
The extended form exists for one purpose: a Pochhammer symbol with negative
shift can hit a zero factor, in which case the symbol itself is infinite and
only its reciprocal (exactly 0) is meaningful.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial


class _Infinity:
    """Singleton marker for an infinite scalar."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "Infinity"


INFINITY = _Infinity()


class ExtendedRational:
    """A rational number or the distinguished infinite value.

    Infinite values arise only from Pochhammer symbols whose defining product
    contains a zero factor in the denominator; reciprocal(Infinity) = 0.
    """

    __slots__ = ("value",)

    def __init__(self, value):
        if isinstance(value, _Infinity):
            self.value = INFINITY
        else:
            self.value = Fraction(value)

    @property
    def is_infinite(self) -> bool:
        return self.value is INFINITY

    def reciprocal(self) -> "ExtendedRational":
        if self.is_infinite:
            return ExtendedRational(0)
        if self.value == 0:
            return ExtendedRational(INFINITY)
        return ExtendedRational(1 / self.value)

    def finite(self) -> Fraction:
        """The rational value; raises if infinite."""
        if self.is_infinite:
            raise ValueError("infinite scalar has no rational value")
        return self.value

    def __mul__(self, other):
        o = other.value if isinstance(other, ExtendedRational) else Fraction(other)
        if self.is_infinite or o is INFINITY:
            finite_side = o if self.is_infinite else self.value
            if finite_side is not INFINITY and finite_side == 0:
                raise ValueError("0 * Infinity is indeterminate")
            return ExtendedRational(INFINITY)
        return ExtendedRational(self.value * o)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, ExtendedRational):
            return self.value == other.value or (self.is_infinite and other.is_infinite)
        if isinstance(other, _Infinity):
            return self.is_infinite
        return not self.is_infinite and self.value == other

    def __hash__(self):
        return hash(("ExtendedRational", None if self.is_infinite else self.value))

    def __repr__(self) -> str:
        return f"ExtendedRational({self.value!r})"


def pochhammer_shifted(x, n: int) -> ExtendedRational:
    """The two-sided Pochhammer symbol (x+1)_n.

    (x+1)_n = (x+1)(x+2)...(x+n)            for n >= 0,
    (x+1)_n = 1 / (x(x-1)...(x+n+1))        for n < 0.

    For integer x the symbol vanishes when -n <= x <= -1, and is infinite
    (zero reciprocal) when 0 <= x <= -(n+1).
    """
    x = Fraction(x)
    if n >= 0:
        prod = Fraction(1)
        for i in range(1, n + 1):
            prod *= x + i
        return ExtendedRational(prod)
    prod = Fraction(1)
    for i in range(-n):
        prod *= x - i
    if prod == 0:
        return ExtendedRational(INFINITY)
    return ExtendedRational(1 / prod)


def falling_factorial(x, n: int) -> Fraction:
    """x(x-1)...(x-n+1) for n >= 0."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    prod = Fraction(1)
    x = Fraction(x)
    for i in range(n):
        prod *= x - i
    return prod


def rising_factorial(x, n: int) -> Fraction:
    """x(x+1)...(x+n-1) for n >= 0."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    prod = Fraction(1)
    x = Fraction(x)
    for i in range(n):
        prod *= x + i
    return prod


def inv_factorial(n: int) -> Fraction:
    """1/n! with the convention that 1/n! = 0 for negative n."""
    if n < 0:
        return Fraction(0)
    return Fraction(1, factorial(n))
