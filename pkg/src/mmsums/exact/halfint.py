"""Integers and half-integers stored as twice their value."""

from __future__ import annotations

import math
import numbers
from fractions import Fraction


class HalfInt(numbers.Rational):
    """A value in (1/2)Z, kept exactly as ``twice``."""

    __slots__ = ("twice",)

    def __init__(self, value=0):
        if isinstance(value, HalfInt):
            twice = value.twice
        elif isinstance(value, bool):
            raise TypeError("bool is not a half-integer")
        elif isinstance(value, int):
            twice = 2 * value
        elif isinstance(value, str):
            twice = _parse_twice(value)
        elif isinstance(value, numbers.Rational):
            frac = Fraction(value.numerator, value.denominator)
            if (2 * frac).denominator != 1:
                raise ValueError(f"{value} is not a half-integer")
            twice = int(2 * frac)
        elif isinstance(value, float):
            if not (2 * value).is_integer():
                raise ValueError(f"{value} is not a half-integer")
            twice = int(2 * value)
        else:
            raise TypeError(f"cannot build a half-integer from {value!r}")
        object.__setattr__(self, "twice", twice)

    def __setattr__(self, name, value):
        raise AttributeError("HalfInt is immutable")

    @classmethod
    def from_twice(cls, twice: int) -> HalfInt:
        obj = cls.__new__(cls)
        object.__setattr__(obj, "twice", int(twice))
        return obj

    @property
    def numerator(self) -> int:
        return self.twice if self.twice % 2 else self.twice // 2

    @property
    def denominator(self) -> int:
        return 2 if self.twice % 2 else 1

    def is_integer(self) -> bool:
        return self.twice % 2 == 0

    def fraction(self) -> Fraction:
        return Fraction(self.twice, 2)

    def __repr__(self):
        return f"HalfInt({str(self)!r})"

    def __str__(self):
        if self.twice % 2 == 0:
            return str(self.twice // 2)
        return f"{self.twice}/2"

    def __hash__(self):
        return hash(Fraction(self.twice, 2))

    def __eq__(self, other):
        if isinstance(other, HalfInt):
            return self.twice == other.twice
        if isinstance(other, numbers.Number):
            return Fraction(self.twice, 2) == other
        return NotImplemented

    def _cmp(self, other):
        if isinstance(other, HalfInt):
            return Fraction(self.twice, 2), Fraction(other.twice, 2)
        return Fraction(self.twice, 2), other

    def __lt__(self, other):
        a, b = self._cmp(other)
        return a < b

    def __le__(self, other):
        a, b = self._cmp(other)
        return a <= b

    def __gt__(self, other):
        a, b = self._cmp(other)
        return a > b

    def __ge__(self, other):
        a, b = self._cmp(other)
        return a >= b

    def __bool__(self):
        return self.twice != 0

    def __int__(self):
        if self.twice % 2:
            raise ValueError(f"{self} is not an integer")
        return self.twice // 2

    def __index__(self):
        return int(self)

    def __float__(self):
        return self.twice / 2

    def __floor__(self):
        return self.twice // 2

    def __ceil__(self):
        return -((-self.twice) // 2)

    def __trunc__(self):
        return math.floor(self) if self.twice >= 0 else math.ceil(self)

    def __round__(self, ndigits=None):
        return round(Fraction(self.twice, 2), ndigits)

    def __neg__(self):
        return HalfInt.from_twice(-self.twice)

    def __pos__(self):
        return self

    def __abs__(self):
        return HalfInt.from_twice(abs(self.twice))

    # Sums of half-integers stay half-integers; anything else falls back to Fraction.
    def __add__(self, other):
        if isinstance(other, HalfInt):
            return HalfInt.from_twice(self.twice + other.twice)
        if isinstance(other, int):
            return HalfInt.from_twice(self.twice + 2 * other)
        if isinstance(other, numbers.Rational):
            return Fraction(self.twice, 2) + other
        return float(self) + other

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            return HalfInt.from_twice(self.twice * other)
        if isinstance(other, numbers.Rational):
            return Fraction(self.twice, 2) * Fraction(other.numerator, other.denominator)
        return float(self) * other

    __rmul__ = __mul__

    def __truediv__(self, other):
        return Fraction(self.twice, 2) / other

    def __rtruediv__(self, other):
        return other / Fraction(self.twice, 2)

    def __floordiv__(self, other):
        return Fraction(self.twice, 2) // other

    def __rfloordiv__(self, other):
        return other // Fraction(self.twice, 2)

    def __mod__(self, other):
        return Fraction(self.twice, 2) % other

    def __rmod__(self, other):
        return other % Fraction(self.twice, 2)

    def __pow__(self, exponent):
        return Fraction(self.twice, 2) ** exponent

    def __rpow__(self, base):
        return base ** Fraction(self.twice, 2)


def _parse_twice(text: str) -> int:
    text = text.strip()
    if "/" in text:
        num, den = text.split("/")
        num, den = int(num), int(den)
        if den == 1:
            return 2 * num
        if den != 2:
            raise ValueError(f"{text!r} is not a half-integer")
        return num
    frac = Fraction(text)
    if (2 * frac).denominator != 1:
        raise ValueError(f"{text!r} is not a half-integer")
    return int(2 * frac)


def half_range(lo, hi):
    """All values lo, lo+1, ..., up to hi (inclusive) on the lattice of lo."""
    lo, hi = HalfInt(lo), HalfInt(hi)
    return [HalfInt.from_twice(tw) for tw in range(lo.twice, hi.twice + 1, 2)]
