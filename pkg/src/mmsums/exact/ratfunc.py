"""Rational functions in ``t`` kept in lowest terms.

Normal form: numerator and denominator share no polynomial factor, the
denominator has lowest exponent 0 and leading coefficient 1.  Two equal
rational functions therefore have identical components.
"""

from __future__ import annotations

from fractions import Fraction

from .laurent import LaurentPoly, poly_gcd

_ONE = LaurentPoly.constant(1)


class RationalFunction:
    __slots__ = ("num", "den")

    def __init__(self, num=0, den=1):
        num = _as_poly(num)
        den = _as_poly(den)
        if not den.coeffs:
            raise ZeroDivisionError("rational function with zero denominator")
        if not num.coeffs:
            self.num, self.den = LaurentPoly(), _ONE
            return
        if len(den.coeffs) > 1 and len(num.coeffs) > 1:
            g = poly_gcd(num, den)
            if len(g.coeffs) > 1:
                num = num.exact_div(g)
                den = den.exact_div(g)
        self.num, self.den = _finish(num, den)

    @classmethod
    def _coprime(cls, num: LaurentPoly, den: LaurentPoly) -> RationalFunction:
        """Skip the gcd step; caller guarantees no common factor."""
        obj = cls.__new__(cls)
        if not num.coeffs:
            obj.num, obj.den = LaurentPoly(), _ONE
        else:
            obj.num, obj.den = _finish(num, den)
        return obj

    @classmethod
    def from_poly(cls, p) -> RationalFunction:
        return cls._coprime(_as_poly(p), _ONE)

    def is_zero(self) -> bool:
        return not self.num.coeffs

    def __bool__(self):
        return bool(self.num.coeffs)

    def is_laurent(self) -> bool:
        return self.den == _ONE

    def as_laurent(self) -> LaurentPoly:
        if not self.is_laurent():
            raise ValueError(f"{self} is not a Laurent polynomial")
        return self.num

    def is_constant(self) -> bool:
        return self.den == _ONE and self.num.is_constant()

    def constant_value(self):
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.num.constant_value()

    def __eq__(self, other):
        if isinstance(other, RationalFunction):
            return self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction, LaurentPoly)):
            return self == RationalFunction.from_poly(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.num, self.den))

    def __neg__(self):
        return RationalFunction._coprime(-self.num, self.den)

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if not other.num.coeffs:
            return self
        if not self.num.coeffs:
            return other
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RationalFunction._coprime(self.num * other, self.den)
        other = _coerce(other)
        if other is NotImplemented:
            return other
        a, b = _cancel(self.num, other.den)
        c, d = _cancel(other.num, self.den)
        return RationalFunction._coprime(a * c, b * d)

    __rmul__ = __mul__

    def inverse(self) -> RationalFunction:
        if not self.num.coeffs:
            raise ZeroDivisionError("inverse of zero rational function")
        return RationalFunction._coprime(self.den, self.num)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return _coerce(other) * self.inverse()

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return RationalFunction._coprime(self.num**exponent, self.den**exponent)

    def negate_variable(self) -> RationalFunction:
        return RationalFunction._coprime(self.num.negate_variable(), self.den.negate_variable())

    def substitute_power(self, k: int) -> RationalFunction:
        return RationalFunction._coprime(self.num.substitute_power(k), self.den.substitute_power(k))

    def evaluate(self, t0):
        return eval_rf(self, t0)

    __call__ = evaluate

    def __repr__(self):
        return f"RationalFunction({self})"

    def __str__(self):
        if self.den == _ONE:
            return str(self.num)
        return f"({self.num}) / ({self.den})"


def eval_rf(f: RationalFunction, t0):
    """Exact value of ``f`` at the rational point ``t0``."""
    t0 = Fraction(t0)
    d = f.den.evaluate(t0)
    if d == 0:
        raise ZeroDivisionError(f"pole at t = {t0}")
    return Fraction(f.num.evaluate(t0)) / d


def _finish(num: LaurentPoly, den: LaurentPoly):
    shift = den.low
    if shift:
        num, den = num.shift(-shift), den.shift(-shift)
    lc = den.coeffs[-1]
    if lc != 1:
        if lc == -1:
            num, den = -num, -den
        else:
            inv = Fraction(1) / lc
            num, den = num * inv, den * inv
    return num, den


def _cancel(a: LaurentPoly, b: LaurentPoly):
    if len(a.coeffs) <= 1 or len(b.coeffs) <= 1:
        return a, b
    g = poly_gcd(a, b)
    if len(g.coeffs) > 1:
        return a.exact_div(g), b.exact_div(g)
    return a, b


def _as_poly(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return LaurentPoly.constant(x)
    raise TypeError(f"cannot use {x!r} as a polynomial")


def _coerce(x):
    if isinstance(x, RationalFunction):
        return x
    if isinstance(x, (int, Fraction, LaurentPoly)):
        return RationalFunction.from_poly(x)
    return NotImplemented


T = RationalFunction.from_poly(LaurentPoly.monomial(1))
