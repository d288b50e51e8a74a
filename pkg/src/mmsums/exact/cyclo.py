"""Products of cyclotomic polynomials, monomials and a rational constant.

Every q-bracket and every factor ``1 +- t**m`` is such a product, so closed
forms built from them can be multiplied and cancelled without any gcd work.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .laurent import LaurentPoly
from .ratfunc import RationalFunction


@lru_cache(maxsize=None)
def cyclotomic(n: int) -> LaurentPoly:
    """The n-th cyclotomic polynomial in ``t``."""
    p = -LaurentPoly.binomial(n)  # t^n - 1
    for d in divisors(n):
        if d < n:
            p = p.exact_div(cyclotomic(d))
    return p


@lru_cache(maxsize=None)
def divisors(n: int) -> tuple[int, ...]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return tuple(small + large[::-1])


def _prime_power_base(n: int) -> int:
    """p if n is a power of the prime p, else 1."""
    for p in range(2, n + 1):
        if n % p == 0:
            while n % p == 0:
                n //= p
            return p if n == 1 else 1
    return 1


class CycloProduct:
    """``const * t**shift * prod_d Phi_d(t)**mult[d]``."""

    __slots__ = ("const", "shift", "mult")

    def __init__(self, const=1, shift: int = 0, mult: dict[int, int] | None = None):
        self.const = Fraction(const)
        self.shift = int(shift)
        self.mult = {d: m for d, m in (mult or {}).items() if m}
        if not self.const:
            self.shift, self.mult = 0, {}

    @classmethod
    def one_minus(cls, exponent: int, sign: int = 1) -> CycloProduct:
        """``1 - sign*t**exponent`` for sign in {1, -1}."""
        if exponent == 0:
            return cls(1 - sign)
        a = abs(exponent)
        if sign == 1:
            mult = {d: 1 for d in divisors(a)}
            return cls(-1, 0, mult) if exponent > 0 else cls(1, -a, mult)
        mult = {d: 1 for d in divisors(2 * a) if a % d}
        return cls(1, 0, mult) if exponent > 0 else cls(1, -a, mult)

    @classmethod
    def bracket(cls, value, beta: int) -> CycloProduct:
        """The q-bracket ``[value]`` in base ``t**beta``."""
        e = Fraction(value) * beta
        if e.denominator != 1:
            raise ValueError(f"t-exponent {e} of [{value}] in base t^{beta} is not an integer")
        return cls.one_minus(int(e)) / cls.one_minus(beta)

    def is_zero(self) -> bool:
        return not self.const

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycloProduct(self.const * other, self.shift, self.mult)
        if not isinstance(other, CycloProduct):
            return NotImplemented
        mult = dict(self.mult)
        for d, m in other.mult.items():
            mult[d] = mult.get(d, 0) + m
        return CycloProduct(self.const * other.const, self.shift + other.shift, mult)

    __rmul__ = __mul__

    def inverse(self) -> CycloProduct:
        if not self.const:
            raise ZeroDivisionError("inverse of zero")
        return CycloProduct(1 / self.const, -self.shift, {d: -m for d, m in self.mult.items()})

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return CycloProduct(self.const / other, self.shift, self.mult)
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return CycloProduct(self.const**k, self.shift * k, {d: m * k for d, m in self.mult.items()})

    def __neg__(self):
        return CycloProduct(-self.const, self.shift, self.mult)

    def __eq__(self, other):
        if isinstance(other, CycloProduct):
            if not self.const or not other.const:
                return self.const == other.const
            return (self.const, self.shift, self.mult) == (other.const, other.shift, other.mult)
        return NotImplemented

    def negate_variable(self) -> CycloProduct:
        """Replace t by -t: Phi_d(-t) is +-Phi_{2d}, Phi_{d/2} or Phi_d."""
        const = self.const * (-1) ** (self.shift % 2)
        mult: dict[int, int] = {}
        for d, m in self.mult.items():
            if d == 1:
                image, sign = 2, -1
            elif d == 2:
                image, sign = 1, -1
            elif d % 2:
                image, sign = 2 * d, 1
            elif d % 4 == 2:
                image, sign = d // 2, 1
            else:
                image, sign = d, 1
            mult[image] = mult.get(image, 0) + m
            const *= sign**m
        return CycloProduct(const, self.shift, mult)

    def to_rf(self) -> RationalFunction:
        num = LaurentPoly.monomial(self.shift, self.const)
        den = LaurentPoly.constant(1)
        if not self.const:
            return RationalFunction()
        for d in sorted(self.mult):
            m = self.mult[d]
            if m > 0:
                num = num * cyclotomic(d) ** m
            else:
                den = den * cyclotomic(d) ** (-m)
        return RationalFunction._coprime(num, den)

    def evaluate(self, t0):
        t0 = Fraction(t0)
        if t0 == 1:
            return self.at_one()
        value = self.const
        if not value:
            return Fraction(0)
        if self.shift:
            value *= t0**self.shift
        for d, m in self.mult.items():
            v = cyclotomic(d).evaluate(t0)
            if v == 0 and m < 0:
                raise ZeroDivisionError(f"pole at t = {t0}")
            value *= Fraction(v) ** m
        return value

    def at_one(self) -> Fraction:
        """Value at t = 1, the classical limit."""
        if not self.const:
            return Fraction(0)
        order = self.mult.get(1, 0)
        if order < 0:
            raise ZeroDivisionError("pole at t = 1")
        if order > 0:
            return Fraction(0)
        value = self.const
        for d, m in self.mult.items():
            if d > 1:
                value *= Fraction(_prime_power_base(d) or 1) ** m
        return value

    def __repr__(self):
        return f"CycloProduct({self.const}, t^{self.shift}, {dict(sorted(self.mult.items()))})"
