"""Ratios of q-gamma values and classical gamma at half-integers."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import zip_longest

from .cyclo import CycloProduct
from .ratfunc import RationalFunction


class TranscendentalResidue(ArithmeticError):
    """A gamma product does not reduce to finitely many brackets."""


class PoleError(ArithmeticError):
    """A product hits a pole (a zero in a denominator)."""


@dataclass(frozen=True)
class GammaFactor:
    """``Gamma_Q(arg)**power`` with ``Q = t**base_beta``."""

    base_beta: int
    arg: Fraction
    power: int = 1

    def __post_init__(self):
        object.__setattr__(self, "arg", Fraction(self.arg))


def gamma_ratio_brackets(factors) -> tuple[list[tuple[int, Fraction, int]], bool]:
    """Reduce a product of q-gamma factors to q-brackets.

    Factors are grouped by base and by the fractional part of the argument.
    Within a group numerator and denominator arguments are sorted and paired
    in order, and ``Gamma_Q(a)/Gamma_Q(c)`` becomes ``[c]...[a-1]``.  Groups
    of integer arguments are padded with ``Gamma_Q(1) = 1``.  Returns the
    bracket list ``(beta, value, power)`` and a flag telling whether a zero
    bracket appeared in a numerator.
    """
    groups: dict[tuple[int, Fraction], tuple[list, list]] = {}
    for f in factors:
        key = (f.base_beta, f.arg - math.floor(f.arg))
        nums, dens = groups.setdefault(key, ([], []))
        target = nums if f.power > 0 else dens
        target.extend([f.arg] * abs(f.power))
    brackets = []
    zero = False
    for (beta, frac), (nums, dens) in sorted(groups.items()):
        if len(nums) != len(dens):
            if frac != 0:
                raise TranscendentalResidue(
                    f"unbalanced gamma factors in base t^{beta} at fractional part {frac}"
                )
        nums, dens = sorted(nums), sorted(dens)
        for a, c in zip_longest(nums, dens, fillvalue=Fraction(1)):
            if a == c:
                continue
            if a > c:
                lo, count, power = c, int(a - c), 1
            else:
                lo, count, power = a, int(c - a), -1
            for j in range(count):
                value = lo + j
                if value == 0:
                    if power > 0:
                        zero = True
                        continue
                    raise PoleError(f"pole of the gamma ratio in base t^{beta}")
                brackets.append((beta, value, power))
    return brackets, zero


def gamma_ratio_cyclo(factors) -> CycloProduct:
    brackets, zero = gamma_ratio_brackets(factors)
    if zero:
        return CycloProduct(0)
    out = CycloProduct(1)
    for beta, value, power in brackets:
        out = out * CycloProduct.bracket(value, beta) ** power
    return out


def gamma_ratio_product(factors) -> RationalFunction:
    """Exact rational function equal to a balanced product of q-gamma values."""
    return gamma_ratio_cyclo(factors).to_rf()


def gamma_ratio_rational(numerators, denominators) -> Fraction:
    """Classical ``prod Gamma(a) / prod Gamma(c)`` for rational arguments.

    Pairs arguments differing by integers; raises when a class is unbalanced.
    """
    groups: dict[Fraction, tuple[list, list]] = {}
    for a in numerators:
        a = Fraction(a)
        groups.setdefault(a - math.floor(a), ([], []))[0].append(a)
    for c in denominators:
        c = Fraction(c)
        groups.setdefault(c - math.floor(c), ([], []))[1].append(c)
    value = Fraction(1)
    for frac, (nums, dens) in sorted(groups.items()):
        if len(nums) != len(dens) and frac != 0:
            raise TranscendentalResidue(f"unbalanced gamma factors at fractional part {frac}")
        for a, c in zip_longest(sorted(nums), sorted(dens), fillvalue=Fraction(1)):
            lo, hi, up = (c, a, True) if a >= c else (a, c, False)
            prod = Fraction(1)
            for j in range(int(hi - lo)):
                prod *= lo + j
            if not prod:
                if up:
                    return Fraction(0)
                raise PoleError("pole of the gamma ratio")
            value = value * prod if up else value / prod
    return value


@dataclass(frozen=True)
class SqrtPiNumber:
    """``coeff * 2**(two_half_power/2) * pi**(pi_half_power/2)``.

    ``two_half_power`` is kept in {0, 1}.
    """

    coeff: Fraction
    pi_half_power: int = 0
    two_half_power: int = 0

    def __post_init__(self):
        coeff = Fraction(self.coeff)
        two = self.two_half_power
        coeff *= Fraction(2) ** (two // 2)
        two %= 2
        if not coeff:
            object.__setattr__(self, "pi_half_power", 0)
            two = 0
        object.__setattr__(self, "coeff", coeff)
        object.__setattr__(self, "two_half_power", two)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return SqrtPiNumber(self.coeff * other, self.pi_half_power, self.two_half_power)
        return SqrtPiNumber(
            self.coeff * other.coeff,
            self.pi_half_power + other.pi_half_power,
            self.two_half_power + other.two_half_power,
        )

    __rmul__ = __mul__

    def inverse(self) -> SqrtPiNumber:
        if not self.coeff:
            raise ZeroDivisionError("inverse of zero")
        # 1/sqrt(2) = sqrt(2)/2
        return SqrtPiNumber(
            Fraction(1) / self.coeff / (2 if self.two_half_power else 1),
            -self.pi_half_power,
            self.two_half_power,
        )

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return SqrtPiNumber(self.coeff / other, self.pi_half_power, self.two_half_power)
        return self * other.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return SqrtPiNumber(self.coeff**k, self.pi_half_power * k, self.two_half_power * k)

    def is_rational(self) -> bool:
        return not self.coeff or (self.pi_half_power == 0 and self.two_half_power == 0)

    def rational(self) -> Fraction:
        if not self.is_rational():
            raise TranscendentalResidue(f"{self} is not rational")
        return self.coeff

    def __float__(self):
        return float(self.coeff) * 2 ** (self.two_half_power / 2) * math.pi ** (self.pi_half_power / 2)

    def __str__(self):
        parts = [str(self.coeff)]
        if self.two_half_power:
            parts.append("sqrt(2)")
        if self.pi_half_power:
            parts.append(f"pi^({self.pi_half_power}/2)")
        return "*".join(parts)


def gamma_halfint(x) -> SqrtPiNumber:
    """Gamma at a positive integer or half-integer."""
    x = Fraction(x)
    if x <= 0:
        raise ValueError(f"gamma_halfint needs a positive argument, got {x}")
    if x.denominator == 1:
        return SqrtPiNumber(math.factorial(int(x) - 1))
    if x.denominator != 2:
        raise ValueError(f"{x} is not a half-integer")
    k = int(x - Fraction(1, 2))
    # Gamma(k + 1/2) = (2k)! / (4^k k!) sqrt(pi)
    return SqrtPiNumber(Fraction(math.factorial(2 * k), 4**k * math.factorial(k)), 1)
