"""Classical group characters as ratios of exact determinants.

Inputs are ``y`` with ``x = y**2``; every exponent in the bialternants is a
multiple of 1/2, so entries become integer powers of ``y``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..linalg import det
from .partitions import GPartition, validate

KINDS = ("schur", "so_odd", "sp", "so_even", "o_even")


class NonGenericPoint(ArithmeticError):
    """The denominator determinant vanishes at the requested point."""


@dataclass(frozen=True)
class CharFamily:
    """A character family in ``n`` variables.

    ``sign`` only matters for ``so_odd``: -1 is the odd-orthogonal Schur
    function, +1 its companion with plus signs in both determinants.
    """

    kind: str
    n: int
    sign: int = -1

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown character family {self.kind!r}")
        if self.n < 0:
            raise ValueError("negative number of variables")
        if self.sign not in (-1, 1):
            raise ValueError("sign must be -1 or +1")

    @classmethod
    def schur(cls, n):
        return cls("schur", n)

    @classmethod
    def so_odd(cls, n, sign=-1):
        return cls("so_odd", n, sign)

    @classmethod
    def sp(cls, n):
        return cls("sp", n)

    @classmethod
    def so_even(cls, n):
        return cls("so_even", n)

    @classmethod
    def o_even(cls, n):
        return cls("o_even", n)

    @property
    def label(self) -> str:
        if self.kind == "so_odd":
            return f"so_odd{'+' if self.sign == 1 else '-'}({2 * self.n + 1})"
        dims = {"schur": self.n, "sp": 2 * self.n, "so_even": 2 * self.n, "o_even": 2 * self.n}
        return f"{self.kind}({dims[self.kind]})"


def _twice_offsets(kind: str, n: int) -> list[int]:
    """Doubled ``rho_j`` added to ``2*lambda_j`` in column ``j``."""
    extra = {"schur": 0, "so_odd": 1, "sp": 2, "so_even": 0, "o_even": 0}[kind]
    return [2 * (n - j) + extra for j in range(1, n + 1)]


def _power(y, e: int):
    return y**e if e >= 0 else 1 / y**(-e)


def _alternant(ys, exps, kind: str, sign: int):
    """Matrix with entries ``y_i**e_j + sign * y_i**(-e_j)`` (no second term for Schur)."""
    if kind == "schur":
        return [[_power(y, e) for e in exps] for y in ys]
    return [[_power(y, e) + sign * _power(y, -e) for e in exps] for y in ys]


def _exponents(family: CharFamily, lam: GPartition) -> tuple[list[int], list[int]]:
    offsets = _twice_offsets(family.kind, family.n)
    num = [p + o for p, o in zip(lam.twice_parts, offsets)]
    return num, offsets


def _checked_den(d):
    if not d:
        raise NonGenericPoint("denominator determinant vanishes at this point")
    return d


def char_ratio(family: CharFamily, lam: GPartition, ys):
    """Character value for any exact field of ``y`` values.

    Works for ``Fraction`` inputs and for ``RationalFunction`` inputs alike.
    """
    n = family.n
    if len(ys) != n:
        raise ValueError(f"{family.label} needs {n} values, got {len(ys)}")
    lam = validate(family.kind, lam, n)
    num_exps, den_exps = _exponents(family, lam)
    kind = family.kind
    if kind == "schur":
        return det(_alternant(ys, num_exps, kind, 1)) / _checked_den(det(_alternant(ys, den_exps, kind, 1)))
    if kind == "so_odd":
        s = family.sign
        return det(_alternant(ys, num_exps, kind, s)) / _checked_den(det(_alternant(ys, den_exps, kind, s)))
    if kind == "sp":
        return det(_alternant(ys, num_exps, kind, -1)) / _checked_den(det(_alternant(ys, den_exps, kind, -1)))
    den = _checked_den(det(_alternant(ys, den_exps, kind, 1)))
    plus = det(_alternant(ys, num_exps, kind, 1))
    if kind == "o_even":
        weight = 2 if lam.length == n and n > 0 else 1
        return weight * plus / den
    # so_even: sum over sigma of det(sigma*x^a + x^-a); the sigma = -1 matrix
    # is the negative of the minus-alternant
    minus = det(_alternant(ys, num_exps, kind, -1))
    return (plus + (-1) ** n * minus) / den


def char_eval(family: CharFamily, lam: GPartition, y) -> Fraction:
    """Exact value of the character at ``x_i = y_i**2``."""
    ys = [Fraction(v) for v in y]
    if any(v == 0 for v in ys):
        raise NonGenericPoint("zero coordinate")
    return char_ratio(family, lam, ys)
