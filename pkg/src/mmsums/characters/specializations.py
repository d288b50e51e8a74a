"""Product formulas for characters at geometric points, in ``t = q**(1/2)``.

Two point sets occur: ``x_i = q**i`` style (``int``) and
``x_i = q**(i - 1/2)`` (``half``).  Each family has a direct product over
the parts and, for shapes inside a rectangle, a dual product over columns.
The registry records the family and the point set of every formula so
tests can compare against the bialternants.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from ..exact.cyclo import CycloProduct
from ..exact.ratfunc import RationalFunction
from .bialternant import CharFamily
from .partitions import GPartition, ShapeError, validate


def _te(q_exponent) -> int:
    """t-exponent of ``q**q_exponent``."""
    e = 2 * Fraction(q_exponent)
    if e.denominator != 1:
        raise ValueError(f"q-exponent {q_exponent} is not a multiple of 1/2")
    return int(e)


def one_minus_q(k, sign: int = 1) -> CycloProduct:
    """``1 - sign * q**k``."""
    return CycloProduct.one_minus(_te(k), sign)


def q_power(k) -> CycloProduct:
    return CycloProduct(1, _te(k))


def q_binom(top: int, bottom: int) -> CycloProduct:
    """Gaussian binomial in base q; zero outside ``0 <= bottom <= top``."""
    if bottom < 0 or bottom > top:
        return CycloProduct(0)
    out = CycloProduct(1)
    for j in range(1, bottom + 1):
        out = out * one_minus_q(top - bottom + j) / one_minus_q(j)
    return out


def q_poch(sign: int, start, n: int, step=1) -> CycloProduct:
    """``(sign * q**start; q**step)_n`` for ``n >= 0``."""
    out = CycloProduct(1)
    for j in range(n):
        out = out * one_minus_q(Fraction(start) + Fraction(step) * j, sign)
    return out


def _pairs(parts, n, shift):
    """``prod_{i<j} (1-q^{l_i-l_j+j-i})/(1-q^{j-i}) * (1-q^{l_i+l_j+shift-i-j})/(1-q^{shift-i-j})``."""
    out = CycloProduct(1)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            li, lj = parts[i - 1], parts[j - 1]
            out = out * one_minus_q(li - lj + j - i) / one_minus_q(j - i)
            out = out * one_minus_q(li + lj + shift - i - j) / one_minus_q(shift - i - j)
    return out


def _dual_pairs(cols, r, shift):
    """``prod_{i<j<=r} (1-q^{c_i-c_j+j-i})/(1-q^{j-i}) * (1-q^{shift-c_i-c_j+i+j})/(1-q^{shift+i+j})``."""
    out = CycloProduct(1)
    for i in range(1, r + 1):
        for j in range(i + 1, r + 1):
            ci, cj = cols[i - 1], cols[j - 1]
            out = out * one_minus_q(ci - cj + j - i) / one_minus_q(j - i)
            if shift is not None:
                out = out * one_minus_q(shift - ci - cj + i + j) / one_minus_q(shift + i + j)
    return out


def _dual_binoms(cols, r, top):
    out = CycloProduct(1)
    for i in range(1, r + 1):
        out = out * q_binom(top, cols[i - 1] + r - i) / q_binom(top, r - i)
    return out


# direct forms


def _schur(lam, n, r):
    p = lam.parts
    out = q_power(lam.n_stat)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            out = out * one_minus_q(p[i - 1] - p[j - 1] + j - i) / one_minus_q(j - i)
    return out


def _so_odd_int(lam, n, r):
    p = lam.parts
    out = q_power(lam.n_stat - n * lam.size)
    for i in range(1, n + 1):
        out = out * one_minus_q(2 * p[i - 1] + 2 * n - 2 * i + 1) / one_minus_q(2 * n - 2 * i + 1)
    return out * _pairs(p, n, 2 * n + 1)


def _so_odd_half(lam, n, r):
    p = lam.parts
    half = Fraction(1, 2)
    out = q_power(lam.n_stat - (n - half) * lam.size)
    for i in range(1, n + 1):
        out = out * one_minus_q(p[i - 1] + n - i + half) / one_minus_q(n - i + half)
    return out * _pairs(p, n, 2 * n + 1)


def _so_plus_half(lam, n, r):
    p = lam.parts
    half = Fraction(1, 2)
    out = q_power(lam.n_stat - (n - half) * lam.size)
    for i in range(1, n + 1):
        out = out * one_minus_q(p[i - 1] + n - i + half, -1) / one_minus_q(n - i + half, -1)
    return out * _pairs(p, n, 2 * n + 1)


def _sp_int(lam, n, r):
    p = lam.parts
    out = q_power(lam.n_stat - n * lam.size)
    for i in range(1, n + 1):
        out = out * one_minus_q(2 * (p[i - 1] + n - i + 1)) / one_minus_q(2 * (n - i + 1))
    return out * _pairs(p, n, 2 * n + 2)


def _sp_half(lam, n, r):
    p = lam.parts
    half = Fraction(1, 2)
    out = q_power(lam.n_stat - (n - half) * lam.size)
    for i in range(1, n + 1):
        out = out * one_minus_q(p[i - 1] + n - i + 1) / one_minus_q(n - i + 1)
    return out * _pairs(p, n, 2 * n + 2)


def _o_even_half(lam, n, r):
    p = lam.parts
    half = Fraction(1, 2)
    weight = 2 if lam.length == n and n > 0 else 1
    out = q_power(lam.n_stat - (n - half) * lam.size) * weight
    for i in range(1, n + 1):
        out = out * one_minus_q(p[i - 1] + n - i, -1) / one_minus_q(n - i, -1)
    return out * _pairs(p, n, 2 * n)


def _so_even_half(lam, n, r):
    p = lam.parts
    half = Fraction(1, 2)
    plus, minus = CycloProduct(1), CycloProduct(1)
    for i in range(1, n + 1):
        plus = plus * one_minus_q(p[i - 1] + n - i, -1) / one_minus_q(n - i, -1)
        minus = minus * one_minus_q(p[i - 1] + n - i) / one_minus_q(n - i, -1)
    common = q_power(lam.n_stat - (n - half) * lam.size) * _pairs(p, n, 2 * n)
    return (plus.to_rf() + minus.to_rf()) * common.to_rf()


# dual forms over the columns of a shape inside (r^n)


def _schur_dual(lam, n, r):
    cols = lam.conjugate(r)
    return q_power(lam.n_stat) * _dual_binoms(cols, r, n + r - 1) * _dual_pairs(cols, r, None)


def _so_odd_int_dual(lam, n, r):
    cols = lam.conjugate(r)
    out = q_power(lam.n_stat - n * lam.size) * _dual_binoms(cols, r, 2 * n + 2 * r - 1)
    return out * _dual_pairs(cols, r, 2 * n - 1)


def _so_odd_half_dual(lam, n, r):
    cols = lam.conjugate(r)
    half = Fraction(1, 2)
    out = q_power(lam.n_stat - (n - half) * lam.size) * _dual_binoms(cols, r, 2 * n + 2 * r - 1)
    for i in range(1, r + 1):
        out = out * one_minus_q(n - cols[i - 1] + i - half, -1) / one_minus_q(n + i - half, -1)
    return out * _dual_pairs(cols, r, 2 * n - 1)


def _sp_int_dual(lam, n, r):
    cols = lam.conjugate(r)
    out = q_power(lam.n_stat - n * lam.size) * _dual_binoms(cols, r, 2 * n + 2 * r)
    for i in range(1, r + 1):
        out = out * one_minus_q(n - cols[i - 1] + i) / one_minus_q(n + i)
    return out * _dual_pairs(cols, r, 2 * n)


def _sp_half_dual(lam, n, r):
    cols = lam.conjugate(r)
    half = Fraction(1, 2)
    out = q_power(lam.n_stat - (n - half) * lam.size) * _dual_binoms(cols, r, 2 * n + 2 * r)
    for i in range(1, r + 1):
        out = out * one_minus_q(2 * (n - cols[i - 1] + i)) / one_minus_q(2 * (n + i))
    return out * _dual_pairs(cols, r, 2 * n)


def _o_even_half_dual(lam, n, r):
    cols = lam.conjugate(r)
    half = Fraction(1, 2)
    out = q_power(lam.n_stat - (n - half) * lam.size) * _dual_binoms(cols, r, 2 * n + 2 * r - 2)
    return out * _dual_pairs(cols, r, 2 * n - 2)


@dataclass(frozen=True)
class SpecFormula:
    family: CharFamily
    points: str  # "schur", "int" or "half"
    dual: bool
    build: Callable

    def point_exponents(self) -> list[int]:
        """t-exponents of the specialised ``x_i``.

        With ``t = s**2`` these are also the s-exponents of ``y_i``, which is
        how rational test points for the bialternants are produced.
        """
        n = self.family.n
        if self.points == "schur":
            return [2 * (i - 1) for i in range(1, n + 1)]
        if self.points == "int":
            return [2 * i for i in range(1, n + 1)]
        return [2 * i - 1 for i in range(1, n + 1)]


_FORMULAS = {
    "schur": ("schur", -1, "schur", False, _schur),
    "schur_dual": ("schur", -1, "schur", True, _schur_dual),
    "so_odd_int": ("so_odd", -1, "int", False, _so_odd_int),
    "so_odd_int_dual": ("so_odd", -1, "int", True, _so_odd_int_dual),
    "so_odd_half": ("so_odd", -1, "half", False, _so_odd_half),
    "so_odd_half_dual": ("so_odd", -1, "half", True, _so_odd_half_dual),
    "so_plus_half": ("so_odd", 1, "half", False, _so_plus_half),
    "sp_int": ("sp", -1, "int", False, _sp_int),
    "sp_int_dual": ("sp", -1, "int", True, _sp_int_dual),
    "sp_half": ("sp", -1, "half", False, _sp_half),
    "sp_half_dual": ("sp", -1, "half", True, _sp_half_dual),
    "o_even_half": ("o_even", -1, "half", False, _o_even_half),
    "o_even_half_dual": ("o_even", -1, "half", True, _o_even_half_dual),
    "so_even_half": ("so_even", -1, "half", False, _so_even_half),
}

SPEC_IDS = tuple(_FORMULAS)


def spec_formula(spec_id: str, n: int) -> SpecFormula:
    try:
        kind, sign, points, dual, build = _FORMULAS[spec_id]
    except KeyError:
        raise ValueError(f"unknown specialisation {spec_id!r}; choose from {', '.join(SPEC_IDS)}") from None
    return SpecFormula(CharFamily(kind, n, sign), points, dual, build)


def principal_spec_product(spec_id: str, lam: GPartition, n: int, r: int | None = None):
    """The product formula as a ``CycloProduct`` (``RationalFunction`` for sums of products)."""
    formula = spec_formula(spec_id, n)
    lam = validate(formula.family.kind, lam, n)
    if formula.dual:
        if r is None:
            r = max(lam.int_parts(), default=0)
        if not lam.fits_in_box(r, n):
            raise ShapeError(f"{lam} is not inside the rectangle ({r}^{n})")
    return formula.build(lam, n, r)


def char_principal_spec(spec_id: str, lam: GPartition, n: int, r: int | None = None) -> RationalFunction:
    """Exact rational function in ``t`` for the chosen product formula."""
    value = principal_spec_product(spec_id, lam, n, r)
    return value if isinstance(value, RationalFunction) else value.to_rf()
