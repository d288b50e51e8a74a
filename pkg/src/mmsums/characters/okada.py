"""Rectangular character sums: exact point checks, specialised forms, reductions.

Each sum runs over all partitions inside ``(r^n)`` and is compared with a
product of two characters indexed by rectangles, which may have
half-integer width.
"""

from __future__ import annotations

from fractions import Fraction

from ..exact.cyclo import CycloProduct
from ..exact.laurent import LaurentPoly
from ..exact.ratfunc import RationalFunction
from ..report import CheckReport, checking
from .bialternant import CharFamily, NonGenericPoint, char_eval, char_ratio
from .partitions import GPartition, ShapeError, partitions_in_box
from .specializations import char_principal_spec, one_minus_q, q_poch, q_power
from .tableaux import tableau_character

RECTANGLE_SUMS = ("so_odd", "sp", "so_even", "o_even")


def _rect(width, n) -> GPartition:
    return GPartition.rectangle(Fraction(width), n)


def rectangle_sum_sides(which: str, r: int, n: int, y, epsilon: int = 1):
    """Both sides of a rectangular sum identity at ``x = y**2``.

    ``so_odd`` takes ``epsilon``: the left side is
    ``sum eps**|lam| so_odd_lam(eps * x)``, evaluated for ``eps = -1`` from
    Sundaram tableaux at ``-x`` and for ``eps = 1`` from the bialternant.
    """
    ys = [Fraction(v) for v in y]
    if len(ys) != n:
        raise ValueError(f"need {n} coordinates, got {len(ys)}")
    if which == "so_odd":
        if epsilon not in (-1, 1):
            raise ValueError("epsilon must be -1 or +1")
        fam = CharFamily.so_odd(n)
        if epsilon == 1:
            lhs = sum((char_eval(fam, lam, ys) for lam in partitions_in_box(r, n)), Fraction(0))
        else:
            neg_x = [-(v * v) for v in ys]
            lhs = sum(
                ((-1) ** int(lam.size) * tableau_character("sundaram", lam, n, neg_x) for lam in partitions_in_box(r, n)),
                Fraction(0),
            )
        s = Fraction(r, 2)
        companion = CharFamily.so_odd(n, -1 if epsilon == 1 else 1)
        rhs = char_eval(fam, _rect(s, n), ys) * char_eval(companion, _rect(s, n), ys)
        return lhs, rhs
    if which == "sp":
        lhs = sum((char_eval(CharFamily.sp(n), lam, ys) for lam in partitions_in_box(r, n)), Fraction(0))
        rhs = char_eval(CharFamily.sp(n), _rect(r // 2, n), ys) * char_eval(CharFamily.so_odd(n), _rect((r + 1) // 2, n), ys)
        return lhs, rhs
    if r < 1:
        raise ValueError("the even-orthogonal sums need r >= 1")
    if which == "so_even":
        s = Fraction(r, 2)
        lhs = sum((char_eval(CharFamily.so_even(n), lam, ys) for lam in partitions_in_box(r, n)), Fraction(0))
        rhs = char_eval(CharFamily.so_even(n), _rect(s, n), ys) * char_eval(CharFamily.so_odd(n), _rect(s, n), ys)
        return lhs, rhs
    if which == "o_even":
        s, t = Fraction(r + 1, 2), Fraction(r - 1, 2)
        lhs = sum(
            (char_eval(CharFamily.o_even(n), lam, ys) for lam in partitions_in_box(r, n) if lam.length == n),
            Fraction(0),
        )
        rhs = char_eval(CharFamily.o_even(n), _rect(s, n), ys) * char_eval(CharFamily.so_odd(n), _rect(t, n), ys)
        return lhs, rhs
    raise ValueError(f"unknown rectangular sum {which!r}; choose from {', '.join(RECTANGLE_SUMS)}")


def rectangle_sum_check(which: str, r: int, n: int, y, epsilon: int = 1) -> CheckReport:
    params = {"r": r, "n": n, "y": list(y)}
    if which == "so_odd":
        params["epsilon"] = epsilon
    with checking(f"rectangle-sum-{which}", params, (ArithmeticError, ValueError)) as report:
        report.lhs, report.rhs = rectangle_sum_sides(which, r, n, y, epsilon)
    return report


# principal specialisations of the rectangular sums

SPECIALISED_SUMS = ("so_odd_int", "so_odd_half", "sp_int", "sp_half", "so_even_half", "o_even_half_full")


def _box_ratio(rows: int, cols: int, shift: int, skip_diagonal: bool = False) -> CycloProduct:
    """``prod (1-q^{i+j+shift})/(1-q^{i+j-1})`` over ``i <= rows``, ``j <= cols``."""
    out = CycloProduct(1)
    for i in range(1, rows + 1):
        for j in range(1, cols + 1):
            if skip_diagonal and i == j:
                continue
            out = out * one_minus_q(i + j + shift) / one_minus_q(i + j - 1)
    return out


def specialised_sum_sides(which: str, r: int, n: int, epsilon: int = 1):
    """Both sides of a specialised rectangular sum as rational functions of ``t``."""
    half = Fraction(1, 2)
    shapes = list(partitions_in_box(r, n))
    if which == "so_odd_int":
        lhs = sum((char_principal_spec("so_odd_int", lam, n) for lam in shapes), RationalFunction())
        rhs = q_power(-r * n * (n + 1) // 2) * q_poch(1, r + 1, n, 2) / q_poch(1, 1, n, 2) * _box_ratio(n, n, r - 1)
    elif which == "so_odd_half":
        if epsilon not in (-1, 1):
            raise ValueError("epsilon must be -1 or +1")
        lhs = RationalFunction()
        for lam in shapes:
            term = char_principal_spec("so_odd_half", lam, n)
            if epsilon == -1:
                # x_i = -q^{i-1/2} is t -> -t
                term = term.negate_variable() * (-1) ** int(lam.size)
            lhs = lhs + term
        rhs = q_power(Fraction(-r * n * n, 2)) * q_poch(1, Fraction(r + 1, 2), n) * q_poch(epsilon, Fraction(r + 1, 2), n)
        rhs = rhs / (q_poch(1, half, n) * q_poch(epsilon, half, n)) * _box_ratio(n, n, r - 1, skip_diagonal=True)
    elif which == "sp_int":
        lhs = sum((char_principal_spec("sp_int", lam, n) for lam in shapes), RationalFunction())
        rhs = q_power(-r * n * (n + 1) // 2) * _box_ratio(n + 1, n, r - 1)
    elif which == "sp_half":
        lhs = sum((char_principal_spec("sp_half", lam, n) for lam in shapes), RationalFunction())
        rhs = q_power(Fraction(-r * n * n, 2))
        for i in range(1, 2 * n + 1):
            rhs = rhs * one_minus_q(Fraction(i + r, 2)) / one_minus_q(Fraction(i, 2))
        for i in range(1, n + 1):
            for j in range(1, n):
                rhs = rhs * one_minus_q(i + j + r) / one_minus_q(i + j)
    elif which in ("so_even_half", "o_even_half_full"):
        if r < 1:
            raise ValueError("the even-orthogonal sums need r >= 1")
        tail = _box_ratio(n, n - 1, r - 1)
        lead = q_power(Fraction(-r * n * n, 2))
        if which == "so_even_half":
            lhs = sum((char_principal_spec("so_even_half", lam, n) for lam in shapes), RationalFunction())
            front = lead * q_poch(1, Fraction(r + 1, 2), n) / q_poch(1, half, n) * tail
            inner = (q_poch(-1, Fraction(r, 2), n) / q_poch(-1, 0, n)).to_rf()
            inner = inner + (q_poch(1, Fraction(r, 2), n) / q_poch(-1, 0, n)).to_rf()
            rhs = front.to_rf() * inner
        else:
            lhs = sum(
                (char_principal_spec("o_even_half", lam, n) for lam in shapes if lam.length == n),
                RationalFunction(),
            )
            rhs = lead * 2 * q_poch(1, Fraction(r, 2), n) / q_poch(1, half, n)
            rhs = rhs * q_poch(-1, Fraction(r + 1, 2), n) / q_poch(-1, 0, n) * tail
    else:
        raise ValueError(f"unknown specialised sum {which!r}; choose from {', '.join(SPECIALISED_SUMS)}")
    if isinstance(rhs, CycloProduct):
        rhs = rhs.to_rf()
    return lhs, rhs


def specialised_sum_check(which: str, r: int, n: int, epsilon: int = 1) -> CheckReport:
    params = {"r": r, "n": n}
    if which == "so_odd_half":
        params["epsilon"] = epsilon
    with checking(f"specialised-sum-{which}", params) as report:
        report.lhs, report.rhs = specialised_sum_sides(which, r, n, epsilon)
        report.detail["at_q_equal_1"] = report.rhs.evaluate(1)
    return report


# the x_n -> 0 reduction


def _limit_at_zero(f: RationalFunction):
    num, den = f.num, f.den
    if not num:
        return Fraction(0)
    gap = num.lowest_exponent() - den.lowest_exponent()
    if gap < 0:
        raise ArithmeticError("the limit at x_n = 0 diverges")
    if gap > 0:
        return Fraction(0)
    return Fraction(num.trailing_coefficient()) / Fraction(den.trailing_coefficient())


def reduction_sides(family: CharFamily, lam: GPartition, y_head, r):
    """``lim x_n^r char_lam(y_head, x_n)`` as x_n -> 0, and the predicted value.

    The prediction is the ``n-1`` variable character of the shape with the
    first part removed when ``r`` equals the first part, and 0 when ``r`` is
    larger.  Schur functions use ``r = 0`` and drop the last (zero) part.
    """
    n = family.n
    head = [Fraction(v) for v in y_head]
    if len(head) != n - 1:
        raise ValueError(f"need {n - 1} fixed coordinates")
    r = Fraction(r)
    lam = lam.padded(n)
    t = RationalFunction(LaurentPoly.monomial(1))
    twice_r = 2 * r
    if twice_r.denominator != 1:
        raise ValueError("r must be a multiple of 1/2")
    value = char_ratio(family, lam, head + [t]) * t ** int(twice_r)
    limit = _limit_at_zero(value)
    smaller = CharFamily(family.kind, n - 1, family.sign)
    if family.kind == "schur":
        if r != 0:
            raise ValueError("Schur stability uses r = 0")
        if lam.twice_parts and lam.twice_parts[-1] != 0:
            return limit, Fraction(0)
        return limit, char_ratio(smaller, GPartition(lam.twice_parts[:-1]), head)
    first = lam.parts[0] if lam.parts else Fraction(0)
    if r < first:
        raise ValueError(f"r = {r} is below the first part {first}")
    if r > first:
        return limit, Fraction(0)
    return limit, char_ratio(smaller, GPartition(lam.twice_parts[1:]), head)


def char_reduce_check(family: CharFamily, lam: GPartition, y_head, r) -> CheckReport:
    params = {"family": family.label, "lambda": str(lam), "y_head": list(y_head), "r": r}
    with checking("reduction", params, (ArithmeticError, ValueError, ShapeError)) as report:
        report.lhs, report.rhs = reduction_sides(family, lam, y_head, r)
    return report


__all__ = [
    "SPECIALISED_SUMS", "RECTANGLE_SUMS", "NonGenericPoint",
    "char_reduce_check", "specialised_sum_sides", "specialised_sum_check",
    "rectangle_sum_check", "rectangle_sum_sides", "reduction_sides",
]
