"""Terminating hypergeometric and basic hypergeometric series.

Basic series take parameters that are signed monomials ``sign * t**e`` in
``t = q**(1/2)``, so every term is a product of factors ``1 - sign*t**k``
and stays exact.  Checks cover the Dixon, well-poised 4F3, Whipple and
Watson formulas, the multiple BC_r transformation with a finite upper
limit, and numeric spot checks of its limiting forms with infinite products.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from fractions import Fraction

from .exact.cyclo import CycloProduct
from .exact.gamma import gamma_ratio_rational
from .exact.qfunc import q_shifted_ratio
from .exact.ratfunc import RationalFunction
from .report import CheckReport, checking


class DegenerateParameters(ArithmeticError):
    """A denominator factor vanishes inside the summation range."""


class NonTerminating(ValueError):
    """No upper parameter stops the series."""


# signed monomials


@dataclass(frozen=True, order=True)
class QMonomial:
    """``sign * t**exponent`` with ``t = q**(1/2)``."""

    sign: int
    exponent: int

    def __post_init__(self):
        if self.sign not in (-1, 1):
            raise ValueError("monomial sign must be -1 or +1")

    @classmethod
    def q(cls, power=1, sign: int = 1) -> QMonomial:
        e = 2 * Fraction(power)
        if e.denominator != 1:
            raise ValueError(f"q**{power} is not an integer power of t")
        return cls(sign, int(e))

    @classmethod
    def parse(cls, text: str) -> QMonomial:
        """Read ``q``, ``-q^3/2``, ``q^-1``, ``t^3`` or ``1``."""
        s = text.strip().replace(" ", "")
        sign = 1
        if s.startswith("-"):
            sign, s = -1, s[1:]
        if s == "1":
            return cls(sign, 0)
        m = re.fullmatch(r"([qt])(?:\^\(?([-+]?\d+(?:/\d+)?)\)?)?", s)
        if not m:
            raise ValueError(f"cannot read monomial {text!r}")
        power = Fraction(m.group(2) or 1)
        if m.group(1) == "t":
            if power.denominator != 1:
                raise ValueError("powers of t must be integers")
            return cls(sign, int(power))
        return cls.q(power, sign)

    def __mul__(self, other):
        if isinstance(other, QMonomial):
            return QMonomial(self.sign * other.sign, self.exponent + other.exponent)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, QMonomial):
            return QMonomial(self.sign * other.sign, self.exponent - other.exponent)
        return NotImplemented

    def __pow__(self, k: int):
        return QMonomial(self.sign**k, self.exponent * k)

    def __neg__(self):
        return QMonomial(-self.sign, self.exponent)

    def shift(self, q_power) -> QMonomial:
        """Multiply by ``q**q_power``."""
        return self * QMonomial.q(q_power)

    def sqrt(self) -> QMonomial:
        if self.sign != 1 or self.exponent % 2:
            raise ValueError(f"{self} has no monomial square root")
        return QMonomial(1, self.exponent // 2)

    def cyclo(self) -> CycloProduct:
        return CycloProduct(self.sign, self.exponent)

    def one_minus(self) -> CycloProduct:
        return CycloProduct.one_minus(self.exponent, self.sign)

    def value(self, t0) -> Fraction:
        return self.sign * Fraction(t0) ** self.exponent

    def __str__(self):
        head = "-" if self.sign < 0 else ""
        if self.exponent == 0:
            return head + "1"
        return f"{head}t^{self.exponent}"


Q = QMonomial.q(1)
ONE = QMonomial(1, 0)


def qpoch(x: QMonomial, k: int) -> CycloProduct:
    """``(x; q)_k`` for any integer ``k``."""
    try:
        return q_shifted_ratio(x.sign, x.exponent, 2, int(k))
    except ZeroDivisionError as exc:
        raise DegenerateParameters(f"({x}; q)_{k} has a vanishing denominator") from exc


def qpochs(args, k: int) -> CycloProduct:
    out = CycloProduct(1)
    for x in args:
        out = out * qpoch(x, k)
    return out


def _divide(num: CycloProduct, den: CycloProduct) -> CycloProduct:
    if den.is_zero():
        raise DegenerateParameters("a denominator factor vanishes")
    return num / den


def infinite_product_ratio(pairs) -> CycloProduct:
    """``prod (x;q)_inf / (y;q)_inf`` over ``(x, y)`` pairs that differ by a power of q.

    Each pair becomes ``(x;q)_k`` with ``y = x q^k``.  The pairing is taken
    as given rather than searched for: when a parameter is itself a power of
    q both products can vanish, and only the pairing that comes from
    generic parameters gives the right limit.
    """
    out = CycloProduct(1)
    for x, y in pairs:
        if x.sign != y.sign or (y.exponent - x.exponent) % 2:
            raise ValueError(f"({x};q)_inf / ({y};q)_inf is not a finite product")
        out = out * qpoch(x, (y.exponent - x.exponent) // 2)
    return out


# series


@dataclass(frozen=True)
class HyperSeries:
    """``upper``/``lower`` parameters and argument ``z`` of a terminating series.

    Ordinary series hold rationals; basic series hold :class:`QMonomial`.
    ``length`` fixes the last term when the caller knows which parameter
    terminates the series; otherwise the earliest stopping parameter wins.
    """

    upper: tuple
    lower: tuple
    z: object = 1
    length: int | None = None

    @property
    def is_basic(self) -> bool:
        return any(isinstance(p, QMonomial) for p in self.upper + self.lower + (self.z,))

    def terms_count(self) -> int:
        """Index of the last possibly nonzero term."""
        if self.length is not None:
            return self.length
        stops = []
        for a in self.upper:
            if isinstance(a, QMonomial):
                if a.sign == 1 and a.exponent <= 0 and a.exponent % 2 == 0:
                    stops.append(-a.exponent // 2)
            else:
                a = Fraction(a)
                if a.denominator == 1 and a <= 0:
                    stops.append(int(-a))
        if not stops:
            raise NonTerminating("no upper parameter is a non-positive integer (or q to such a power)")
        return min(stops)


def pochhammer(x, m: int) -> Fraction:
    """Rising factorial ``x (x+1) ... (x+m-1)``."""
    out = Fraction(1)
    x = Fraction(x)
    for k in range(m):
        out *= x + k
    return out


def hyper_terminating(series: HyperSeries) -> Fraction:
    """Exact value of a terminating ordinary series."""
    last = series.terms_count()
    z = Fraction(series.z)
    total = Fraction(0)
    term = Fraction(1)
    for ell in range(last + 1):
        total += term
        if ell == last:
            break
        num = Fraction(1)
        for a in series.upper:
            num *= Fraction(a) + ell
        den = Fraction(ell + 1)
        for b in series.lower:
            den *= Fraction(b) + ell
        if den == 0:
            raise DegenerateParameters(f"lower parameter hits zero at term {ell + 1}")
        term = term * num / den * z
    return total


def qhyper_terms(series: HyperSeries) -> list[CycloProduct]:
    """Terms ``(a;q)_l / (q,b;q)_l ((-1)^l q^{l(l-1)/2})^{s-r+1} z^l`` as exact products."""
    last = series.terms_count()
    upper, lower = list(series.upper), list(series.lower)
    z = series.z if isinstance(series.z, QMonomial) else QMonomial.parse(str(series.z))
    excess = len(lower) - len(upper) + 1
    out = []
    for ell in range(last + 1):
        num = qpochs(upper, ell) * CycloProduct((-1) ** (ell * excess), ell * (ell - 1) * excess) * (z**ell).cyclo()
        den = qpochs([Q] + lower, ell)
        out.append(_divide(num, den))
    return out


def qhyper_terminating(series: HyperSeries, t0=None):
    """Exact sum of a terminating basic series.

    ``t0=None`` gives a ``RationalFunction`` of ``t``; a rational ``t0``
    gives its value, with ``t0 = 1`` meaning the limit ``q -> 1`` taken term
    by term.
    """
    terms = qhyper_terms(series)
    if t0 is None:
        return sum((term.to_rf() for term in terms), RationalFunction())
    t0 = Fraction(t0)
    return sum((_value(term, t0) for term in terms), Fraction(0))


def _value(product: CycloProduct, t0: Fraction) -> Fraction:
    """Evaluate, reporting a pole of the q -> 1 limit as degenerate input."""
    try:
        return product.evaluate(t0)
    except ZeroDivisionError as exc:
        raise DegenerateParameters(f"{exc} for these parameters") from None


# classical summation and transformation formulas

CLASSICAL = ("dixon", "f43sum", "whipple", "watson")


def dixon_sides(a, b, N: int):
    a, b = Fraction(a), Fraction(b)
    lhs = hyper_terminating(HyperSeries((a, b, -N), (1 + a - b, 1 + a + N), 1, N))
    rhs = pochhammer(1 + a, N) * pochhammer(1 + a / 2 - b, N) / (pochhammer(1 + a / 2, N) * pochhammer(1 + a - b, N))
    return lhs, rhs


def f43_sides(a, b, N: int):
    """The well-poised 4F3 sum with ``c = -N``; the right side is a gamma ratio."""
    a, b, c = Fraction(a), Fraction(b), Fraction(-N)
    lhs = hyper_terminating(HyperSeries((a, a / 2 + 1, b, c), (a / 2, 1 + a - b, 1 + a - c), 1, N))
    half = Fraction(1, 2)
    rhs = gamma_ratio_rational(
        [1 + a - b, 1 + a - c, half + a / 2, half + a / 2 - b - c],
        [1 + a, 1 + a - b - c, half + a / 2 - b, half + a / 2 - c],
    )
    return lhs, rhs


def whipple_sides(a, b, c, e, f, N: int):
    """Balanced 4F3 transformation; both sides are summed directly."""
    a, b, c, e, f = (Fraction(v) for v in (a, b, c, e, f))
    top = 1 + a + b + c - e - f - N
    lhs = hyper_terminating(HyperSeries((a, b, c, -N), (e, f, top), 1, N))
    pre = pochhammer(e - a, N) * pochhammer(f - a, N) / (pochhammer(e, N) * pochhammer(f, N))
    other = HyperSeries(
        (-N, a, 1 + a + c - e - f - N, 1 + a + b - e - f - N),
        (top, 1 + a - e - N, 1 + a - f - N),
        1,
        N,
    )
    return lhs, pre * hyper_terminating(other)


def watson_sides(a: QMonomial, b, c, d, e, N: int, t0=None):
    """Very-well-poised 8phi7 against a balanced 4phi3, with ``f = q^-N``.

    The infinite products on the right cancel to finite ones because ``f``
    is a negative power of q.
    """
    f = QMonomial.q(-N)
    root = a.sqrt()
    aq = a * Q
    z = (a * a * Q * Q) / (b * c * d * e * f)
    eight = HyperSeries(
        (a, Q * root, -(Q * root), b, c, d, e, f),
        (root, -root, aq / b, aq / c, aq / d, aq / e, aq / f),
        z,
        N,
    )
    four = HyperSeries((aq / (b * c), d, e, f), (aq / b, aq / c, (d * e * f) / a), Q, N)
    pre = infinite_product_ratio([
        (aq, aq / f), (aq / (d * e), aq / (d * e * f)), (aq / (d * f), aq / d), (aq / (e * f), aq / e),
    ])
    lhs = qhyper_terminating(eight, t0)
    rhs_sum = qhyper_terminating(four, t0)
    if t0 is None:
        return lhs, pre.to_rf() * rhs_sum
    return lhs, _value(pre, t0) * rhs_sum


def classical_identity_check(which: str, params: dict, t0=None) -> CheckReport:
    shown = dict(params)
    if t0 is not None:
        shown["t0"] = Fraction(t0)
    with checking(which, shown, (ArithmeticError, ValueError)) as report:
        if which == "dixon":
            report.lhs, report.rhs = dixon_sides(params["a"], params["b"], int(params["N"]))
        elif which == "f43sum":
            report.lhs, report.rhs = f43_sides(params["a"], params["b"], int(params["N"]))
        elif which == "whipple":
            p = params
            report.lhs, report.rhs = whipple_sides(p["a"], p["b"], p["c"], p["e"], p["f"], int(p["N"]))
        elif which == "watson":
            mono = {k: v if isinstance(v, QMonomial) else QMonomial.parse(str(v)) for k, v in params.items() if k != "N"}
            report.lhs, report.rhs = watson_sides(
                mono["a"], mono["b"], mono["c"], mono["d"], mono["e"], int(params["N"]), t0
            )
        else:
            raise ValueError(f"unknown identity {which!r}; choose from {', '.join(CLASSICAL)}")
    return report


# the BC_r transformation with finite upper limit m


def _index_sets(r: int, m: int):
    return itertools.combinations(range(m + 1), r)


def _bc_summand(ks, base: QMonomial, uppers, lowers) -> CycloProduct:
    """``q^{sum (2i-1)k_i} prod_{i<j} (1-q^{k_i-k_j})^2 (1-base q^{k_i+k_j})^2 prod_i ...``."""
    out = CycloProduct(1, 2 * sum((2 * i - 1) * k for i, k in enumerate(ks, start=1)))
    for i, j in itertools.combinations(range(len(ks)), 2):
        out = out * QMonomial.q(ks[i] - ks[j]).one_minus() ** 2
        out = out * base.shift(ks[i] + ks[j]).one_minus() ** 2
    for k in ks:
        num = base.shift(2 * k).one_minus() * qpochs(uppers, k)
        den = base.one_minus() * qpochs([Q] + list(lowers), k)
        out = out * _divide(num, den)
    return out


def bc_lambda(a, b, c, d, e, f, r: int) -> QMonomial:
    """``lambda = a^2 q^{2-r} / (b c d)``."""
    return (a * a).shift(2 - r) / (b * c * d)


def bc_lhs_terms(a, b, c, d, e, f, m: int, r: int):
    lam = bc_lambda(a, b, c, d, e, f, r)
    aq = a * Q
    uppers = [a, b, c, d, e, f, (lam * a).shift(2 - r + m) / (e * f), QMonomial.q(-m)]
    lowers = [aq / b, aq / c, aq / d, aq / e, aq / f, (e * f).shift(r - 1 - m) / lam, a.shift(1 + m)]
    return [(ks, _bc_summand(ks, a, uppers, lowers)) for ks in _index_sets(r, m)]


def bc_rhs_terms(a, b, c, d, e, f, m: int, r: int):
    lam = bc_lambda(a, b, c, d, e, f, r)
    aq = a * Q
    uppers = [lam, lam * b / a, lam * c / a, lam * d / a, e, f, (lam * a).shift(2 - r + m) / (e * f), QMonomial.q(-m)]
    lowers = [aq / b, aq / c, aq / d, (lam * Q) / e, (lam * Q) / f, (e * f).shift(r - 1 - m) / a, lam.shift(1 + m)]
    return [(ks, _bc_summand(ks, lam, uppers, lowers)) for ks in _index_sets(r, m)]


def bc_prefactor(a, b, c, d, e, f, m: int, r: int) -> CycloProduct:
    lam = bc_lambda(a, b, c, d, e, f, r)
    out = CycloProduct(1)
    for i in range(1, r + 1):
        num = qpochs([b, c, d, e * f / a], i - 1)
        den = qpochs([lam * b / a, lam * c / a, lam * d / a, e * f / lam], i - 1)
        out = out * _divide(num, den)
        num = qpoch(a * Q, m) * qpoch(a * Q / (e * f), m - r + 1) * qpochs([lam * Q / e, lam * Q / f], m - i + 1)
        den = qpoch(lam * Q, m) * qpoch(lam * Q / (e * f), m - r + 1) * qpochs([a * Q / e, a * Q / f], m - i + 1)
        out = out * _divide(num, den)
    return out


def _total(terms, t0):
    if t0 is None:
        return sum((v.to_rf() for _, v in terms), RationalFunction())
    return sum((v.evaluate(t0) for _, v in terms), Fraction(0))


def bc_sides(a, b, c, d, e, f, m: int, r: int, t0=None):
    """Both sides of the BC_r transformation, at ``t0`` or as rational functions."""
    if r < 1 or m < 0:
        raise ValueError("needs r >= 1 and m >= 0")
    lhs = _total(bc_lhs_terms(a, b, c, d, e, f, m, r), t0)
    pre = bc_prefactor(a, b, c, d, e, f, m, r)
    rhs_sum = _total(bc_rhs_terms(a, b, c, d, e, f, m, r), t0)
    if t0 is None:
        return lhs, pre.to_rf() * rhs_sum
    return lhs, pre.evaluate(t0) * rhs_sum


def bc_transform_check(a, b, c, d, e, f, m: int, r: int, t0=None) -> CheckReport:
    params = {"a": a, "b": b, "c": c, "d": d, "e": e, "f": f, "m": m, "r": r}
    if t0 is not None:
        params["t0"] = Fraction(t0)
    with checking("bc-transformation", params, (ArithmeticError, ValueError)) as report:
        report.lhs, report.rhs = bc_sides(a, b, c, d, e, f, m, r, t0)
    return report


# truncated infinite products


@dataclass(frozen=True)
class TruncatedProduct:
    """Float approximation of an infinite product with an absolute error bound."""

    value: float
    bound: float

    @property
    def relative_bound(self) -> float:
        if not self.value:
            return 0.0 if not self.bound else math.inf
        return self.bound / abs(self.value)


_ROUNDING = 2.0**-50


def qpochhammer_inf_trunc(sign: int, exponent_m: int, t0, N: int, beta: int = 2) -> TruncatedProduct:
    """``prod_{j<N} (1 - sign * t0**(m + beta*j))`` bounding the dropped tail.

    The truncated product is formed exactly and rounded once.  For the tail,
    ``|log prod_{j>=N} (1 - s u_j)| <= u / ((1 - u)(1 - rho))`` with
    ``u = |t0|**(m + beta*N)`` and ``rho = |t0|**beta`` once ``u < 1``.
    """
    t0 = Fraction(t0)
    if abs(t0) >= 1:
        raise ValueError("needs |t0| < 1")
    if beta <= 0:
        raise ValueError("beta must be positive")
    if N < 0 or exponent_m + beta * N <= 0:
        raise ValueError("truncation order too small to bound the tail")
    head = Fraction(1)
    for j in range(N):
        head *= 1 - sign * t0 ** (exponent_m + beta * j)
    if not head:
        return TruncatedProduct(0.0, 0.0)
    value = float(head)
    u = float(abs(t0)) ** (exponent_m + beta * N)
    rho = float(abs(t0)) ** beta
    tail_log = u / ((1 - u) * (1 - rho))
    bound = abs(value) * (math.expm1(tail_log) + _ROUNDING)
    return TruncatedProduct(value, bound)


def infinite_ratio_numeric(numerators, denominators, t0, N: int = 200, power: int = 1) -> TruncatedProduct:
    """``(prod (x;q)_inf / prod (y;q)_inf)**power`` numerically, with a bound."""
    value, rel = 1.0, 1.0
    for x in numerators:
        p = qpochhammer_inf_trunc(x.sign, x.exponent, t0, N)
        if not p.value:
            # an exact zero here is a 0 * infinity limit in the parameters
            raise DegenerateParameters(f"({x};q)_inf vanishes at this point")
        value *= p.value
        rel *= 1 + p.relative_bound
    for y in denominators:
        p = qpochhammer_inf_trunc(y.sign, y.exponent, t0, N)
        if p.value == 0 or p.relative_bound >= 1:
            raise DegenerateParameters("an infinite product in a denominator vanishes")
        value /= p.value
        rel *= 1 + p.relative_bound / (1 - p.relative_bound)
    value **= power
    rel = rel**power - 1 + _ROUNDING
    return TruncatedProduct(value, abs(value) * rel)


@dataclass
class NumericReport:
    name: str
    params: dict
    lhs: float
    rhs: float
    residual: float
    bound: float
    passed: bool
    error: str | None = None

    @property
    def equal(self) -> bool:
        return self.passed

    def to_record(self) -> dict:
        return {
            "id": self.name,
            "params": {k: str(v) for k, v in self.params.items()},
            "equal": self.passed,
            "lhs": repr(self.lhs),
            "rhs": repr(self.rhs),
            "residual": self.residual,
            "bound": self.bound,
            "error": self.error,
        }


# relative slack for rounding the exact parts to floats and multiplying
_FLOAT_SLACK = 1e-14


def _numeric_report(name, params, compute) -> NumericReport:
    """Run ``compute() -> (lhs, finite_part, infinite_part)`` and compare."""
    try:
        lhs, finite, inf = compute()
    except (ArithmeticError, ValueError) as exc:
        nan = math.nan
        return NumericReport(name, params, nan, nan, nan, nan, False, f"{type(exc).__name__}: {exc}")
    lhs = float(lhs)
    scale = float(finite)
    rhs = scale * inf.value
    bound = abs(scale) * inf.bound + _FLOAT_SLACK * max(abs(lhs), abs(rhs))
    residual = abs(lhs - rhs)
    return NumericReport(name, params, lhs, rhs, residual, bound, residual <= bound)


def _terminating_depth(*params: QMonomial) -> int:
    depths = [-p.exponent // 2 for p in params if p.sign == 1 and p.exponent <= 0 and p.exponent % 2 == 0]
    if not depths:
        raise NonTerminating("one of d, e, f must be q to a non-positive integer power")
    return min(depths)


def _limit_lhs(a, d, e, f, r, weight, extra=None):
    """Finite left side of the m -> infinity forms; terms vanish past the terminating depth."""
    depth = _terminating_depth(d, e, f)
    aq = a * Q
    terms = []
    for ks in itertools.combinations(range(depth + 1), r):
        term = _bc_summand(ks, a, [a, d, e, f], [aq / d, aq / e, aq / f])
        for k in ks:
            term = term * (weight**k).cyclo()
            if extra is not None:
                term = term * extra(k)
        terms.append(term)
    return terms


def bc_limit_first_check(a, d, e, f, r: int, t0, N: int = 200) -> NumericReport:
    """The ``b = aq/c`` limit: terminating left side against truncated products."""
    t0 = Fraction(t0)
    params = {"a": a, "d": d, "e": e, "f": f, "r": r, "t0": t0}
    return _numeric_report("bc-limit-1", params, lambda: _bc_limit_first_parts(a, d, e, f, r, t0, N))


def _bc_limit_first_parts(a, d, e, f, r, t0, N):
    weight = a / ((d * e * f).shift(2 * r - 2))
    lhs = sum((t.evaluate(t0) for t in _limit_lhs(a, d, e, f, r, weight)), Fraction(0))
    finite = CycloProduct(1, -2 * math.comb(r, 3)) * ((a / (e * f)) ** math.comb(r, 2)).cyclo()
    for i in range(1, r + 1):
        num = qpochs([Q, d, e, f, e * f / a, a.shift(i - r) / d], i - 1) * qpoch(a.shift(2 - r) / d, 2 * i - 2)
        den = qpochs([a * Q / d, a.shift(2 - r) / (d * e), a.shift(2 - r) / (d * f), (d * e * f).shift(r - 1) / a], i - 1)
        finite = finite * _divide(num, den)
    inf = infinite_ratio_numeric(
        [a * Q, a * Q / (e * f), a.shift(2 - r) / (d * e), a.shift(2 - r) / (d * f)],
        [a.shift(2 - r) / d, a.shift(2 - r) / (d * e * f), a * Q / e, a * Q / f],
        t0, N, power=r,
    )
    return lhs, finite.evaluate(t0), inf


def bc_limit_second_check(a, c, d, e, f, r: int, t0, N: int = 200) -> NumericReport:
    """The ``b = aq^2/c`` limit, whose right side keeps a sum over ``s``."""
    t0 = Fraction(t0)
    params = {"a": a, "c": c, "d": d, "e": e, "f": f, "r": r, "t0": t0}
    return _numeric_report("bc-limit-2", params, lambda: _bc_limit_second_parts(a, c, d, e, f, r, t0, N))


def _bc_limit_second_parts(a, c, d, e, f, r, t0, N):
    weight = a / ((d * e * f).shift(2 * r - 1))

    def extra(k):
        num = c.shift(k - 1).one_minus() * (a / c).shift(k + 1).one_minus()
        return _divide(num, (c / Q).one_minus() * (a * Q / c).one_minus())

    lhs = sum((t.evaluate(t0) for t in _limit_lhs(a, d, e, f, r, weight, extra)), Fraction(0))
    finite = CycloProduct((-1) ** r, 4 * math.comb(r + 1, 3))
    finite = finite * ((a / (e * f).shift(r - 1)) ** math.comb(r + 1, 2)).cyclo()
    num = qpoch(a.shift(2 - r) / (c * d), r) * qpoch(c.shift(-r) / d, r)
    den = (a * Q / c).one_minus() ** r * (c / Q).one_minus() ** r * qpoch(Q, r) * qpoch(a.shift(1 - r) / d, r) ** 2
    finite = finite * _divide(num, den)
    for i in range(1, r + 1):
        num = qpochs([Q, e, f, a.shift(i - r) / d], i) * qpochs([d, e * f / a], i - 1) * qpoch(a.shift(1 - r) / d, 2 * i)
        den = qpochs([a * Q / d, a.shift(1 - r) / (d * e), a.shift(1 - r) / (d * f)], i) * qpoch((d * e * f).shift(r) / a, i - 1)
        finite = finite * _divide(num, den)
    base = a.shift(-r) / d
    s_sum = Fraction(0)
    for s in range(r + 1):
        num = base.shift(2 * s).one_minus() * qpochs(
            [base, c / Q, a * Q / c, a.shift(1 - r) / (d * e), a.shift(1 - r) / (d * f), QMonomial.q(-r)], s
        )
        num = num * ((e * f).shift(r) / a).cyclo() ** s
        den = base.one_minus() * qpochs([Q, a.shift(2 - r) / (c * d), c.shift(-r) / d, e, f, a * Q / d], s)
        s_sum += _divide(num, den).evaluate(t0)
    inf = infinite_ratio_numeric(
        [a * Q, a * Q / (e * f), a.shift(1 - r) / (d * e), a.shift(1 - r) / (d * f)],
        [a.shift(1 - r) / d, a.shift(1 - r) / (d * e * f), a * Q / e, a * Q / f],
        t0, N, power=r,
    )
    return lhs, finite.evaluate(t0) * s_sum, inf
