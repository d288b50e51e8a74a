"""Brute-force evaluation of Vandermonde-weighted lattice sums.

The plain sum over ``k_1..k_r`` in ``{-n, ..., n}`` (half-integers when n
is) has summand

    |prod_{i<j} (k_i**alpha - k_j**alpha)|**(2*gamma)
        * prod_i |k_i|**delta * C(2n, n + k_i)

and the q-sums are described by catalog entries.  Enumeration is reduced to
one representative per symmetry orbit when the summand is known to be
invariant; ``reduce=False`` gives the naive sum used as an oracle.
"""

from __future__ import annotations

import math
from collections import Counter
from fractions import Fraction
from itertools import combinations_with_replacement, product

from .catalog import IdentityDescriptor, get_identity
from .catalog.expr import compile_expr, evaluate, evaluate_int
from .exact.cyclo import CycloProduct
from .exact.halfint import HalfInt, half_range
from .exact.laurent import LaurentPoly
from .exact.qfunc import q_binomial
from .exact.ratfunc import RationalFunction


def lattice(n) -> list[Fraction]:
    """The summation range ``-n, -n+1, ..., n``."""
    n = HalfInt(n)
    if n < 0:
        return []
    return [h.fraction() for h in half_range(-n, n)]


def orbits(values, r: int, perm: bool, signflip: bool):
    """Yield ``(representative, orbit size)`` covering ``values**r`` once.

    ``values`` must be closed under negation when ``signflip`` is set.
    """
    if signflip:
        base = sorted({abs(v) for v in values})
    else:
        base = list(values)
    if perm:
        tuples = combinations_with_replacement(base, r)
    else:
        tuples = product(base, repeat=r)
    fact_r = math.factorial(r)
    for tup in tuples:
        size = 1
        if perm:
            size = fact_r
            for c in Counter(tup).values():
                size //= math.factorial(c)
        if signflip:
            size <<= sum(1 for v in tup if v)
        yield tup, size


def _binom(two_n, top):
    top = Fraction(top)
    if top.denominator != 1:
        raise ValueError("binomial with non-integer entry")
    return math.comb(int(two_n), int(top)) if 0 <= top <= two_n else 0


def _lattice_parity(n, boxes):
    n = HalfInt(n)
    for b in boxes:
        if not (HalfInt(b) - n).is_integer():
            raise ValueError("all binomial parameters must lie on the lattice of n")


def discrete_mm_sum(alpha, gamma, delta, r: int, n, *, boxes=(), alternating=False,
                    reduce=True) -> Fraction:
    """The plain sum, optionally with extra binomials ``C(2m, m + k)``.

    ``alternating`` inserts ``(-1)**k_i`` (integer n only).
    """
    alpha = int(alpha)
    two_gamma = 2 * Fraction(gamma)
    if two_gamma.denominator != 1 or two_gamma < 0:
        raise ValueError("2*gamma must be a non-negative integer")
    two_gamma = int(two_gamma)
    delta = int(delta)
    r = int(r)
    if r < 1:
        raise ValueError("r must be positive")
    n = HalfInt(n)
    if n < 0:
        raise ValueError("n must be non-negative")
    if alternating and not n.is_integer():
        raise ValueError("the alternating sum needs integer n")
    _lattice_parity(n, boxes)
    values = lattice(n)
    two_n = n.twice

    single = {}
    for k in values:
        w = Fraction(abs(k)) ** delta * _binom(two_n, n + k)
        for b in boxes:
            b = HalfInt(b)
            w *= _binom(b.twice, b + k)
        if alternating and int(k) % 2:
            w = -w
        single[k] = w

    powered = {k: k**alpha for k in values}

    def pair(a, b):
        return abs(powered[a] - powered[b]) ** two_gamma

    perm = reduce
    signflip = reduce and alpha % 2 == 0
    return _plain_total(values, r, single, pair, perm, signflip)


def _plain_total(values, r, single, pair, perm, signflip):
    total = Fraction(0)
    for tup, size in orbits(values, r, perm, signflip):
        term = Fraction(size)
        for k in tup:
            term *= single[k]
            if not term:
                break
        if not term:
            continue
        for i in range(r):
            for j in range(i + 1, r):
                term *= pair(tup[i], tup[j])
                if not term:
                    break
            if not term:
                break
        total += term
    return total


def _rising(x, k: int):
    out = 1
    for j in range(k):
        out *= x + j
    return out


def pochhammer_mm_sum(gamma: int, r: int, n, *, reduce=True) -> Fraction:
    """Sum of ``prod_{i<j} |(k_i - k_j)_gamma (k_j - k_i)_gamma| prod C(2n, n + k_i)``."""
    gamma = int(gamma)
    if gamma < 0:
        raise ValueError("gamma must be a non-negative integer")
    n = HalfInt(n)
    values = lattice(n)
    single = {k: Fraction(_binom(n.twice, n + k)) for k in values}

    def pair(a, b):
        return abs(_rising(a - b, gamma) * _rising(b - a, gamma))

    return _plain_total(values, int(r), single, pair, reduce, False)


# q-sums described by catalog entries


class _QSummand:
    """Precomputed pieces of a catalog q-summand."""

    def __init__(self, desc: IdentityDescriptor, env: dict):
        spec = desc.lhs
        self.r = int(env["r"])
        self.env = env
        self.weight = compile_expr(str(spec["weight"]))
        self.pairs = [
            (compile_expr(str(p["arg"])), _beta_of(p), int(p.get("pow", 1)), bool(p.get("abs", False)))
            for p in spec.get("pair", ())
        ]
        self.singles = []
        for s in spec.get("single", ()):
            if "plus" in s:
                self.singles.append(("plus", compile_expr(str(s["plus"])), _beta_of(s), 1, False))
            else:
                self.singles.append(
                    ("bracket", compile_expr(str(s["arg"])), _beta_of(s), int(s.get("pow", 1)), bool(s.get("abs", False)))
                )
        self.boxes = [env[b] for b in spec.get("boxes", ("n",))]
        self.alternating = bool(spec.get("alternating", False))
        self.qnorm = evaluate(desc.qnorm, env) if desc.qnorm else Fraction(0)
        sym = spec.get("symmetry", ())
        self.perm = "perm" in sym
        self.signflip = "signflip" in sym
        self.values = lattice(env["n"])
        if self.alternating and Fraction(env["n"]).denominator != 1:
            raise ValueError("alternating q-sum needs integer n")
        _lattice_parity(env["n"], self.boxes)
        self._scope = None

    def _eval(self, code, **names):
        scope = self._base_scope()
        scope.update(names)
        value = eval(code, scope)
        if isinstance(value, float):
            raise ValueError("irrational value in a q-summand")
        return Fraction(value)

    def _base_scope(self):
        if self._scope is None:
            from .catalog.expr import FUNCTIONS

            scope = {"_F": Fraction, "__builtins__": {}}
            scope.update(FUNCTIONS)
            scope.update({k: Fraction(v) for k, v in self.env.items()})
            self._scope = scope
        return dict(self._scope)

    def t_exponent(self, tup) -> int:
        q_exp = self.qnorm
        for i, k in enumerate(tup, start=1):
            q_exp += self._eval(self.weight, k=k, i=i)
        te = 2 * q_exp
        if te.denominator != 1:
            raise ValueError(f"summand at {tup} has a non-integral power of t")
        return int(te)

    def bracket_args(self, tup):
        """List of (kind, t-exponent, sign, power); None when a bracket vanishes."""
        out = []
        sign = 1
        r = len(tup)
        for code, beta, power, use_abs in self.pairs:
            for a in range(r):
                for b in range(a + 1, r):
                    x = self._eval(code, ki=tup[a], kj=tup[b], i=a + 1, j=b + 1)
                    if x == 0:
                        return None, 0
                    if use_abs and x < 0 and power % 2:
                        sign = -sign
                    out.append(("bracket", _texp(x, beta), power))
        for kind, code, beta, power, use_abs in self.singles:
            for a, k in enumerate(tup):
                x = self._eval(code, k=k, i=a + 1)
                if kind == "plus":
                    out.append(("plus", _texp(x, beta), 1))
                    continue
                if x == 0:
                    return None, 0
                if use_abs and x < 0 and power % 2:
                    sign = -sign
                out.append(("bracket", _texp(x, beta), power))
        if self.alternating:
            for k in tup:
                if int(k) % 2:
                    sign = -sign
        return out, sign

    def denominator(self) -> CycloProduct:
        r = self.r
        out = CycloProduct(1)
        pairs = r * (r - 1) // 2
        for _, beta, power, _ in self.pairs:
            out = out * CycloProduct.one_minus(beta) ** (power * pairs)
        for kind, _, beta, power, _ in self.singles:
            if kind == "plus":
                out = out * CycloProduct.one_minus(beta, -1) ** r
            else:
                out = out * CycloProduct.one_minus(beta) ** (power * r)
        return out


def _beta_of(rec) -> int:
    beta = 2 * Fraction(str(rec.get("base", 1)))
    if beta.denominator != 1:
        raise ValueError("bad base")
    return int(beta)


def _texp(x, beta) -> int:
    e = x * beta
    if e.denominator != 1:
        raise ValueError(f"q-bracket [{x}] in base t^{beta} has a non-integral t-exponent")
    return int(e)


def q_sum_lhs(identity_id: str, params: dict, points=None, *, reduce=True):
    """Left side of a catalog q-identity.

    With ``points=None`` the exact rational function in ``t = q**(1/2)`` is
    returned; otherwise a list of exact values at the given rational points
    (``t0 = 1`` gives the classical limit).
    """
    desc = get_identity(identity_id)
    if desc.kind != "q":
        raise ValueError(f"{identity_id} is not a q-identity")
    env = desc.coerce_params(params)
    summand = _QSummand(desc, env)
    if points is None:
        return _q_symbolic(summand, reduce)
    return [_q_point(summand, Fraction(t0), reduce) for t0 in points]


def _box_polys(summand):
    polys = {}
    for k in summand.values:
        p = LaurentPoly.constant(1)
        for b in summand.boxes:
            b = HalfInt(b)
            p = p * q_binomial(b.twice, b + k, 2)
        polys[k] = p
    return polys


def _q_symbolic(summand: _QSummand, reduce: bool) -> RationalFunction:
    boxes = _box_polys(summand)
    perm = reduce and summand.perm
    signflip = reduce and summand.signflip
    total = LaurentPoly()
    for tup, size in orbits(summand.values, summand.r, perm, signflip):
        factors, sign = summand.bracket_args(tup)
        if factors is None:
            continue
        term = LaurentPoly.monomial(summand.t_exponent(tup), sign * size)
        for k in tup:
            term = term * boxes[k]
            if not term:
                break
        if not term:
            continue
        for kind, e, power in factors:
            base = LaurentPoly.binomial(e, 1 if kind == "bracket" else -1)
            for _ in range(power):
                term = term * base
        total = total + term
    return RationalFunction(total, summand.denominator().to_rf().num)


def _q_point(summand: _QSummand, t0: Fraction, reduce: bool) -> Fraction:
    perm = reduce and summand.perm
    signflip = reduce and summand.signflip
    classical = t0 == 1
    box_values = {}
    for k in summand.values:
        v = Fraction(1)
        for b in summand.boxes:
            b = HalfInt(b)
            if classical:
                v *= _binom(b.twice, b + k)
            else:
                v *= q_binomial(b.twice, b + k, 2).evaluate(t0)
        box_values[k] = v
    den = Fraction(1)
    if not classical:
        den = summand.denominator().evaluate(t0)
    total = Fraction(0)
    for tup, size in orbits(summand.values, summand.r, perm, signflip):
        factors, sign = summand.bracket_args(tup)
        if factors is None:
            continue
        term = Fraction(sign * size)
        for k in tup:
            term *= box_values[k]
        if not term:
            continue
        if classical:
            term *= _classical_factors(summand, tup)
        else:
            term *= t0 ** summand.t_exponent(tup)
            for kind, e, power in factors:
                term *= (1 - t0**e if kind == "bracket" else 1 + t0**e) ** power
        total += term
    return total / den


def _classical_factors(summand, tup) -> Fraction:
    """Bracket factors at q = 1, signs excluded: [x]_Q -> x, (1+Q^x)/(1+Q) -> 1."""
    out = Fraction(1)
    r = len(tup)
    for code, _, power, _ in summand.pairs:
        for a in range(r):
            for b in range(a + 1, r):
                out *= summand._eval(code, ki=tup[a], kj=tup[b], i=a + 1, j=b + 1) ** power
    for kind, code, _, power, _ in summand.singles:
        if kind == "plus":
            continue
        for a, k in enumerate(tup):
            out *= summand._eval(code, k=k, i=a + 1) ** power
    return out


def plain_lhs(identity_id: str, params: dict, *, reduce=True) -> Fraction:
    """Left side of a classical catalog identity."""
    desc = get_identity(identity_id)
    if desc.kind != "plain":
        raise ValueError(f"{identity_id} is not a classical identity")
    env = desc.coerce_params(params)
    spec = desc.lhs
    if "pochhammer" in spec:
        return pochhammer_mm_sum(evaluate_int(spec["pochhammer"], env), int(env["r"]), env["n"], reduce=reduce)
    alpha = evaluate(spec["alpha"], env)
    gamma = evaluate(spec["gamma"], env)
    delta = evaluate(spec["delta"], env)
    boxes = [env[b] for b in spec.get("boxes", ())]
    return discrete_mm_sum(
        alpha, gamma, delta, int(env["r"]), env["n"], boxes=boxes,
        alternating=bool(spec.get("alternating", False)), reduce=reduce,
    )
