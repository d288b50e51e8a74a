"""Interpreter for closed-form product programs.

A program is a list of factor records (plain dicts, as loaded from the
catalog file).  Supported records, each with an optional integer ``pow``:

``const``   rational constant
``qpow``    ``q**expr`` (expr in (1/2)Z)
``gamma``   ``Gamma_Q(expr)``, base ``Q = q**base``
``qfact``   ``[expr]_Q! = Gamma_Q(expr + 1)``
``bracket`` ``[expr]_Q``
``qpoch``   ``(sign q**a; Q)_len`` given as ``[sign, a, len]``
``qbinom``  Gaussian binomial ``[N, K]_Q``
``binom``   ordinary binomial coefficient
``prod``    product of ``of`` over ``var`` from ``lo`` to ``hi``
``sum``     sum of products ``of`` over ``var`` from ``lo`` to ``hi``

All gamma factors in one product scope (nested ``prod`` included) are
reduced together, so individually transcendental values may cancel.
"""

from __future__ import annotations

import math
from fractions import Fraction

from ..exact.cyclo import CycloProduct
from ..exact.gamma import (
    GammaFactor,
    PoleError,
    SqrtPiNumber,
    gamma_halfint,
    gamma_ratio_cyclo,
)
from ..exact.qfunc import q_shifted_ratio
from ..exact.ratfunc import RationalFunction
from .expr import evaluate, evaluate_int


def _beta(record, env) -> int:
    base = evaluate(record.get("base", 1), env)
    beta = 2 * base
    if beta.denominator != 1 or beta not in (1, 2, 4):
        raise ValueError(f"unsupported base q^{base}")
    return int(beta)


class QBackend:
    """Exact rational functions of t = q^(1/2)."""

    def one(self):
        return CycloProduct(1)

    def const(self, c):
        return CycloProduct(c)

    def qpow(self, e):
        te = 2 * Fraction(e)
        if te.denominator != 1:
            raise ValueError(f"q^{e} is not an integral power of t")
        return CycloProduct(1, int(te))

    def bracket(self, x, beta):
        return CycloProduct.bracket(x, beta)

    def qpoch(self, sign, texp, beta, length):
        return q_shifted_ratio(sign, texp, beta, length)

    def qbinom(self, n, k, beta):
        n, k = Fraction(n), Fraction(k)
        if n.denominator != 1 or k.denominator != 1:
            raise ValueError("q-binomial needs integers")
        if k < 0 or k > n:
            return CycloProduct(0)
        out = CycloProduct(1)
        for j in range(1, int(k) + 1):
            out = out * CycloProduct.one_minus(beta * int(n - k + j)) / CycloProduct.one_minus(beta * j)
        return out

    def gammas(self, factors):
        return gamma_ratio_cyclo(factors)

    def mul(self, a, b):
        if isinstance(a, CycloProduct) and isinstance(b, CycloProduct):
            return a * b
        return _rf(a) * _rf(b)

    def power(self, a, k):
        return a**k

    def add(self, a, b):
        return _rf(a) + _rf(b)

    def zero(self):
        return RationalFunction()

    def finish(self, a) -> RationalFunction:
        return _rf(a)


def _rf(a):
    return a.to_rf() if isinstance(a, CycloProduct) else a


class PlainBackend:
    """Classical values: rationals times powers of sqrt(pi) and sqrt(2)."""

    def one(self):
        return SqrtPiNumber(1)

    def const(self, c):
        return SqrtPiNumber(c)

    def qpow(self, e):
        return SqrtPiNumber(1)

    def bracket(self, x, beta):
        return SqrtPiNumber(x)

    def qpoch(self, sign, texp, beta, length):
        if length < 0:
            raise ValueError("negative length at q = 1")
        return SqrtPiNumber(Fraction(1 - sign) ** length)

    def qbinom(self, n, k, beta):
        from .expr import _binom

        return SqrtPiNumber(_binom(n, k))

    def gammas(self, factors):
        return classical_gamma_product(factors)

    def mul(self, a, b):
        return a * b

    def power(self, a, k):
        return a**k

    def add(self, a, b):
        if not a.coeff:
            return b
        if not b.coeff:
            return a
        if (a.pi_half_power, a.two_half_power) != (b.pi_half_power, b.two_half_power):
            raise ArithmeticError("cannot add numbers with different transcendental parts")
        return SqrtPiNumber(a.coeff + b.coeff, a.pi_half_power, a.two_half_power)

    def zero(self):
        return SqrtPiNumber(0)

    def finish(self, a) -> SqrtPiNumber:
        return a


def classical_gamma_product(factors) -> SqrtPiNumber:
    """Product of classical Gamma values, ratios at integer distance paired first.

    Pairing lets ``Gamma(0)/Gamma(0)`` style boundary factors cancel the way
    their q-analogues do; the unpaired remainder is evaluated directly.
    """
    groups: dict[Fraction, tuple[list, list]] = {}
    for f in factors:
        arg = Fraction(f.arg)
        nums, dens = groups.setdefault(arg - math.floor(arg), ([], []))
        (nums if f.power > 0 else dens).extend([arg] * abs(f.power))
    out = SqrtPiNumber(1)
    for _, (nums, dens) in sorted(groups.items()):
        nums, dens = sorted(nums), sorted(dens)
        paired = min(len(nums), len(dens))
        for a, c in zip(nums, dens):
            lo, hi = min(a, c), max(a, c)
            prod = Fraction(1)
            for j in range(int(hi - lo)):
                prod *= lo + j
            if not prod:
                if a > c:
                    return SqrtPiNumber(0)
                raise PoleError("pole of the gamma ratio")
            out = out * SqrtPiNumber(prod if a >= c else 1 / prod)
        for a in nums[paired:]:
            out = out * classical_gamma(a)
        for c in dens[paired:]:
            try:
                out = out / classical_gamma(c)
            except PoleError:
                return SqrtPiNumber(0)
    return out


def classical_gamma(x) -> SqrtPiNumber:
    """Gamma on (1/2)Z, extended to negative half-integers by recursion."""
    x = Fraction(x)
    if x > 0:
        return gamma_halfint(x)
    if x.denominator == 1:
        raise PoleError(f"Gamma has a pole at {x}")
    # Gamma(x) = Gamma(x + k) / (x (x+1) ... (x+k-1))
    k = int(-x) + 1
    prod = Fraction(1)
    for j in range(k):
        prod *= x + j
    return gamma_halfint(x + k) / prod


def run(program, env: dict, backend, extra_qpow=0):
    """Evaluate a product program in ``env`` with the given backend.

    Top-level ``qpow`` records are added to ``extra_qpow`` before the power
    is formed, so only their total has to be an integral power of t.
    """
    env = dict(env)
    q_exponent = Fraction(extra_qpow)
    rest = []
    for rec in program:
        if "qpow" in rec and "pow" not in rec:
            q_exponent += evaluate(rec["qpow"], env)
        else:
            rest.append(rec)
    value = _product(rest, env, backend)
    if q_exponent:
        value = backend.mul(value, backend.qpow(q_exponent))
    return backend.finish(value)


def _product(records, env, backend):
    gammas: list[GammaFactor] = []
    acc = backend.one()
    for rec in records:
        acc = backend.mul(acc, _factor(rec, env, backend, gammas, 1))
    if gammas:
        acc = backend.mul(acc, backend.gammas(gammas))
    return acc


def _factor(rec, env, backend, gammas, outer_power):
    power = outer_power * (evaluate_int(rec["pow"], env) if "pow" in rec else 1)
    if "gamma" in rec or "qfact" in rec:
        arg = evaluate(rec["gamma"], env) if "gamma" in rec else evaluate(rec["qfact"], env) + 1
        if power:
            gammas.append(GammaFactor(_beta(rec, env), arg, power))
        return backend.one()
    if "prod" in rec:
        spec = rec["prod"]
        lo, hi = evaluate_int(spec["lo"], env), evaluate_int(spec["hi"], env)
        acc = backend.one()
        for v in range(lo, hi + 1):
            inner = dict(env)
            inner[spec["var"]] = v
            for child in rec["of"]:
                acc = backend.mul(acc, _factor(child, inner, backend, gammas, power))
        return acc
    if "sum" in rec:
        spec = rec["sum"]
        lo, hi = evaluate_int(spec["lo"], env), evaluate_int(spec["hi"], env)
        total = backend.zero()
        for v in range(lo, hi + 1):
            inner = dict(env)
            inner[spec["var"]] = v
            total = backend.add(total, _product(rec["of"], inner, backend))
        return backend.power(total, power)
    if "const" in rec:
        value = backend.const(evaluate(rec["const"], env))
    elif "qpow" in rec:
        return backend.qpow(evaluate(rec["qpow"], env) * power)
    elif "bracket" in rec:
        value = backend.bracket(evaluate(rec["bracket"], env), _beta(rec, env))
    elif "qpoch" in rec:
        sign, a, length = rec["qpoch"]
        texp = 2 * evaluate(a, env)
        if texp.denominator != 1:
            raise ValueError(f"q-shifted factorial argument q^{a} is not a power of t")
        value = backend.qpoch(int(sign), int(texp), _beta(rec, env), evaluate_int(length, env))
    elif "qbinom" in rec:
        n, k = rec["qbinom"]
        value = backend.qbinom(evaluate(n, env), evaluate(k, env), _beta(rec, env))
    elif "binom" in rec:
        from .expr import _binom

        n, k = rec["binom"]
        value = backend.const(_binom(evaluate(n, env), evaluate(k, env)))
    else:
        raise ValueError(f"unknown factor record {rec!r}")
    return backend.power(value, power)
