"""q-brackets, q-shifted factorials and Gaussian binomials.

Everything is written in ``t = q**(1/2)``; a base ``Q = t**beta`` with
``beta`` in {1, 2, 4} stands for ``q**(1/2)``, ``q`` and ``q**2``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .cyclo import CycloProduct
from .halfint import HalfInt
from .laurent import LaurentPoly
from .ratfunc import RationalFunction

BASES = (1, 2, 4)


def t_exponent(value, beta: int) -> int:
    e = Fraction(value) * beta
    if e.denominator != 1:
        raise ValueError(f"t-exponent {e} is not an integer")
    return int(e)


def q_bracket(k, beta: int = 2) -> RationalFunction:
    """``[k]_Q = (1 - Q**k)/(1 - Q)`` with ``Q = t**beta``."""
    return CycloProduct.bracket(k, beta).to_rf()


def q_abs_bracket(k, beta: int = 2) -> RationalFunction:
    """``sign(k) * [k]_Q``, which equals ``t**(-beta*|k|) [|k|]_Q`` for k < 0."""
    k = Fraction(k)
    if k >= 0:
        return q_bracket(k, beta)
    return -q_bracket(k, beta)


def q_shifted_factorial(sign: int, m: int, beta: int, n: int) -> LaurentPoly:
    """``prod_{j<n} (1 - sign * t**(m + beta*j))`` for n >= 0."""
    n = int(n)
    if n < 0:
        raise ValueError("negative length; use q_shifted_ratio")
    return _qsf(sign, int(m), beta, n)


@lru_cache(maxsize=4096)
def _qsf(sign, m, beta, n):
    dense = [1]
    low = 0
    for j in range(n):
        e = m + beta * j
        dense, low = _mul_one_minus(dense, low, e, sign)
    return LaurentPoly._raw(low, dense)


def q_shifted_ratio(sign: int, m: int, beta: int, n: int) -> CycloProduct:
    """``(sign*t**m; t**beta)_n`` for any integer n, as a cyclotomic product.

    Negative lengths use ``(a; Q)_{-n} = 1/(a Q**-n; Q)_n``.
    """
    n = int(n)
    out = CycloProduct(1)
    if n >= 0:
        for j in range(n):
            out = out * CycloProduct.one_minus(m + beta * j, sign)
        return out
    for j in range(-n):
        out = out * CycloProduct.one_minus(m - beta * (-n) + beta * j, sign)
    return out.inverse()


def q_binomial(n, m, beta: int = 2) -> LaurentPoly:
    """Gaussian binomial ``[n, m]_Q``; zero outside 0 <= m <= n."""
    n, m = HalfInt(n), HalfInt(m)
    if not (n.is_integer() and m.is_integer()):
        raise ValueError("q-binomial needs integer arguments")
    n, m = int(n), int(m)
    if m < 0 or m > n:
        return LaurentPoly()
    return _q_binomial(n, min(m, n - m), beta)


@lru_cache(maxsize=4096)
def _q_binomial(n, m, beta):
    dense, low = [1], 0
    for j in range(1, m + 1):
        dense, low = _mul_one_minus(dense, low, beta * (n - m + j), 1)
    for j in range(1, m + 1):
        dense = _div_one_minus(dense, beta * j)
    return LaurentPoly._raw(low, dense)


def _mul_one_minus(dense, low, e, sign):
    """Multiply by ``1 - sign*t**e``."""
    if e >= 0:
        out = dense + [0] * e
        for i, c in enumerate(dense):
            if c:
                out[i + e] -= sign * c
        return out, low
    out = [0] * (-e) + dense
    for i, c in enumerate(dense):
        if c:
            out[i] -= sign * c
    return out, low + e


def _div_one_minus(dense, e):
    """Exact division by ``1 - t**e`` (e > 0)."""
    n = len(dense) - e
    quo = [0] * n
    for i in range(n):
        quo[i] = dense[i] + (quo[i - e] if i >= e else 0)
    return quo
