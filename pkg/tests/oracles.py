"""Independent reference computations for the tests.

Nothing here imports the summation or character code under test: sums are
enumerated over the full cube, q-summands are evaluated in floating point
straight from their displayed form, and characters come from Weyl-type
determinants written out with plain lists.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

import mpmath

# values frozen from full enumeration, computed once by naive_mm_sum below
# and by hand where the sum has at most a handful of terms
FROZEN_PLAIN = {
    # (alpha, gamma, delta, r, n): value
    (2, Fraction(1, 2), 0, 2, 2): 288,
    (2, 1, 0, 2, 2): 768,
    (1, 1, 1, 2, 2): 576,
    (1, Fraction(1, 2), 0, 2, 1): 12,
    (2, Fraction(1, 2), 0, 3, 2): 6912,
    (2, Fraction(1, 2), 1, 2, 2): 192,
}


def lattice(n) -> list[Fraction]:
    n = Fraction(n)
    return [-n + j for j in range(int(2 * n) + 1)]


def binom(top, bottom) -> int:
    return math.comb(int(top), int(bottom)) if 0 <= bottom <= top else 0


def naive_mm_sum(alpha, gamma, delta, r, n, *, alternating=False, extra_boxes=()) -> Fraction:
    """Full enumeration over ``[-n, n]^r`` with no symmetry reduction."""
    n = Fraction(n)
    power = 2 * Fraction(gamma)
    assert power.denominator == 1
    power = int(power)
    total = Fraction(0)
    for ks in itertools.product(lattice(n), repeat=r):
        term = Fraction(1)
        for i, j in itertools.combinations(range(r), 2):
            term *= abs(ks[i] ** alpha - ks[j] ** alpha) ** power
        for k in ks:
            term *= abs(k) ** delta * math.comb(int(2 * n), int(n + k))
            for m in extra_boxes:
                m = Fraction(m)
                term *= binom(2 * m, m + k)
            if alternating:
                assert k.denominator == 1
                term *= (-1) ** int(k)
        total += term
    return total


def naive_pochhammer_sum(gamma: int, r: int, n: int) -> int:
    def rising(x, k):
        out = 1
        for j in range(k):
            out *= x + j
        return out

    total = 0
    for ks in itertools.product(range(-n, n + 1), repeat=r):
        term = 1
        for i, j in itertools.combinations(range(r), 2):
            term *= abs(rising(ks[i] - ks[j], gamma) * rising(ks[j] - ks[i], gamma))
        for k in ks:
            term *= math.comb(2 * n, n + k)
        total += term
    return total


# floating-point q-series straight from the displayed formulas


def mp(x):
    """Exact rationals into mpmath without a detour through float."""
    x = Fraction(x)
    return mpmath.mpf(x.numerator) / x.denominator


def qbracket(x, q):
    return (1 - q ** mp(x)) / (1 - q)


def qpoch(a, q, length):
    """``(a; q)_length`` for any real length, via the ratio of infinite products."""
    if length == int(length) and length >= 0:
        return mpmath.qp(a, q, int(length))
    return mpmath.qp(a, q) / mpmath.qp(a * q ** mpmath.mpf(length), q)


def qbinomial(top, bottom, q):
    if bottom < 0 or bottom > top:
        return mpmath.mpf(0)
    return mpmath.qp(q, q, top) / (mpmath.qp(q, q, bottom) * mpmath.qp(q, q, top - bottom))


def type_a_q_lhs(r, n, q):
    """``sum prod |[k_i-k_j]| prod q^((k_i+n-r+i)^2/2) [2n, n+k_i]``."""
    total = mpmath.mpf(0)
    for ks in itertools.product(lattice(n), repeat=r):
        term = mpmath.mpf(1)
        for i, j in itertools.combinations(range(r), 2):
            term *= abs(qbracket(ks[i] - ks[j], q))
        for i, k in enumerate(ks, start=1):
            e = k + n - r + i
            term *= q ** mp(e * e / 2) * qbinomial(int(2 * n), int(n + k), q)
        total += term
    return total


def type_a_q_rhs(r, n, q):
    """Product side with q-gamma functions, as displayed."""
    g = mpmath.qgamma
    root = mpmath.sqrt(q)
    n = mp(n)
    out = mpmath.factorial(r) / mpmath.qp(root, root, r) * (1 - root) ** r
    for i in range(1, r + 1):
        out *= mpmath.qp(-root, root, i) * qpoch(-q ** (mpmath.mpf(i) / 2 + 1), q, int(2 * n - r))
        out *= g(1 + mpmath.mpf(i) / 2, q) / g(mpmath.mpf(3) / 2, q)
        out *= g(2 * n + 1, q) * g(2 * n - i + mpmath.mpf(5) / 2, q)
        out /= g(2 * n - i + 2, q) * g(2 * n - mpmath.mpf(i) / 2 + 2, q)
    return out


def type_d_half_q_lhs(r, n, q):
    """Half-integer type D summand with ``q^binom(k_i - r + i + 1/2, 2)``."""
    total = mpmath.mpf(0)
    for ks in itertools.product(lattice(n), repeat=r):
        term = mpmath.mpf(1)
        for i, j in itertools.combinations(range(r), 2):
            term *= abs(qbracket(ks[i] - ks[j], q) * qbracket(ks[i] + ks[j], q))
        for i, k in enumerate(ks, start=1):
            x = k - r + i + Fraction(1, 2)
            term *= q ** mp(x * (x - 1) / 2) * qbinomial(int(2 * n), int(n + k), q)
        total += term
    return total


def type_d_half_q_rhs(r, n, q):
    """The displayed gamma form, mixing bases q and q^2 and a power [2]_q^n."""
    g = mpmath.qgamma
    half = mpmath.mpf(1) / 2
    root = mpmath.sqrt(q)
    n = mp(n)
    r_fact_q = mpmath.qp(q, q, r) / (1 - q) ** r
    out = 2**r * (1 + q) ** n * mpmath.factorial(r) / r_fact_q / qpoch(-q, q, n - r)
    for i in range(1, r + 1):
        out *= qpoch(-q, root, int(2 * n - 2 * i))
    out *= g(1 + half * r, q * q) / g(3 * half, q)
    for i in range(1, r):
        out *= g(i + 1, q) / g(3 * half, q)
    out *= g(n - half * r + 1, q * q) / g(n + half, q)
    for i in range(1, r):
        out *= g(2 * n + 1, q) * g(n - i + 1, q) / (g(2 * n - i + 1, q) * g(n - i + half, q))
    return out


# characters from determinants, written independently of the package


def det(m):
    m = [row[:] for row in m]
    size = len(m)
    out = Fraction(1)
    for c in range(size):
        p = next((r for r in range(c, size) if m[r][c]), None)
        if p is None:
            return Fraction(0)
        if p != c:
            m[c], m[p] = m[p], m[c]
            out = -out
        out *= m[c][c]
        for r in range(c + 1, size):
            f = m[r][c] / m[c][c]
            for k in range(c, size):
                m[r][k] -= f * m[c][k]
    return out


def weyl_character(kind, lam, x):
    """Schur and symplectic characters at ``x`` from the Weyl formula, integer parts only."""
    n = len(x)
    lam = list(lam) + [0] * (n - len(lam))
    if kind == "schur":
        num = [[xi ** (lam[j] + n - 1 - j) for j in range(n)] for xi in x]
        den = [[xi ** (n - 1 - j) for j in range(n)] for xi in x]
        return det(num) / det(den)
    if kind == "sp":
        num = [[xi ** (lam[j] + n - j) - xi ** -(lam[j] + n - j) for j in range(n)] for xi in x]
        den = [[xi ** (n - j) - xi ** -(n - j) for j in range(n)] for xi in x]
        return det(num) / det(den)
    raise ValueError(kind)
