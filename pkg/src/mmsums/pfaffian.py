"""Exact Pfaffians and the minor summation / Okada Pfaffian identities."""

from __future__ import annotations

import itertools
from fractions import Fraction

from .linalg import det, matmul, transpose
from .report import CheckReport, checking


class DegenerateInput(ArithmeticError):
    """A denominator in the identity vanishes at the given point."""


def check_skew(matrix) -> list[list]:
    m = [[Fraction(v) if isinstance(v, int) else v for v in row] for row in matrix]
    size = len(m)
    if any(len(row) != size for row in m):
        raise ValueError("Pfaffian of a non-square matrix")
    for i in range(size):
        if m[i][i]:
            raise ValueError("skew-symmetric matrix needs a zero diagonal")
        for j in range(i + 1, size):
            if m[i][j] != -m[j][i]:
                raise ValueError(f"entries ({i},{j}) and ({j},{i}) are not negatives")
    return m


def perfect_matchings(vertices):
    """Perfect matchings of an even list of vertices as sorted edge lists."""
    if not vertices:
        yield []
        return
    first, rest = vertices[0], vertices[1:]
    for k, partner in enumerate(rest):
        for tail in perfect_matchings(rest[:k] + rest[k + 1:]):
            yield [(first, partner)] + tail


def crossings(matching) -> int:
    """Number of edge pairs ``(i, j)``, ``(k, l)`` with ``i < k < j < l``."""
    return sum(1 for (i, j), (k, l) in itertools.permutations(matching, 2) if i < k < j < l)


def _pf_matchings(m):
    size = len(m)
    if size > 8:
        raise ValueError("the matching sum is limited to size <= 8")
    total = Fraction(0)
    for matching in perfect_matchings(list(range(size))):
        term = Fraction(-1) ** crossings(matching)
        for i, j in matching:
            term = term * m[i][j]
        total = total + term
    return total


def _pf_elimination(m):
    """Skew Gaussian elimination: peel off 2x2 blocks via Schur complements."""
    a = [row[:] for row in m]
    size = len(a)
    out = Fraction(1)
    for k in range(0, size, 2):
        pivot_col = next((j for j in range(k + 1, size) if a[k][j]), None)
        if pivot_col is None:
            return a[k][k] * 0
        if pivot_col != k + 1:
            # swapping index k+1 with pivot_col in rows and columns flips the sign
            a[k + 1], a[pivot_col] = a[pivot_col], a[k + 1]
            for row in a:
                row[k + 1], row[pivot_col] = row[pivot_col], row[k + 1]
            out = -out
        piv = a[k][k + 1]
        out = out * piv
        for i in range(k + 2, size):
            for j in range(i + 1, size):
                update = (a[k + 1][i] * a[k][j] - a[k][i] * a[k + 1][j]) / piv
                a[i][j] = a[i][j] + update
                a[j][i] = -a[i][j]
    return out


def pfaffian(matrix, method: str = "elimination"):
    """Pfaffian of a skew-symmetric matrix over any exact field."""
    m = check_skew(matrix)
    if len(m) % 2:
        raise ValueError("Pfaffian of an odd-sized matrix")
    if method == "matchings":
        return _pf_matchings(m)
    if method == "elimination":
        return _pf_elimination(m)
    raise ValueError(f"unknown method {method!r}")


def upper_ones(r: int) -> list[list[Fraction]]:
    """The r x r skew matrix with 1 above the diagonal."""
    return [[Fraction((j > i) - (j < i)) for j in range(r)] for i in range(r)]


def minor_sum(matrix) -> Fraction:
    """Sum of the maximal minors over all ordered column subsets."""
    n, r = len(matrix), len(matrix[0])
    return sum(
        (det([[row[j] for j in cols] for row in matrix]) for cols in itertools.combinations(range(r), n)),
        Fraction(0),
    )


def minor_summation_check(matrix) -> CheckReport:
    m = [[Fraction(v) for v in row] for row in matrix]
    n, r = len(m), len(m[0])
    with checking("minor-summation", {"n": n, "r": r}) as report:
        if n % 2:
            raise ValueError("the row count must be even")
        if n > r:
            raise ValueError("needs at most as many rows as columns")
        report.lhs = minor_sum(m)
        report.rhs = pfaffian(matmul(matmul(m, upper_ones(r)), transpose(m)))
    return report


def _small_q(alpha, beta, gamma, delta):
    return (alpha - beta) * (1 - gamma * delta) - (1 - alpha * beta) * (gamma - delta)


def okada_matrix(x, a, b):
    n = len(x)
    out = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            den = (x[i] - x[j]) * (1 - x[i] * x[j])
            if not den:
                raise DegenerateInput("x_i = x_j or x_i x_j = 1")
            v = _small_q(x[i], x[j], a[i], a[j]) * _small_q(x[i], x[j], b[i], b[j]) / den
            out[i][j], out[j][i] = v, -v
    return out


def w_matrix(x, a):
    n = len(x)
    return [[a[i] * x[i] ** (n - j) - x[i] ** (j - 1) for j in range(1, n + 1)] for i in range(n)]


def okada_pfaffian_sides(x, a, b):
    x, a, b = ([Fraction(v) for v in seq] for seq in (x, a, b))
    n = len(x)
    if n % 2 or len(a) != n or len(b) != n:
        raise ValueError("x, a, b need one common even length")
    lhs = pfaffian(okada_matrix(x, a, b))
    den = Fraction(1)
    for i in range(n):
        for j in range(i + 1, n):
            den *= (x[i] - x[j]) * (1 - x[i] * x[j])
    rhs = det(w_matrix(x, a)) * det(w_matrix(x, b)) / den
    return lhs, rhs


def okada_pfaffian_check(x, a, b) -> CheckReport:
    with checking("okada-pfaffian", {"x": list(x), "a": list(a), "b": list(b)}) as report:
        report.lhs, report.rhs = okada_pfaffian_sides(x, a, b)
    return report


def _ypow(y: Fraction, x_exponent) -> Fraction:
    """``x**e`` with ``x = y**2`` for ``e`` a multiple of 1/2."""
    e = 2 * Fraction(x_exponent)
    if e.denominator != 1:
        raise ValueError(f"exponent {x_exponent} is not a multiple of 1/2")
    e = int(e)
    return y**e if e >= 0 else 1 / y ** (-e)


def _alt_det(ys, exponents, eps):
    """``det(x_i**e_j - eps * x_i**(-e_j))``."""
    return det([[_ypow(y, e) - eps * _ypow(y, -e) for e in exponents] for y in ys])


def power_difference_matrix(ys, r: int, a, eps: int):
    """``M_ij = x_i**(j-a) - eps * x_i**(a-j)`` for ``j = 1..r``."""
    a = Fraction(a)
    return [[_ypow(y, j - a) - eps * _ypow(y, a - j) for j in range(1, r + 1)] for y in ys]


def power_minor_sides(y, r: int, a, eps: int):
    """Subset sum of minors of the key matrix and its determinant-ratio closed form."""
    ys = [Fraction(v) for v in y]
    n = len(ys)
    a = Fraction(a)
    if n % 2:
        raise ValueError("the number of variables must be even")
    if r < n:
        raise ValueError("needs r >= n")
    if eps not in (-1, 1):
        raise ValueError("epsilon must be -1 or +1")
    if (2 * a).denominator != 1:
        raise ValueError("a must be a multiple of 1/2")
    lhs = minor_sum(power_difference_matrix(ys, r, a, eps))
    half = Fraction(1, 2)
    cols = range(1, n + 1)
    base = _alt_det(ys, [n - j + half for j in cols], 1)
    if not base:
        raise DegenerateInput("the B_n denominator vanishes")
    first = _alt_det(ys, [Fraction(r, 2) + Fraction(n, 2) - j - a + 1 for j in cols], eps)
    second = _alt_det(ys, [Fraction(r, 2) + Fraction(n, 2) - j + half for j in cols], 1)
    rhs = (-1) ** (n // 2) * first * second / base
    return lhs, rhs


def power_minor_check(y, r: int, a, eps: int) -> CheckReport:
    params = {"y": list(y), "r": r, "a": Fraction(a), "epsilon": eps}
    with checking("power-minors", params) as report:
        report.lhs, report.rhs = power_minor_sides(y, r, a, eps)
    return report
