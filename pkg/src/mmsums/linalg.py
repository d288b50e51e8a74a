"""Exact dense linear algebra over any field of Python numbers.

Entries may be ``int``, ``Fraction``, ``LaurentPoly``-backed
``RationalFunction`` or anything else with field operations and ``bool``.
"""

from __future__ import annotations

from fractions import Fraction


def _lift(x):
    return Fraction(x) if isinstance(x, int) else x


def det(matrix):
    """Determinant by fraction-free (Bareiss) elimination with row pivoting.

    The divisions are exact, so intermediate entries stay minors of the
    input rather than growing into nested fractions.
    """
    a = [[_lift(x) for x in row] for row in matrix]
    size = len(a)
    if any(len(row) != size for row in a):
        raise ValueError("determinant of a non-square matrix")
    if size == 0:
        return Fraction(1)
    sign = 1
    prev = Fraction(1)
    for k in range(size - 1):
        if not a[k][k]:
            swap = next((i for i in range(k + 1, size) if a[i][k]), None)
            if swap is None:
                return a[k][k] * 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        pivot = a[k][k]
        for i in range(k + 1, size):
            row_i, row_k = a[i], a[k]
            lead = row_i[k]
            for j in range(k + 1, size):
                row_i[j] = (row_i[j] * pivot - lead * row_k[j]) / prev
            row_i[k] = pivot * 0
        prev = pivot
    out = a[-1][-1]
    return out if sign == 1 else -out


def matmul(a, b):
    inner = len(b)
    cols = len(b[0]) if b else 0
    return [[sum((a[i][k] * b[k][j] for k in range(inner)), Fraction(0)) for j in range(cols)] for i in range(len(a))]


def transpose(a):
    return [list(col) for col in zip(*a)]
