"""Generalised q-shifted factorials C^-, C^+ and C^0 of a partition.

Each comes twice: as a product over the cells of the diagram and as a
product over the parts with ordinary q-shifted factorials.  ``a`` and ``q``
can be any field elements (``Fraction`` or ``RationalFunction``).
"""

from __future__ import annotations

from .partitions import GPartition


def _pow(q, k: int):
    return q**k if k >= 0 else 1 / q ** (-k)


def _poch(a, q, m: int):
    out = 1
    for k in range(m):
        out = out * (1 - a * _pow(q, k))
    return out


def c_minus_cells(lam: GPartition, a, q):
    parts, cols = lam.int_parts(), lam.conjugate()
    out = 1
    for i, j in lam.cells():
        out = out * (1 - a * _pow(q, parts[i - 1] + cols[j - 1] - i - j))
    return out


def c_plus_cells(lam: GPartition, a, q):
    parts, cols = lam.int_parts(), lam.conjugate()
    out = 1
    for i, j in lam.cells():
        out = out * (1 - a * _pow(q, parts[i - 1] - cols[j - 1] + j - i + 1))
    return out


def c_zero_cells(lam: GPartition, a, q):
    out = 1
    for i, j in lam.cells():
        out = out * (1 - a * _pow(q, j - i))
    return out


def _parts(lam: GPartition, n: int | None):
    n = lam.length if n is None else n
    return lam.padded(n).int_parts(), n


def c_minus_rows(lam: GPartition, a, q, n: int | None = None):
    p, n = _parts(lam, n)
    out = 1
    for i in range(1, n + 1):
        out = out * _poch(a * _pow(q, n - i), q, p[i - 1])
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            out = out * (1 - a * _pow(q, j - i - 1)) / (1 - a * _pow(q, p[i - 1] - p[j - 1] + j - i - 1))
    return out


def c_plus_rows(lam: GPartition, a, q, n: int | None = None):
    p, n = _parts(lam, n)
    out = 1
    for i in range(1, n + 1):
        out = out * _poch(a * _pow(q, 2 - 2 * i), q, 2 * p[i - 1]) / _poch(a * _pow(q, 2 - i - n), q, p[i - 1])
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            out = out * (1 - a * _pow(q, 2 - i - j)) / (1 - a * _pow(q, p[i - 1] + p[j - 1] - i - j + 2))
    return out


def c_zero_rows(lam: GPartition, a, q, n: int | None = None):
    p, n = _parts(lam, n)
    out = 1
    for i in range(1, n + 1):
        out = out * _poch(a * _pow(q, 1 - i), q, p[i - 1])
    return out


def conjugate_partition(lam: GPartition) -> GPartition:
    return GPartition.of(lam.conjugate())
