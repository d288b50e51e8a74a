"""Tableaux on barred alphabets, their statistics and closed-form counts.

Letters are coded as integers: in a barred alphabet ``k`` is ``2k-1``,
``k-bar`` is ``2k`` and infinity is ``2n+1``; in the plain alphabet of
semistandard tableaux ``k`` is ``k``.

Kinds:

* ``ssyt``: semistandard tableaux on ``1 < ... < n``;
* ``symplectic``: rows weak, columns strict on ``1 < 1b < ... < n < nb``,
  entries of row ``k`` at least ``k``;
* ``sundaram``: as ``symplectic`` plus the letter ``inf``, which may repeat
  down a column but appears at most once in a row;
* ``even_sundaram``: as ``sundaram`` but entries of row ``k`` are at least
  ``k-bar``.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from .partitions import GPartition, partitions_in_box

TABLEAU_KINDS = ("ssyt", "symplectic", "sundaram", "even_sundaram")
WEIGHTINGS = ("plain", "sign_size", "sign_minfty", "height_exact_n")


def _kind_rules(kind: str, n: int):
    """(largest letter, has infinity, smallest letter allowed in row k)."""
    if kind == "ssyt":
        return n, False, lambda k: 1
    if kind == "symplectic":
        return 2 * n, False, lambda k: 2 * k - 1
    if kind == "sundaram":
        return 2 * n + 1, True, lambda k: 2 * k - 1
    if kind == "even_sundaram":
        return 2 * n + 1, True, lambda k: 2 * k
    raise ValueError(f"unknown tableau kind {kind!r}; choose from {', '.join(TABLEAU_KINDS)}")


@dataclass(frozen=True)
class Tableau:
    kind: str
    n: int
    rows: tuple[tuple[int, ...], ...]
    counts: Counter = field(compare=False, hash=False, repr=False, default=None)

    def __post_init__(self):
        if self.counts is None:
            object.__setattr__(self, "counts", Counter(c for row in self.rows for c in row))

    @property
    def shape(self) -> GPartition:
        return GPartition.of([len(row) for row in self.rows]).padded(self.n)

    @property
    def size(self) -> int:
        return sum(len(row) for row in self.rows)

    @property
    def height(self) -> int:
        return sum(1 for row in self.rows if row)

    @property
    def infinity(self) -> int | None:
        return 2 * self.n + 1 if self.kind in ("sundaram", "even_sundaram") else None

    def multiplicity(self, k: int, barred: bool = False) -> int:
        """Occurrences of the letter ``k`` (or ``k``-bar)."""
        if self.kind == "ssyt":
            if barred:
                raise ValueError("no barred letters in semistandard tableaux")
            return self.counts[k]
        return self.counts[2 * k if barred else 2 * k - 1]

    @property
    def m_infinity(self) -> int:
        inf = self.infinity
        return self.counts[inf] if inf is not None else 0

    def monomial(self, x) -> Fraction:
        """``prod x_k**(m_k - m_kbar)``; for ``ssyt`` simply ``prod x_k**m_k``."""
        out = Fraction(1)
        for k in range(1, self.n + 1):
            xk = Fraction(x[k - 1])
            if self.kind == "ssyt":
                e = self.counts[k]
            else:
                e = self.counts[2 * k - 1] - self.counts[2 * k]
            out *= xk**e if e >= 0 else 1 / xk ** (-e)
        return out

    def weight(self, weighting: str) -> int:
        if weighting == "plain":
            return 1
        if weighting == "sign_size":
            return (-1) ** self.size
        if weighting == "sign_minfty":
            return (-1) ** self.m_infinity
        if weighting == "height_exact_n":
            return 1 if self.height == self.n else 0
        raise ValueError(f"unknown weighting {weighting!r}")

    def letter(self, code: int) -> str:
        if self.kind == "ssyt":
            return str(code)
        if code == self.infinity:
            return "inf"
        k, bar = (code + 1) // 2, code % 2 == 0
        return f"{k}b" if bar else str(k)

    def dump(self) -> str:
        """Rows of space-separated letters; ``1b`` is a barred 1, ``inf`` infinity."""
        if not self.rows or not any(self.rows):
            return "."
        return "\n".join(" ".join(self.letter(c) for c in row) for row in self.rows if row)


def _fillings(shape: tuple[int, ...], top: int, has_inf: bool, row_min):
    cells = [(i, j) for i, length in enumerate(shape) for j in range(length)]
    grid = [[0] * length for length in shape]
    inf = top if has_inf else None

    def options(i, j):
        lo = row_min(i + 1)
        if j > 0:
            left = grid[i][j - 1]
            if left == inf:
                return ()
            lo = max(lo, left)
        if i > 0:
            above = grid[i - 1][j]
            if above == inf:
                return (inf,)
            lo = max(lo, above + 1)
        return range(lo, top + 1)

    def walk(pos):
        if pos == len(cells):
            yield tuple(tuple(row) for row in grid)
            return
        i, j = cells[pos]
        for v in options(i, j):
            grid[i][j] = v
            yield from walk(pos + 1)
        grid[i][j] = 0

    yield from walk(0)


def tableaux(kind: str, r: int, n: int, shape: GPartition | None = None):
    """Every tableau of ``kind`` with width at most ``r`` and height at most ``n``.

    With ``shape`` only that shape is produced.  Shapes follow
    :func:`partitions_in_box`, fillings are in lexicographic order.
    """
    top, has_inf, row_min = _kind_rules(kind, n)
    shapes = [shape.padded(n)] if shape is not None else list(partitions_in_box(r, n))
    for lam in shapes:
        parts = tuple(p for p in lam.int_parts() if p)
        for rows in _fillings(parts, top, has_inf, row_min):
            yield Tableau(kind, n, rows)


def tableau_character(kind: str, lam: GPartition, n: int, x) -> Fraction:
    """``sum_T x**T`` over the tableaux of shape ``lam``."""
    width = max(lam.int_parts(), default=0)
    return sum((t.monomial(x) for t in tableaux(kind, width, n, lam)), Fraction(0))


def weighted_count(kind: str, r: int, n: int, weighting: str = "plain") -> int:
    return sum(t.weight(weighting) for t in tableaux(kind, r, n))


def shape_breakdown(kind: str, r: int, n: int) -> dict[tuple[int, ...], int]:
    out: dict[tuple[int, ...], int] = {}
    for t in tableaux(kind, r, n):
        key = t.shape.int_parts()
        out[key] = out.get(key, 0) + 1
    return out


def infinity_histogram(kind: str, r: int, n: int) -> dict[int, int]:
    return dict(sorted(Counter(t.m_infinity for t in tableaux(kind, r, n)).items()))


def _rising(a: Fraction, n: int) -> Fraction:
    out = Fraction(1)
    for k in range(n):
        out *= a + k
    return out


def _box_product(rows: int, cols: int, shift: int, base: int) -> Fraction:
    """``prod_{i<=rows, j<=cols} (i+j+shift)/(i+j+base)``."""
    out = Fraction(1)
    for i in range(1, rows + 1):
        for j in range(1, cols + 1):
            out *= Fraction(i + j + shift, i + j + base)
    return out


def tableau_count_closed(kind: str, r: int, n: int, weighting: str = "plain") -> Fraction:
    """Product formula for the (weighted) number of tableaux inside ``(r^n)``."""
    if weighting not in WEIGHTINGS:
        raise ValueError(f"unknown weighting {weighting!r}")
    if kind == "sundaram":
        plane = _box_product(n, n, r - 1, -1)
        if weighting == "plain":
            odd = Fraction(1)
            for i in range(1, n + 1):
                odd *= Fraction(2 * i + r - 1, 2 * i - 1)
            return odd * plane
        if weighting == "sign_size":
            return (-1) ** (r * n) * plane
        if weighting == "sign_minfty":
            return plane
    elif kind == "symplectic":
        if weighting == "plain":
            return _box_product(n + 1, n, r - 1, -1)
        if weighting == "sign_size":
            head = Fraction(1)
            for i in range(1, n + 1):
                head *= Fraction(i + r // 2, i)
            return (-1) ** (r * n) * head * _box_product(n, n - 1, r, 0)
    elif kind == "even_sundaram":
        tail = _box_product(n, n - 1, r - 1, 0)
        half = Fraction(r, 2)
        if weighting == "plain":
            return 2 ** (2 * n - 1) * (_rising(half + Fraction(1, 2), n) + _rising(half, n)) / math.factorial(n) * tail
        if weighting == "height_exact_n":
            return 2 ** (2 * n) * _rising(half, n) / math.factorial(n) * tail
    elif kind not in TABLEAU_KINDS:
        raise ValueError(f"unknown tableau kind {kind!r}")
    raise ValueError(f"no closed form for {kind} tableaux with weighting {weighting}")
