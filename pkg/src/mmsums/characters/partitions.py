"""Partitions, half-partitions and signed D_n partitions, stored with doubled parts."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction


class ShapeError(ValueError):
    """A shape violates the rules of the family it is used with."""


@dataclass(frozen=True)
class GPartition:
    """Weakly decreasing parts, all integers or all half-integers.

    ``twice_parts`` holds ``2*part`` so every shape is a tuple of ints.  Only
    the last part may be negative, as in D_n weights.
    """

    twice_parts: tuple[int, ...]

    def __post_init__(self):
        tw = tuple(int(p) for p in self.twice_parts)
        object.__setattr__(self, "twice_parts", tw)
        if any(a < b for a, b in zip(tw, tw[1:])):
            raise ShapeError(f"parts {self.parts} are not weakly decreasing")
        if len({p % 2 for p in tw}) > 1:
            raise ShapeError(f"parts {self.parts} mix integers and half-integers")
        if any(p < 0 for p in tw[:-1]):
            raise ShapeError(f"only the last part of {self.parts} may be negative")

    @classmethod
    def of(cls, parts) -> GPartition:
        twice = []
        for p in parts:
            d = 2 * Fraction(p)
            if d.denominator != 1:
                raise ShapeError(f"part {p} is not a multiple of 1/2")
            twice.append(int(d))
        return cls(tuple(twice))

    @classmethod
    def rectangle(cls, width, height: int) -> GPartition:
        """``(width^height)``; ``width`` may be a half-integer."""
        return cls.of([Fraction(width)] * int(height))

    @property
    def parts(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(p, 2) for p in self.twice_parts)

    @property
    def is_half(self) -> bool:
        return bool(self.twice_parts) and self.twice_parts[0] % 2 == 1

    @property
    def is_integral(self) -> bool:
        return not self.is_half

    @property
    def size(self) -> Fraction:
        return Fraction(sum(self.twice_parts), 2)

    @property
    def length(self) -> int:
        return sum(1 for p in self.twice_parts if p != 0)

    @property
    def n_stat(self) -> Fraction:
        """``sum (i-1) * part_i``, the usual n(lambda)."""
        return Fraction(sum(i * p for i, p in enumerate(self.twice_parts)), 2)

    def int_parts(self) -> tuple[int, ...]:
        if self.is_half:
            raise ShapeError(f"{self} has half-integer parts")
        return tuple(p // 2 for p in self.twice_parts)

    def padded(self, n: int) -> GPartition:
        """Exactly ``n`` parts, appending zeros to an integer partition."""
        tw = self.twice_parts
        if len(tw) > n:
            if any(tw[n:]):
                raise ShapeError(f"{self} has more than {n} nonzero parts")
            return GPartition(tw[:n])
        if len(tw) < n and self.is_half:
            raise ShapeError(f"half-partition {self} needs exactly {n} parts")
        return GPartition(tw + (0,) * (n - len(tw)))

    def conjugate(self, width: int | None = None) -> tuple[int, ...]:
        """Column lengths ``lambda'_1, ..., lambda'_width`` (integer partitions only)."""
        parts = self.int_parts()
        if any(p < 0 for p in parts):
            raise ShapeError("conjugate of a signed shape")
        width = max(parts, default=0) if width is None else width
        return tuple(sum(1 for p in parts if p >= j) for j in range(1, width + 1))

    def fits_in_box(self, r, n: int) -> bool:
        """True when the shape lies in the rectangle of width ``r`` and height ``n``."""
        tw = self.twice_parts
        return self.length <= n and all(abs(p) <= 2 * Fraction(r) for p in tw)

    def bar(self) -> GPartition:
        """Negate the last part."""
        tw = self.twice_parts
        if not tw:
            return self
        return GPartition(tw[:-1] + (-tw[-1],))

    def cells(self):
        for i, p in enumerate(self.int_parts(), start=1):
            for j in range(1, p + 1):
                yield i, j

    def __str__(self):
        return "(" + ",".join(str(p) for p in self.parts) + ")"


def partitions_in_box(r: int, n: int):
    """All integer partitions with at most ``n`` parts, each at most ``r``.

    Shapes come from strictly increasing ``1 <= k_1 < ... < k_n <= r + n``
    via ``lambda_j = k_{n-j+1} - (n - j + 1)``, each padded to ``n`` parts.
    """
    for ks in itertools.combinations(range(1, r + n + 1), n):
        yield GPartition.of([ks[n - j] - (n - j + 1) for j in range(1, n + 1)])


def validate(kind: str, lam: GPartition, n: int) -> GPartition:
    """Check ``lam`` against the shape rules of a character family, pad to ``n``."""
    lam = lam.padded(n)
    tw = lam.twice_parts
    negative_last = bool(tw) and tw[-1] < 0
    if kind in ("schur", "sp"):
        if lam.is_half or negative_last:
            raise ShapeError(f"{kind} needs an ordinary partition, got {lam}")
    elif kind in ("so_odd", "o_even"):
        if negative_last or (lam.is_half and tw[-1] <= 0):
            raise ShapeError(f"{kind} needs a partition or half-partition, got {lam}")
    elif kind == "so_even":
        if n >= 2 and tw[-2] < abs(tw[-1]):
            raise ShapeError(f"{lam} breaks the rule part_(n-1) >= |part_n|")
    else:
        raise ValueError(f"unknown character family {kind!r}")
    return lam
