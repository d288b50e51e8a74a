"""Seeded random rationals for the point-evaluation checks."""

from __future__ import annotations

import random
from fractions import Fraction

RETRY_LIMIT = 5


def small_fraction(rng: random.Random, height: int = 9, signed: bool = True) -> Fraction:
    """A nonzero fraction with numerator and denominator at most ``height``."""
    value = Fraction(rng.randint(1, height), rng.randint(1, height))
    if signed and rng.random() < 0.5:
        value = -value
    return value


def generic_y(rng: random.Random, n: int, height: int = 9) -> list[Fraction]:
    """``y`` with ``x = y**2`` avoiding the usual bialternant degeneracies.

    Rejects ``x_i = 1``, ``x_i = x_j`` and ``x_i x_j = 1``.
    """
    while True:
        ys = [small_fraction(rng, height) for _ in range(n)]
        xs = [y * y for y in ys]
        if any(x == 1 for x in xs):
            continue
        if any(xs[i] == xs[j] or xs[i] * xs[j] == 1 for i in range(n) for j in range(i + 1, n)):
            continue
        return ys


def with_retries(check, draw, attempts: int = RETRY_LIMIT):
    """Run ``check(draw())`` until it reports no degeneracy, at most ``attempts`` times.

    ``check`` returns a report with an ``error`` attribute; errors that
    mention a non-generic point trigger a fresh draw, anything else is final.
    """
    report = None
    for _ in range(attempts):
        report = check(draw())
        if not report.error or ("NonGeneric" not in report.error and "Degenerate" not in report.error):
            return report
    return report


CLASSICAL_DENOMINATORS = (7, 5, 11, 13, 17)


def fraction_with_denominator(rng: random.Random, denominator: int, spread: int = 3) -> Fraction:
    """A non-integer with exactly the given prime denominator."""
    while True:
        num = rng.randint(-spread * denominator, spread * denominator)
        if num % denominator:
            return Fraction(num, denominator)


def generic_classical(rng: random.Random, names) -> dict[str, Fraction]:
    """One parameter per name, each over a different prime denominator.

    Sums and differences of distinct parameters then never land on an
    integer, so no Pochhammer or gamma argument degenerates.
    """
    if len(names) > len(CLASSICAL_DENOMINATORS):
        raise ValueError("too many parameters for the prime pool")
    return {name: fraction_with_denominator(rng, p) for name, p in zip(names, CLASSICAL_DENOMINATORS)}


def random_monomial(rng: random.Random, low: int = -7, high: int = 7, even: bool = False):
    """``+-t**e`` for the basic-series checks; ``even`` forces ``+q**k``.

    Never returns ``q**-k`` with ``k >= 0``: such a parameter would cut the
    series short and make most checks trivially ``0 = 0``.
    """
    from .hypergeo import QMonomial

    while True:
        if even:
            mono = QMonomial(1, 2 * rng.randint(low // 2, high // 2))
        else:
            mono = QMonomial(rng.choice((-1, 1)), rng.randint(low, high))
        if not (mono.sign == 1 and mono.exponent <= 0 and mono.exponent % 2 == 0):
            return mono
