"""Check results shared by every verification routine."""

from __future__ import annotations

import time
from contextlib import contextmanager
from dataclasses import dataclass, field

from .exact.cyclo import CycloProduct
from .exact.ratfunc import RationalFunction


def format_value(value) -> str | None:
    """Machine-readable text: integers, ``p/q``, or sparse ``c*t^e`` sums."""
    if value is None:
        return None
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(format_value(v) for v in value) + "]"
    if isinstance(value, CycloProduct):
        value = value.to_rf()
    if isinstance(value, RationalFunction):
        if value.is_laurent():
            return _sparse(value.as_laurent())
        return f"({_sparse(value.num)})/({_sparse(value.den)})"
    return str(value)


def _sparse(poly) -> str:
    terms = sorted(poly.terms().items())
    if not terms:
        return "0"
    return " + ".join(f"{c}*t^{e}" for e, c in terms)


@dataclass
class CheckReport:
    """Outcome of comparing two exact evaluations of one identity."""

    name: str
    params: dict
    lhs: object = None
    rhs: object = None
    equal: bool = False
    elapsed: float = 0.0
    error: str | None = None
    detail: dict = field(default_factory=dict)

    def to_record(self) -> dict:
        return {
            "id": self.name,
            "params": {k: format_value(v) for k, v in self.params.items()},
            "equal": self.equal,
            "lhs": format_value(self.lhs),
            "rhs": format_value(self.rhs),
            "elapsed_ms": round(self.elapsed * 1000, 3),
            "error": self.error,
        }


@contextmanager
def checking(name: str, params: dict, errors=(ArithmeticError, ValueError)):
    """Time a check and turn evaluation errors into a failed report.

    The body fills ``report.lhs`` and ``report.rhs``; equality is decided on
    exit unless the body already set ``report.equal``.
    """
    report = CheckReport(name, dict(params))
    start = time.perf_counter()
    try:
        yield report
        if report.error is None and not report.equal:
            report.equal = report.lhs == report.rhs
    except errors as exc:
        report.error = f"{type(exc).__name__}: {exc}"
        report.equal = False
    finally:
        report.elapsed = time.perf_counter() - start
