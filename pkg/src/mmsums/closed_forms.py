"""Right-hand sides of the catalog identities and the verification driver.

Also evaluates the continuous Macdonald-Mehta integrals in closed form and
checks that suitably scaled discrete sums approach them.
"""

from __future__ import annotations

import itertools
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

from .catalog import DomainError, IdentityDescriptor, get_identity, load_catalog
from .catalog.program import PlainBackend, QBackend, classical_gamma, run
from .exact.gamma import SqrtPiNumber
from .exact.halfint import HalfInt
from .exact.ratfunc import RationalFunction
from .report import format_value
from .sums import discrete_mm_sum, plain_lhs, q_sum_lhs


def closed_form_rhs(identity_id: str, params: dict):
    """Exact right side: a RationalFunction for q-identities, else a Fraction.

    q-identities include the declared ``q**qnorm`` normalisation, so the
    result is directly comparable with :func:`mmsums.sums.q_sum_lhs`.
    """
    desc = get_identity(identity_id)
    env = desc.coerce_params(params)
    if desc.kind == "q":
        return run(desc.rhs, env, QBackend(), desc.qnorm_value(env))
    return run(desc.rhs, env, PlainBackend()).rational()


def lhs_value(identity_id: str, params: dict, points=None):
    desc = get_identity(identity_id)
    if desc.kind == "q":
        return q_sum_lhs(identity_id, params, points)
    return plain_lhs(identity_id, params)


@dataclass
class VerificationReport:
    id: str
    params: dict
    mode: str
    lhs: object = None
    rhs: object = None
    equal: bool = False
    elapsed: float = 0.0
    error: str | None = None
    points: list = field(default_factory=list)

    def to_record(self) -> dict:
        return {
            "id": self.id,
            "params": {k: str(v) for k, v in self.params.items()},
            "mode": self.mode,
            "equal": self.equal,
            "lhs": format_value(self.lhs),
            "rhs": format_value(self.rhs),
            "elapsed_ms": round(self.elapsed * 1000, 3),
            "error": self.error,
        }


def verify_identity(identity_id: str, params: dict, mode: str = "symbolic", points=None) -> VerificationReport:
    """Compare both sides exactly.

    ``mode`` is ``symbolic`` (rational functions), ``points`` (values at the
    given rationals, a weaker check) or ``exact`` for classical identities.
    Evaluation errors are captured in the report.
    """
    desc = get_identity(identity_id)
    if desc.kind == "plain":
        mode = "exact"
    report = VerificationReport(identity_id, dict(params), mode)
    start = time.perf_counter()
    try:
        if mode == "points":
            pts = [Fraction(p) for p in (points or (Fraction(1, 2), Fraction(1, 3)))]
            report.points = pts
            rhs_rf = closed_form_rhs(identity_id, params)
            report.lhs = q_sum_lhs(identity_id, params, pts)
            report.rhs = [_at(rhs_rf, p) for p in pts]
        elif mode in ("symbolic", "exact"):
            report.rhs = closed_form_rhs(identity_id, params)
            report.lhs = lhs_value(identity_id, params)
        else:
            raise ValueError(f"unknown mode {mode!r}")
        report.equal = report.lhs == report.rhs
    except (ArithmeticError, ValueError, KeyError) as exc:
        report.error = f"{type(exc).__name__}: {exc}"
        report.equal = False
    report.elapsed = time.perf_counter() - start
    return report


def _at(f: RationalFunction, t0: Fraction) -> Fraction:
    if t0 == 1:
        raise ValueError("use the classical identity for q = 1")
    return f.evaluate(t0)


# parameter grids


def parameter_grid(desc: IdentityDescriptor, ranges: dict) -> list[dict]:
    """All in-domain parameter dicts from per-name value lists.

    Names missing from ``ranges`` fall back to the choices of a choice
    parameter.  Output is in lexicographic order of the parameter tuple.
    """
    names = list(desc.params)
    lists = []
    for name in names:
        kind = desc.params[name]
        if name in ranges:
            lists.append(sorted(Fraction(v) for v in ranges[name]))
        elif isinstance(kind, dict):
            lists.append(sorted(Fraction(str(c)) for c in kind["choice"]))
        else:
            raise DomainError(f"{desc.id}: no values given for {name}")
    out = []
    for combo in itertools.product(*lists):
        params = dict(zip(names, combo))
        if desc.in_domain(params):
            out.append(params)
    return out


def _verify_args(args):
    return verify_identity(*args)


def sweep(jobs, workers: int = 1):
    """Verify ``(id, params, mode, points)`` jobs, yielding reports in order."""
    jobs = list(jobs)
    if workers <= 1:
        for job in jobs:
            yield verify_identity(*job)
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        yield from pool.map(_verify_args, jobs)


# continuous integrals and the scaled limit


def _gamma_ratio(num, den) -> SqrtPiNumber:
    return classical_gamma(num) / classical_gamma(den)


def mm_continuous(alpha, gamma, delta, r: int) -> SqrtPiNumber:
    """Closed form of the Gaussian Macdonald-Mehta integral S_r(alpha, gamma, delta).

    Supported shapes: (1, gamma, 0), (1, 1, 1) and (2, gamma, delta).
    """
    alpha, delta, r = int(alpha), int(delta), int(r)
    gamma = Fraction(gamma)
    if (2 * gamma).denominator != 1 or gamma < 0:
        raise ValueError("gamma must be a non-negative integer or half-integer")
    out = SqrtPiNumber(1)
    if alpha == 1 and delta == 0:
        for i in range(1, r + 1):
            out = out * _gamma_ratio(1 + i * gamma, 1 + gamma)
        return out
    if alpha == 1 and gamma == 1 and delta == 1:
        out = SqrtPiNumber(1, 0, r * r) * _gamma_ratio(1 + r, Fraction(1, 2))
        for i in range(1, r // 2 + 1):
            out = out * classical_gamma(i) * _gamma_ratio(1 + i, Fraction(1, 2))
        for i in range(1, (r + 1) // 2):
            out = out * classical_gamma(1 + i) * _gamma_ratio(1 + i, Fraction(1, 2))
        return out
    if alpha == 2:
        # 2**(2 gamma binom(r,2) + delta r/2), kept exact through sqrt(2)
        twice_exponent = 2 * gamma * r * (r - 1) + delta * r
        if twice_exponent.denominator != 1:
            raise ValueError("unsupported power of two")
        out = SqrtPiNumber(1, 0, int(twice_exponent))
        half = Fraction(1, 2)
        for i in range(1, r + 1):
            out = out * _gamma_ratio(1 + i * gamma, 1 + gamma)
            out = out * _gamma_ratio(half + (i - 1) * gamma + Fraction(delta, 2), half)
        return out
    raise ValueError(f"no closed form for (alpha, gamma, delta) = ({alpha}, {gamma}, {delta})")


@dataclass
class LimitReport:
    alpha: int
    gamma: Fraction
    delta: int
    r: int
    n_values: list
    scaled: list
    target: float
    rel_errors: list
    monotone: bool
    final_rel_error: float
    tolerance: float
    passed: bool


def scaled_sum(alpha, gamma, delta, r: int, n) -> float:
    """``2**(-2rn) (n/2)**(-alpha gamma binom(r,2) - delta r/2) S_{r,n}``."""
    n = HalfInt(n)
    value = discrete_mm_sum(alpha, gamma, delta, r, n)
    exponent = Fraction(alpha) * Fraction(gamma) * math.comb(r, 2) + Fraction(delta * r, 2)
    mantissa = Fraction(value, 2 ** (n.twice * r))
    return float(mantissa) * (float(n) / 2) ** (-float(exponent))


def limit_check(alpha, gamma, delta, r: int, n_values, tolerance: float = 0.05) -> LimitReport:
    """Scaled discrete sums against the continuous closed form.

    Passes when the relative error decreases strictly along ``n_values``
    (or is already zero) and the last one is below ``tolerance``.
    """
    n_values = list(n_values)
    if any(b <= a for a, b in zip(n_values, n_values[1:])):
        raise ValueError("n_values must be increasing")
    target = float(mm_continuous(alpha, gamma, delta, r))
    scaled = [scaled_sum(alpha, gamma, delta, r, n) for n in n_values]
    errors = [abs(s - target) / abs(target) for s in scaled]
    # an exact hit (error 0) counts as progress
    monotone = all(b < a or b == 0 for a, b in zip(errors, errors[1:]))
    final = errors[-1] if errors else math.inf
    return LimitReport(
        int(alpha), Fraction(gamma), int(delta), int(r), n_values, scaled, target,
        errors, monotone, final, tolerance, monotone and final < tolerance,
    )


def catalog_ids(kind: str | None = None) -> list[str]:
    return [i for i, d in load_catalog().items() if kind is None or d.kind == kind]
