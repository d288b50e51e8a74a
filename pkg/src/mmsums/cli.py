"""Command-line front end: ``mmsums <command> ...``.

Every command emits one record per check.  The exit status is 0 exactly
when every record reports ``equal``; bad arguments exit with status 2.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from . import hypergeo, pfaffian
from .catalog import DomainError, get_identity, load_catalog
from .characters import (
    SPECIALISED_SUMS, RECTANGLE_SUMS, TABLEAU_KINDS, WEIGHTINGS, CharFamily, GPartition, char_reduce_check,
    specialised_sum_check, infinity_histogram, rectangle_sum_check, shape_breakdown, tableau_count_closed,
    tableaux, weighted_count,
)
from .closed_forms import limit_check, parameter_grid, verify_identity
from .report import CheckReport, checking
from .sampling import RETRY_LIMIT, generic_classical, generic_y, random_monomial, small_fraction, with_retries

CSV_FIELDS = ("id", "params", "equal", "lhs", "rhs", "elapsed_ms", "error")


class UsageError(ValueError):
    """Bad command-line input."""


# argument parsing helpers


def parse_value(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"not a rational number: {text!r}") from None


def parse_range(text: str) -> list[Fraction]:
    """``3``, ``1,2,5``, ``2..6``, ``1/2..5/2`` or ``0..3:1/2`` (step after the colon)."""
    out: list[Fraction] = []
    for piece in text.split(","):
        piece = piece.strip()
        if ".." in piece:
            span, _, step_text = piece.partition(":")
            lo_text, hi_text = span.split("..", 1)
            lo, hi = parse_value(lo_text), parse_value(hi_text)
            step = parse_value(step_text) if step_text else Fraction(1)
            if step <= 0:
                raise UsageError(f"range step must be positive in {piece!r}")
            if hi < lo:
                raise UsageError(f"empty range {piece!r}")
            v = lo
            while v <= hi:
                out.append(v)
                v += step
        elif piece:
            out.append(parse_value(piece))
    if not out:
        raise UsageError(f"empty range {text!r}")
    return sorted(set(out))


def parse_int_range(text: str) -> list[int]:
    values = parse_range(text)
    if any(v.denominator != 1 for v in values):
        raise UsageError(f"expected integers in {text!r}")
    return [int(v) for v in values]


def parse_assignments(items) -> dict[str, str]:
    out = {}
    for item in items or ():
        name, sep, value = item.partition("=")
        if not sep or not name:
            raise UsageError(f"expected name=value, got {item!r}")
        out[name.strip()] = value.strip()
    return out


def parse_shape(text: str) -> GPartition:
    parts = [parse_value(p) for p in text.split(",") if p.strip()] if text.strip() else []
    return GPartition.of(parts)


# output


class Emitter:
    """Serialises records in order and tracks whether all were equal."""

    def __init__(self, stream, fmt: str, timing: bool = True):
        self.stream = stream
        self.fmt = fmt
        self.timing = timing
        self.all_equal = True
        self.count = 0
        self._csv = None

    def emit(self, record: dict, note: str = ""):
        record = dict(record)
        if not self.timing:
            record.pop("elapsed_ms", None)
        self.all_equal = self.all_equal and record.get("equal") is True
        self.count += 1
        if self.fmt == "jsonl":
            self.stream.write(json.dumps(record, default=str) + "\n")
        elif self.fmt == "csv":
            if self._csv is None:
                fields = [f for f in CSV_FIELDS if self.timing or f != "elapsed_ms"]
                self._csv = csv.DictWriter(self.stream, fieldnames=fields, extrasaction="ignore", lineterminator="\n")
                self._csv.writeheader()
            row = dict(record)
            row["params"] = json.dumps(row.get("params", {}), default=str)
            self._csv.writerow(row)
        else:
            self.stream.write(_text_line(record, note) + "\n")


def _text_line(record: dict, note: str) -> str:
    status = "ok  " if record.get("equal") else "FAIL"
    params = " ".join(f"{k}={v}" for k, v in (record.get("params") or {}).items())
    line = f"{status} {record.get('id')} {params}".rstrip()
    if record.get("error"):
        return f"{line}  error: {record['error']}"
    lhs, rhs = record.get("lhs"), record.get("rhs")
    if lhs == rhs:
        line += f"  value={_clip(lhs)}"
    else:
        line += f"  lhs={_clip(lhs)} rhs={_clip(rhs)}"
    return line + (f"  {note}" if note else "")


def _clip(text, width: int = 120) -> str:
    text = str(text)
    return text if len(text) <= width else text[: width - 3] + "..."


def _call(job):
    func, args, kwargs = job
    return func(*args, **kwargs)


def run_jobs(jobs, workers: int):
    """Run ``(func, args, kwargs)`` jobs, yielding results in submission order."""
    jobs = list(jobs)
    if workers <= 1 or len(jobs) <= 1:
        for job in jobs:
            yield _call(job)
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        yield from pool.map(_call, jobs)


# commands


def cmd_catalog(args, out: Emitter) -> None:
    for ident, desc in load_catalog().items():
        if args.kind and desc.kind != args.kind:
            continue
        params = {k: (v if isinstance(v, str) else "choice " + "|".join(map(str, v["choice"]))) for k, v in desc.params.items()}
        domain = " and ".join(desc.domain) or "all"
        if out.fmt == "text":
            shown = ", ".join(f"{k}: {v}" for k, v in params.items())
            out.stream.write(f"{ident:<18} {desc.kind:<5} {desc.title}\n{'':<24}params {shown}; domain {domain}\n")
        else:
            out.emit({"id": ident, "params": params, "equal": True, "lhs": desc.title, "rhs": domain,
                      "elapsed_ms": 0.0, "error": None})


_GRID_NAMES = ("r", "n", "m", "p", "gamma", "delta")


def _ranges(args) -> dict:
    return {name: parse_range(getattr(args, name)) for name in _GRID_NAMES if getattr(args, name, None)}


def _mode_for(desc, params, mode: str) -> str:
    if desc.kind != "q":
        return "exact"
    if mode == "auto":
        return "symbolic" if params["r"] <= 2 else "points"
    return mode


def _verify_jobs(ids, ranges, mode, points):
    for ident in ids:
        desc = get_identity(ident)
        try:
            grid = parameter_grid(desc, ranges)
        except DomainError as exc:
            raise UsageError(str(exc)) from None
        for params in grid:
            yield (verify_identity, (ident, params, _mode_for(desc, params, mode), points), {})


def cmd_verify(args, out: Emitter) -> None:
    try:
        get_identity(args.identity)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    jobs = list(_verify_jobs([args.identity], _ranges(args), args.mode, _points(args)))
    if not jobs:
        raise UsageError("no parameter tuple in the identity's domain")
    for report in run_jobs(jobs, args.workers):
        out.emit(report.to_record())


SWEEP_DEFAULTS = {"r": "1..3", "n": "0..3:1/2", "m": "0..3:1/2", "p": "0..2", "gamma": "1..3"}


def cmd_sweep(args, out: Emitter) -> None:
    ids = list(load_catalog()) if args.ids == "all" else [i.strip() for i in args.ids.split(",") if i.strip()]
    for ident in ids:
        try:
            get_identity(ident)
        except KeyError as exc:
            raise UsageError(exc.args[0]) from None
    if args.kind:
        ids = [i for i in ids if get_identity(i).kind == args.kind]
    for name, default in SWEEP_DEFAULTS.items():
        if getattr(args, name, None) is None:
            setattr(args, name, default)
    jobs = list(_verify_jobs(ids, _ranges(args), args.mode, _points(args)))
    for report in run_jobs(jobs, args.workers):
        out.emit(report.to_record())


def _points(args):
    return [parse_value(p) for p in args.t0.split(",")] if getattr(args, "t0", None) else None


def tableau_count_report(kind: str, r: int, n: int, weighting: str) -> CheckReport:
    with checking("tableau-count", {"kind": kind, "r": r, "n": n, "weight": weighting}) as report:
        report.lhs = weighted_count(kind, r, n, weighting)
        report.rhs = tableau_count_closed(kind, r, n, weighting)
        if weighting == "plain":
            report.detail["shapes"] = {str(list(k)): v for k, v in sorted(shape_breakdown(kind, r, n).items())}
            if kind != "ssyt":
                report.detail["infinity"] = infinity_histogram(kind, r, n)
    return report


def cmd_tableaux_count(args, out: Emitter) -> None:
    jobs = [
        (tableau_count_report, (args.kind, r, n, args.weight), {})
        for r in parse_int_range(args.r)
        for n in parse_int_range(args.n)
    ]
    for report in run_jobs(jobs, args.workers):
        record = report.to_record()
        if args.breakdown and report.detail:
            record["detail"] = report.detail
        note = ""
        if args.breakdown and report.detail:
            note = " ".join(f"{k}={v}" for k, v in report.detail.items())
        out.emit(record, note)


def cmd_tableaux_list(args, out: Emitter) -> None:
    shape = parse_shape(args.shape) if args.shape is not None else None
    shown = 0
    for tab in tableaux(args.kind, args.r, args.n, shape):
        if args.limit is not None and shown >= args.limit:
            break
        shown += 1
        if out.fmt == "text":
            out.stream.write(tab.dump() + "\n\n")
        else:
            params = {"kind": args.kind, "r": args.r, "n": args.n, "shape": str(tab.shape)}
            out.emit({"id": "tableau", "params": params, "equal": True, "lhs": tab.dump(), "rhs": None,
                      "elapsed_ms": 0.0, "error": None})


def _families(name: str, n: int) -> CharFamily:
    makers = {
        "schur": CharFamily.schur, "so_odd": CharFamily.so_odd, "sp": CharFamily.sp,
        "so_even": CharFamily.so_even, "o_even": CharFamily.o_even,
    }
    if name == "so_odd_plus":
        return CharFamily.so_odd(n, 1)
    if name not in makers:
        raise UsageError(f"unknown family {name!r}")
    return makers[name](n)


def cmd_okada(args, out: Emitter) -> None:
    rng = random.Random(args.seed)
    jobs = []
    if args.okada_command == "sum":
        for r in parse_int_range(args.r):
            for n in parse_int_range(args.n):
                for _ in range(args.points):
                    ys = generic_y(rng, n)
                    jobs.append((rectangle_sum_check, (args.which, r, n, ys, args.epsilon), {}))
    elif args.okada_command == "spec":
        for r in parse_int_range(args.r):
            for n in parse_int_range(args.n):
                jobs.append((specialised_sum_check, (args.which, r, n, args.epsilon), {}))
    else:
        lam = parse_shape(args.shape)
        n = args.n
        family = _families(args.family, n)
        for _ in range(args.points):
            jobs.append((char_reduce_check, (family, lam, generic_y(rng, n - 1), parse_value(args.r)), {}))
    for report in run_jobs(jobs, args.workers):
        out.emit(report.to_record())


def _random_matrix(rng, rows, cols):
    return [[small_fraction(rng) for _ in range(cols)] for _ in range(rows)]


def cmd_pfaffian(args, out: Emitter) -> None:
    rng = random.Random(args.seed)
    reports = []
    for n in parse_int_range(args.n):
        if args.pf_command == "minor":
            for r in parse_int_range(args.r):
                if r < n:
                    continue
                for _ in range(args.points):
                    reports.append((pfaffian.minor_summation_check, (_random_matrix(rng, n, r),), {}))
        elif args.pf_command == "okada":
            for _ in range(args.points):
                x = [small_fraction(rng) for _ in range(n)]
                a = [small_fraction(rng) for _ in range(n)]
                b = [small_fraction(rng) for _ in range(n)]
                reports.append((_okada_retry, (x, a, b, rng.random()), {}))
        else:
            for r in parse_int_range(args.r):
                for a in parse_range(args.a):
                    for eps in (args.epsilon,) if args.epsilon else (-1, 1):
                        for _ in range(args.points):
                            reports.append((pfaffian.power_minor_check, (generic_y(rng, n), r, a, eps), {}))
    for report in run_jobs(reports, args.workers):
        out.emit(report.to_record())


def _okada_retry(x, a, b, salt):
    """Okada's Pfaffian at one point, redrawing coincident coordinates."""
    rng = random.Random(salt)
    first = [list(x)]

    def draw():
        if first:
            return first.pop()
        return [small_fraction(rng) for _ in range(len(x))]

    return with_retries(lambda pt: pfaffian.okada_pfaffian_check(pt, a, b), draw, RETRY_LIMIT)


HYPER_PARAMETERS = {
    "dixon": "ab", "f43sum": "ab", "whipple": "abcef", "watson": "abcde",
    "bc": "abcdef", "bc-limit-1": "adef", "bc-limit-2": "acdef",
}


def _hyper_draw(args, rng):
    """A sampler ``draw(size)`` honouring parameters fixed with ``--param``."""
    names = list(HYPER_PARAMETERS[args.which])
    monomial = args.which not in ("dixon", "f43sum", "whipple")
    given = parse_assignments(args.param)
    unknown = set(given) - set(names)
    if unknown:
        raise UsageError(f"unknown parameters {sorted(unknown)}; expected {', '.join(names)}")
    try:
        fixed = {k: hypergeo.QMonomial.parse(v) if monomial else parse_value(v) for k, v in given.items()}
    except ValueError as exc:
        raise UsageError(str(exc)) from None

    def draw(size):
        if monomial:
            fresh = {k: random_monomial(rng, even=(k == "a" and args.which == "watson")) for k in names}
            if args.which.startswith("bc-limit"):
                # the left side terminates through f = q^-N
                fresh["f"] = hypergeo.QMonomial.q(-size)
        else:
            fresh = generic_classical(rng, names)
        fresh.update(fixed)
        return fresh

    return names, draw, len(fixed) == len(names)


def cmd_hyper(args, out: Emitter) -> None:
    rng = random.Random(args.seed)
    t0 = parse_value(args.t0) if args.t0 else None
    which = args.which
    names, draw, fixed = _hyper_draw(args, rng)
    if which.startswith("bc-limit") and (t0 is None or not 0 < t0 < 1):
        raise UsageError("the limiting forms need --t0 in (0, 1)")
    limit_fn = hypergeo.bc_limit_first_check if which == "bc-limit-1" else hypergeo.bc_limit_second_check
    points = 1 if fixed else args.points
    for size in parse_int_range(args.N):
        if which in hypergeo.CLASSICAL:
            def check(p, size=size):
                return hypergeo.classical_identity_check(which, {**p, "N": size}, t0 if which == "watson" else None)
        elif which == "bc":
            def check(p, size=size):
                return hypergeo.bc_transform_check(*(p[k] for k in names), size, args.rank, t0)
        else:
            def check(p):
                return limit_fn(*(p[k] for k in names), args.rank, t0)
        for _ in range(points):
            report = with_retries(check, lambda: draw(size), 1 if fixed else 4 * RETRY_LIMIT)
            out.emit(report.to_record())


def cmd_limit(args, out: Emitter) -> None:
    ns = parse_range(args.n)
    rep = limit_check(int(args.alpha), parse_value(args.gamma), int(args.delta), int(args.r), ns, args.tolerance)
    params = {"alpha": rep.alpha, "gamma": str(rep.gamma), "delta": rep.delta, "r": rep.r,
              "n": ",".join(str(n) for n in ns)}
    record = {
        "id": "scaled-limit", "params": params, "equal": rep.passed,
        "lhs": repr(rep.scaled[-1]), "rhs": repr(rep.target), "elapsed_ms": 0.0, "error": None,
        "rel_errors": [float(e) for e in rep.rel_errors], "monotone": rep.monotone,
    }
    errors = ", ".join(f"{e:.3g}" for e in rep.rel_errors)
    out.emit(record, f"relative errors {errors}")


# parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "jsonl", "csv"), default="text")
    common.add_argument("--out", help="write records to this file instead of standard output")
    common.add_argument("--workers", type=int, default=1, help="worker processes for independent checks")
    common.add_argument("--seed", type=int, default=0, help="seed for random sample points")
    common.add_argument("--no-timing", action="store_true", help="omit elapsed_ms so reruns are byte-identical")

    parser = argparse.ArgumentParser(prog="mmsums", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("catalog", parents=[common], help="list the identity catalog")
    p.add_argument("--kind", choices=("plain", "q"))
    p.set_defaults(handler=cmd_catalog)

    def grid_options(p):
        for name in _GRID_NAMES:
            p.add_argument(f"--{name}", help=f"values of {name}: 3, 1,2,5, 2..6, 1/2..5/2 or 0..3:1/2")
        p.add_argument("--mode", choices=("auto", "symbolic", "points"), default="auto",
                       help="q-identities: rational functions, or values at --t0 (auto: symbolic up to r = 2)")
        p.add_argument("--t0", help="comma-separated evaluation points for points mode")

    p = sub.add_parser("verify", parents=[common], help="verify one identity over a parameter grid")
    p.add_argument("identity")
    grid_options(p)
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("sweep", parents=[common], help="verify many identities over default or given grids")
    p.add_argument("--ids", default="all", help="comma-separated identity ids, or all")
    p.add_argument("--kind", choices=("plain", "q"))
    grid_options(p)
    p.set_defaults(handler=cmd_sweep)

    p = sub.add_parser("tableaux", help="count or list tableaux")
    tsub = p.add_subparsers(dest="tableaux_command", required=True)
    c = tsub.add_parser("count", parents=[common], help="generated counts against the closed forms")
    c.add_argument("kind", choices=TABLEAU_KINDS)
    c.add_argument("--r", default="2")
    c.add_argument("--n", default="2")
    c.add_argument("--weight", choices=WEIGHTINGS, default="plain")
    c.add_argument("--breakdown", action="store_true", help="also report counts by shape and by number of infinities")
    c.set_defaults(handler=cmd_tableaux_count)
    c = tsub.add_parser("list", parents=[common], help="print tableaux row by row")
    c.add_argument("kind", choices=TABLEAU_KINDS)
    c.add_argument("--r", type=int, default=2)
    c.add_argument("--n", type=int, default=2)
    c.add_argument("--shape", help="comma-separated parts; all shapes in the box when omitted")
    c.add_argument("--limit", type=int)
    c.set_defaults(handler=cmd_tableaux_list)

    p = sub.add_parser("okada", help="rectangular character sums")
    osub = p.add_subparsers(dest="okada_command", required=True)
    c = osub.add_parser("sum", parents=[common], help="exact check at random rational points")
    c.add_argument("which", choices=RECTANGLE_SUMS)
    c.add_argument("--r", default="1..3")
    c.add_argument("--n", default="1..2")
    c.add_argument("--epsilon", type=int, choices=(-1, 1), default=1)
    c.add_argument("--points", type=int, default=3)
    c.set_defaults(handler=cmd_okada)
    c = osub.add_parser("spec", parents=[common], help="principally specialised forms as rational functions")
    c.add_argument("which", choices=SPECIALISED_SUMS)
    c.add_argument("--r", default="1..3")
    c.add_argument("--n", default="1..3")
    c.add_argument("--epsilon", type=int, choices=(-1, 1), default=1)
    c.set_defaults(handler=cmd_okada)
    c = osub.add_parser("reduce", parents=[common], help="the last variable tends to zero")
    c.add_argument("family", choices=("schur", "so_odd", "so_odd_plus", "sp", "so_even", "o_even"))
    c.add_argument("--shape", required=True, help="comma-separated parts, e.g. 2,1 or 3/2,1/2")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--r", required=True, help="power of the vanishing variable")
    c.add_argument("--points", type=int, default=3)
    c.set_defaults(handler=cmd_okada)

    p = sub.add_parser("pfaffian", help="Pfaffian identities at random rational points")
    psub = p.add_subparsers(dest="pf_command", required=True)
    c = psub.add_parser("minor", parents=[common], help="sum of maximal minors as a Pfaffian")
    c.add_argument("--n", default="2,4")
    c.add_argument("--r", default="2..6")
    c.add_argument("--points", type=int, default=5)
    c.set_defaults(handler=cmd_pfaffian)
    c = psub.add_parser("okada", parents=[common], help="Pfaffian of the two-parameter Cauchy-type matrix")
    c.add_argument("--n", default="2,4")
    c.add_argument("--points", type=int, default=5)
    c.set_defaults(handler=cmd_pfaffian)
    c = psub.add_parser("power-minors", parents=[common], help="minor sum of x^(j-a) - eps x^(a-j) as determinants")
    c.add_argument("--n", default="2")
    c.add_argument("--r", default="2..4")
    c.add_argument("--a", default="0,1/2,1")
    c.add_argument("--epsilon", type=int, choices=(-1, 1))
    c.add_argument("--points", type=int, default=5)
    c.set_defaults(handler=cmd_pfaffian)

    p = sub.add_parser("hyper", parents=[common], help="hypergeometric summations and transformations")
    p.add_argument("which", choices=("dixon", "f43sum", "whipple", "watson", "bc", "bc-limit-1", "bc-limit-2"))
    p.add_argument("--param", action="append", metavar="NAME=VALUE",
                   help="fix a parameter (rationals, or monomials such as q^2, -t^3, q^-1/2); others are sampled")
    p.add_argument("--N", default="0..4",
                   help="terminating length: the upper limit m for bc, f = q^-N for the limiting forms")
    p.add_argument("--rank", type=int, default=1, help="rank r of the bc transformation")
    p.add_argument("--t0", help="evaluation point t = q^(1/2); symbolic when omitted")
    p.add_argument("--points", type=int, default=3)
    p.set_defaults(handler=cmd_hyper)

    p = sub.add_parser("limit-check", parents=[common], help="scaled sums against the continuous integral")
    p.add_argument("--alpha", default="2")
    p.add_argument("--gamma", default="1/2")
    p.add_argument("--delta", default="0")
    p.add_argument("--r", default="2")
    p.add_argument("--n", default="4,8,16,32")
    p.add_argument("--tolerance", type=float, default=0.05)
    p.set_defaults(handler=cmd_limit)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.workers < 1:
        parser.error("--workers must be at least 1")
    buffer = io.StringIO()
    out = Emitter(buffer, args.format, timing=not args.no_timing)
    try:
        args.handler(args, out)
    except (UsageError, DomainError) as exc:
        sys.stderr.write(f"mmsums: {exc}\n")
        return 2
    text = buffer.getvalue()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if args.format == "text" and args.command != "catalog" and out.count:
        failed = "" if out.all_equal else " (some checks FAILED)"
        sys.stderr.write(f"{out.count} record(s){failed}\n")
    return 0 if out.all_equal else 1


if __name__ == "__main__":
    raise SystemExit(main())
