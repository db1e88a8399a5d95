"""Command-line entry point: ``spincong <command> [options]``.

Exit status: 0 success, 1 a verification or identity check failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import BACKEND, __version__
from .abacus import abacus_from_bar_partition, render_abacus, validate_bar_core
from .barcomb import (
    BarPartition,
    bar_lengths,
    check_odd_prime,
    enumerate_bar_partitions,
    enumerate_p_bar_cores,
    enumerate_partitions,
)
from .congruence import (
    COUNTERS,
    SOURCES,
    counter_series,
    families_for_source,
    search_congruences,
    verify_families,
)
from .errors import SpinCongError
from .identities import standard_checks
from .spincounts import spin_degree

DEFAULT_ORDER = 1000
DEFAULT_ORDER_CAP = 200_000


class UsageError(Exception):
    pass


def _int_list(text: str) -> list:
    try:
        values = [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise UsageError(f"expected a comma-separated list of integers, got {text!r}")
    if not values:
        raise UsageError("empty list")
    return values


def _bar_partition(text: str) -> BarPartition:
    parts = sorted(_int_list(text), reverse=True)
    try:
        return BarPartition(tuple(parts))
    except ValueError as exc:
        raise UsageError(str(exc))


def _need_p(args, what: str):
    if args.p is None:
        raise UsageError(f"{what} needs --p")
    check_odd_prime(args.p)


def _check_order(args, order: int):
    if order < 0:
        raise UsageError("order must be nonnegative")
    if order > args.order_cap:
        raise UsageError(f"order {order} exceeds --order-cap {args.order_cap}")


def _csv(rows, header) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue().rstrip("\n")


# --- commands -----------------------------------------------------------------------


def cmd_series(args, out) -> int:
    counter = args.function
    if COUNTERS[counter]:
        _need_p(args, f"function {counter}")
    elif args.p is not None:
        raise UsageError(f"function {counter} takes no --p")
    _check_order(args, args.order)
    s = counter_series(counter, args.order, args.p)
    if args.format == "json":
        out.write(s.to_json() + "\n")
    elif args.format == "csv":
        out.write(_csv(enumerate(s.coeffs), ["n", "coeff"]) + "\n")
    else:
        out.write("\n".join(f"{n} {c}" for n, c in enumerate(s.coeffs)) + "\n")
    return 0


def cmd_enumerate(args, out) -> int:
    if args.n < 0:
        raise UsageError("--n must be nonnegative")
    if args.kind == "pbar-core":
        _need_p(args, "kind pbar-core")
        found = enumerate_p_bar_cores(args.n, args.p)
    elif args.p is not None:
        raise UsageError(f"kind {args.kind} takes no --p")
    elif args.kind == "bar":
        found = enumerate_bar_partitions(args.n)
    else:
        found = enumerate_partitions(args.n)
    if args.format == "json":
        out.write(json.dumps([list(lam.parts) for lam in found]) + "\n")
    elif args.format == "csv":
        out.write(_csv(([i, " ".join(map(str, lam.parts))] for i, lam in enumerate(found)), ["index", "parts"]) + "\n")
    else:
        for lam in found:
            out.write(str(lam) + "\n")
        out.write(f"count {len(found)}\n")
    return 0


def cmd_abacus(args, out) -> int:
    _need_p(args, "abacus")
    lam = _bar_partition(args.partition)
    ab = abacus_from_bar_partition(lam, args.p)
    is_core = validate_bar_core(ab)
    if args.format == "json":
        data = ab.to_dict()
        data["partition"] = list(lam.parts)
        data["is_core"] = is_core
        out.write(json.dumps(data) + "\n")
    elif args.format == "csv":
        rows = [[j, " ".join(map(str, r))] for j, r in enumerate(ab.runners)]
        out.write(_csv(rows, ["runner", "positions"]) + "\n")
    else:
        out.write(f"{lam} on the {args.p}-abacus ({'bar-core' if is_core else 'not a bar-core'})\n")
        out.write(render_abacus(ab) + "\n")
    return 0


def cmd_degree(args, out) -> int:
    lam = _bar_partition(args.partition)
    primes = _int_list(args.primes) if args.primes else []
    for q in primes:
        check_odd_prime(q)
    d = spin_degree(lam, primes)
    table = bar_lengths(lam)
    if args.format == "json":
        data = {"partition": list(lam.parts), "degree": d.degree, "bar_lengths": table.to_dict()["rows"]}
        data["defects"] = {str(q): d.defects[q] for q in primes}
        out.write(json.dumps(data) + "\n")
    elif args.format == "csv":
        rows = [[q, d.defects[q]] for q in primes]
        out.write(f"# degree {d.degree}\n" + _csv(rows, ["p", "defect"]) + "\n")
    else:
        out.write(f"{lam}: degree {d.degree}\n")
        for i, row in enumerate(table.rows, 1):
            out.write(f"  row {i}: {' '.join(map(str, row))}\n")
        for q in primes:
            out.write(f"  {q}-defect {d.defects[q]}\n")
    return 0


def cmd_verify(args, out) -> int:
    if args.n_max < 0:
        raise UsageError("--n-max must be nonnegative")
    if args.p is not None:
        check_odd_prime(args.p)
    fams = families_for_source(args.source, args.p)
    need = max((f.index(args.n_max) for f in fams), default=0)
    _check_order(args, need)
    reports = verify_families(fams, args.n_max, jobs=args.jobs)
    if args.format == "csv":
        rows = []
        for r in reports:
            d = r.to_dict()
            rows.append([d["source"], d["counter"], d["p"] or "", d["A"], d["B"], d["M"], d["n_max"], d["holds"], d["counterexample"] if d["counterexample"] is not None else ""])
        out.write(_csv(rows, ["source", "counter", "p", "A", "B", "M", "n_max", "holds", "counterexample"]) + "\n")
    elif args.format == "json":
        for r in reports:
            out.write(json.dumps(r.to_dict()) + "\n")
    else:
        for r in reports:
            status = "holds" if r.holds else f"FAILS at {r.first_counterexample}"
            out.write(f"{r.family.source}: {r.family.describe()} for n <= {r.n_max}: {status}\n")
    return 0 if all(r.holds for r in reports) else 1


def cmd_search(args, out) -> int:
    if COUNTERS[args.counter]:
        _need_p(args, f"counter {args.counter}")
    moduli = _int_list(args.moduli)
    if args.n_max < 50:
        raise UsageError("--n-max must be at least 50")
    if args.A_max < 1:
        raise UsageError("--A-max must be positive")
    if any(m < 2 for m in moduli):
        raise UsageError("moduli must be at least 2")
    _check_order(args, args.A_max * args.n_max + args.A_max - 1)
    found = search_congruences(args.counter, args.A_max, moduli, args.n_max, args.p)
    if args.format == "json":
        out.write(json.dumps([{"M": f.modulus, "A": f.A, "B": f.B} for f in found]) + "\n")
    elif args.format == "csv":
        out.write(_csv(([f.modulus, f.A, f.B] for f in found), ["M", "A", "B"]) + "\n")
    else:
        for f in found:
            out.write(f"candidate: {f.describe()} for n <= {args.n_max}\n")
        out.write(f"count {len(found)}\n")
    return 0


def cmd_identities(args, out) -> int:
    if args.check != "all":
        raise UsageError("only --check all is supported")
    _check_order(args, args.order)
    checks = standard_checks(args.order)
    if args.format == "json":
        for c in checks:
            out.write(json.dumps({"name": c.name, "specialization": c.specialization, "order": c.order, "matches": c.matches}) + "\n")
    elif args.format == "csv":
        out.write(_csv(([c.name, c.specialization, c.order, c.matches] for c in checks), ["name", "specialization", "order", "matches"]) + "\n")
    else:
        for c in checks:
            out.write(c.summary() + "\n")
    return 0 if all(c.matches for c in checks) else 1


# --- parser -------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(2)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    common.add_argument("--quiet", action="store_true", help="suppress the informational header")
    common.add_argument("--order-cap", type=int, default=DEFAULT_ORDER_CAP, help="largest truncation order allowed")

    parser = _Parser(prog="spincong", description="Spin character counts, bar partitions and their congruences.")
    parser.add_argument("--version", action="version", version=f"spincong {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("series", parents=[common], help="coefficients of a generating function")
    p.add_argument("--function", required=True, choices=sorted(COUNTERS))
    p.add_argument("--p", type=int)
    p.add_argument("--order", type=int, default=DEFAULT_ORDER)
    p.set_defaults(run=cmd_series)

    p = sub.add_parser("enumerate", parents=[common], help="list partitions of n")
    p.add_argument("--kind", required=True, choices=("bar", "pbar-core", "partition"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--p", type=int)
    p.set_defaults(run=cmd_enumerate)

    p = sub.add_parser("abacus", parents=[common], help="draw the bar abacus of a bar partition")
    p.add_argument("--partition", required=True, help="parts, e.g. 5,3,2")
    p.add_argument("--p", type=int)
    p.set_defaults(run=cmd_abacus)

    p = sub.add_parser("degree", parents=[common], help="spin degree and p-defects")
    p.add_argument("--partition", required=True)
    p.add_argument("--primes", default="", help="odd primes, e.g. 3,5,7")
    p.set_defaults(run=cmd_degree)

    p = sub.add_parser("verify", parents=[common], help="check congruence families")
    p.add_argument("--source", required=True, choices=sorted(SOURCES) + ["all"])
    p.add_argument("--p", type=int)
    p.add_argument("--n-max", type=int, default=200)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(run=cmd_verify)

    p = sub.add_parser("search", parents=[common], help="look for candidate vanishing progressions")
    p.add_argument("--counter", required=True, choices=sorted(COUNTERS))
    p.add_argument("--A-max", dest="A_max", type=int, default=25)
    p.add_argument("--moduli", default="2,3")
    p.add_argument("--n-max", type=int, default=50)
    p.add_argument("--p", type=int)
    p.set_defaults(run=cmd_search)

    p = sub.add_parser("identities", parents=[common], help="check product/sum identities")
    p.add_argument("--check", default="all")
    p.add_argument("--order", type=int, default=200)
    p.set_defaults(run=cmd_identities)
    return parser


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if not args.quiet:
        sys.stderr.write(f"# spincong {__version__} ({BACKEND} kernels)\n")
    try:
        return args.run(args, out)
    except (UsageError, SpinCongError, ValueError) as exc:
        sys.stderr.write(f"spincong: error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
