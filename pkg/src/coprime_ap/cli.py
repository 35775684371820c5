"""Command-line interface.

Usage:
    coprime-ap f 13
    coprime-ap bounds 360 --exact
    coprime-ap witness 45
    coprime-ap table 12 16
    coprime-ap verify --max 500
    coprime-ap threshold 3 --empirical
    coprime-ap sweep 2 100 --format csv --cache results.csv
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Callable, Sequence

from . import __version__
from .arith import factorize
from .bounds import BoundsReport, bounds_report, guaranteed_threshold, minimal_threshold, verify_range
from .errors import ConsistencyError, DomainError, ResourceError
from .records import OutputRecord, ResultCache, csv_header
from .rrs import ApWitness, exact_f, residue_system, witness_general

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DOMAIN = 3
EXIT_RESOURCE = 4
EXIT_VERIFY = 5
EXIT_INTERNAL = 6

FORMATS = ("text", "csv", "jsonl")

log = logging.getLogger("coprime_ap")


class UsageError(Exception):
    pass


def _emit(records: list[OutputRecord] | OutputRecord, fmt: str, out) -> None:
    if isinstance(records, OutputRecord):
        records = [records]
    if fmt == "csv":
        out.write(csv_header() + "\n")
    for rec in records:
        out.write({"csv": rec.to_csv, "jsonl": rec.to_json, "text": rec.to_text}[fmt]() + "\n")


def _full_record(n: int, with_exact: bool = True, report: BoundsReport | None = None) -> OutputRecord:
    report = report or bounds_report(n, with_exact=with_exact)
    phi = factorize(n).totient
    if report.witness is None:
        return OutputRecord(n, report.lower, report.upper, phi=phi)
    return OutputRecord.from_witness(report.witness, report.lower, report.upper, phi)


def _format_terms(w: ApWitness, shown: int = 12) -> str:
    if w.length <= shown:
        return ", ".join(map(str, w.terms()))
    head = ", ".join(str(w.first + m * w.difference) for m in range(shown - 1))
    return f"{head}, ..., {w.last}"


def cmd_f(args, out) -> int:
    rec = _full_record(args.n)
    if args.format == "text":
        if args.quiet:
            out.write(f"{rec.f}\n")
        else:
            first, diff, length = rec.witness
            out.write(f"f({rec.n}) = {rec.f}\n")
            out.write(f"witness: first={first} diff={diff} len={length}\n")
    else:
        _emit(rec, args.format, out)
    return EXIT_OK


def cmd_bounds(args, out) -> int:
    report = bounds_report(args.n, with_exact=args.exact)
    rec = _full_record(args.n, report=report)
    if args.format != "text":
        _emit(rec, args.format, out)
        return EXIT_OK
    out.write(f"n = {report.n}  p = {report.largest_prime}  P = {report.radical}\n")
    out.write(f"lower = {report.lower}\n")
    if report.exact is not None:
        out.write(f"f(n)  = {report.exact}\n")
    out.write(f"upper = {report.upper}\n")
    return EXIT_OK


def cmd_witness(args, out) -> int:
    w = exact_f(args.n) if args.exact else witness_general(args.n)
    report = bounds_report(args.n)
    if args.format != "text":
        _emit(OutputRecord(w.n, report.lower, report.upper, witness=w.as_triple()), args.format, out)
        return EXIT_OK
    kind = "maximal" if args.exact else "constructive"
    out.write(f"{kind} witness for n={w.n}: first={w.first} diff={w.difference} len={w.length}\n")
    if not args.quiet:
        out.write(f"terms: {_format_terms(w)}\n")
    return EXIT_OK


def render_residues(n: int, list_limit: int) -> str:
    elements = residue_system(n).elements
    if n <= list_limit:
        return "{" + ", ".join(map(str, elements)) + "}"
    head = ", ".join(map(str, elements[:8]))
    return "{" + head + ", ...} (" + str(len(elements)) + " elements)"


def cmd_table(args, out) -> int:
    if args.start < 2 or args.stop < args.start:
        raise DomainError(f"need 2 <= from <= to, got {args.start} {args.stop}")
    if args.stop - args.start + 1 > args.max_rows:
        raise UsageError(
            f"table is limited to {args.max_rows} rows; use `sweep {args.start} {args.stop}` instead"
        )
    rows = [(str(n), render_residues(n, args.list_limit), str(exact_f(n).length))
            for n in range(args.start, args.stop + 1)]
    w0 = max(len("n"), *(len(r[0]) for r in rows))
    w1 = max(len("A(n)"), *(len(r[1]) for r in rows))
    out.write(f"{'n':>{w0}}  {'A(n)':<{w1}}  f(n)\n")
    for n, listing, f in rows:
        out.write(f"{n:>{w0}}  {listing:<{w1}}  {f}\n")
    return EXIT_OK


def _compact(values: list[int], limit: int = 30) -> str:
    shown = ", ".join(map(str, values[:limit]))
    return shown + (f", ... ({len(values)} total)" if len(values) > limit else "")


def cmd_verify(args, out) -> int:
    summary = verify_range(2, args.max, workers=args.workers)
    out.write(f"checked {summary.checked} values of n in [2, {args.max}]\n")
    out.write(f"violations: {len(summary.violations)}\n")
    if not args.quiet:
        out.write(f"lower bound tight: {len(summary.tight_lower)} [{_compact(summary.tight_lower)}]\n")
        out.write(f"upper bound tight: {len(summary.tight_upper)} [{_compact(summary.tight_upper)}]\n")
    if summary.violations:
        print(f"sandwich violated at n = {_compact(summary.violations)}", file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


def cmd_threshold(args, out) -> int:
    rec = minimal_threshold(args.k) if args.empirical else guaranteed_threshold(args.k)
    if args.format == "jsonl":
        obj = {"k": rec.k, "primorial": rec.primorial, "guaranteed": rec.guaranteed}
        if args.empirical:
            obj.update(minimal=rec.minimal, last_failing=rec.last_failing)
        out.write(json.dumps(obj) + "\n")
        return EXIT_OK
    out.write(f"k = {rec.k}\n")
    out.write(f"P_{2 * rec.k} = {rec.primorial}\n")
    out.write(f"n_{rec.k} = {rec.guaranteed}\n")
    if args.empirical:
        last = "none" if rec.last_failing is None else str(rec.last_failing)
        out.write(f"minimal = {rec.minimal}  (artifact extension: exhaustive scan up to n_{rec.k})\n")
        out.write(f"last_failing = {last}\n")
    return EXIT_OK


def cmd_sweep(args, out) -> int:
    if args.start < 2 or args.stop < args.start:
        raise DomainError(f"need 2 <= from <= to, got {args.start} {args.stop}")
    cache = ResultCache.from_env(args.cache)
    if args.format == "csv":
        out.write(csv_header() + "\n")
    fmt = {"csv": OutputRecord.to_csv, "jsonl": OutputRecord.to_json, "text": OutputRecord.to_text}[args.format]
    for n in range(args.start, args.stop + 1):
        report = bounds_report(n)
        w = cache.get(n) if cache is not None else None
        if w is None:
            w = exact_f(n)
            if cache is not None:
                cache.put(w)
        out.write(fmt(OutputRecord.from_witness(w, report.lower, report.upper)) + "\n")
    if cache is not None:
        cache.save()
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=argparse.SUPPRESS)
    common.add_argument("--quiet", "-q", action="store_true", default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(
        prog="coprime-ap",
        description="Longest arithmetic progressions among the integers below n coprime to n.",
        parents=[common],
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, handler: Callable, help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help, parents=[common])
        p.set_defaults(handler=handler)
        return p

    p = add("f", cmd_f, "exact f(n) with a witness")
    p.add_argument("n", type=int)

    p = add("bounds", cmd_bounds, "closed-form lower/upper bounds on f(n)")
    p.add_argument("n", type=int)
    p.add_argument("--exact", action="store_true", help="also compute f(n)")

    p = add("witness", cmd_witness, "constructive progression certifying a lower bound")
    p.add_argument("n", type=int)
    p.add_argument("--exact", action="store_true", help="show a maximal witness instead")

    p = add("table", cmd_table, "rows of n, A(n), f(n)")
    p.add_argument("start", metavar="from", type=int)
    p.add_argument("stop", metavar="to", type=int)
    p.add_argument("--max-rows", type=int, default=200)
    p.add_argument("--list-limit", type=int, default=64, help="list A(n) in full only for n up to this")

    p = add("verify", cmd_verify, "check lower <= f(n) <= upper for 2 <= n <= max")
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--workers", type=int, default=1)

    p = add("threshold", cmd_threshold, "guaranteed threshold k * primorial(2k)")
    p.add_argument("k", type=int)
    p.add_argument("--empirical", action="store_true", help="also scan for the least working threshold")

    p = add("sweep", cmd_sweep, "stream one record per n")
    p.add_argument("start", metavar="from", type=int)
    p.add_argument("stop", metavar="to", type=int)
    p.add_argument("--cache", default=None, help="cache CSV path (overrides $COPRIME_AP_CACHE)")
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    args.format = getattr(args, "format", "text")
    args.quiet = getattr(args, "quiet", False)
    logging.basicConfig(level=logging.ERROR if args.quiet else logging.WARNING, format="%(levelname)s: %(message)s")
    try:
        return args.handler(args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ResourceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except ConsistencyError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
