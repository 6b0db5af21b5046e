"""Command-line front end: ``menage count|table|verify|enumerate|bench``.

Exit status is 0 on success, 1 when a verification fails and 2 for usage
or domain errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from collections import Counter
from dataclasses import dataclass, field
from typing import List, Optional, Sequence

from . import core, oracles, verify
from .core import DomainError, to_decimal

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

# values longer than this are summarised in the bench report
_BENCH_MAX_PRINT_DIGITS = 60


@dataclass
class OutputRecord:
    n: int
    tait: int
    menage: int
    terms: Optional[List[core.TouchardTerm]] = field(default=None)

    def to_dict(self) -> dict:
        out = {"n": self.n, "tait": to_decimal(self.tait), "menage": to_decimal(self.menage)}
        if self.terms is not None:
            out["terms"] = [
                {
                    "r": str(t.r),
                    "d_r": to_decimal(t.domino_count),
                    "sign": str(t.sign),
                    "tail_factorial": to_decimal(t.tail_factorial),
                    "term": to_decimal(t.term_value),
                }
                for t in self.terms
            ]
        return out


def records(start: int, stop: int, include_terms: bool = False):
    """OutputRecords for n = start..stop, built from the incremental sequence."""
    if start < 2:
        raise DomainError(f"table needs from >= 2 (got {start})")
    if stop < start:
        raise DomainError(f"table needs from <= to (got {start} > {stop})")
    return _records(start, stop, include_terms)


def _records(start: int, stop: int, include_terms: bool):
    fact = core.factorial(start)
    for n, tait in core.tait_sequence(stop, start):
        terms = list(core.touchard_breakdown(n).terms) if include_terms else None
        yield OutputRecord(n, tait, 2 * fact * tait, terms)
        fact *= n + 1


# -- subcommands --------------------------------------------------------------


def cmd_count(args, out) -> int:
    if args.kind == "dominos":
        if args.r is None:
            raise DomainError("count dominos needs both m and r")
        value = core.domino_count(args.value, args.r)
    else:
        if args.r is not None:
            raise DomainError(f"count {args.kind} takes a single n")
        fn = core.menage_count if args.kind == "menage" else core.tait_count
        value = fn(args.value)
    print(to_decimal(value), file=out)
    return EXIT_OK


def _write_text(recs, out) -> None:
    rows = [r.to_dict() for r in recs]
    w_n = max([1] + [len(str(r["n"])) for r in rows])
    w_t = max([4] + [len(r["tait"]) for r in rows])
    print(f"{'n':>{w_n}}  {'tait':>{w_t}}  menage", file=out)
    for r in rows:
        print(f"{r['n']:>{w_n}}  {r['tait']:>{w_t}}  {r['menage']}", file=out)
        for t in r.get("terms", []):
            print(
                f"{'':>{w_n}}    r={t['r']} d_r={t['d_r']} sign={t['sign']}"
                f" tail_factorial={t['tail_factorial']} term={t['term']}",
                file=out,
            )


def cmd_table(args, out) -> int:
    if args.format == "csv" and args.terms:
        raise DomainError("--terms is not available with --format csv")
    recs = records(args.start, args.stop, args.terms)
    if args.format == "json":
        json.dump([r.to_dict() for r in recs], out, indent=2)
        out.write("\n")
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["n", "tait", "menage"])
        for r in recs:
            d = r.to_dict()
            writer.writerow([d["n"], d["tait"], d["menage"]])
        out.write(buf.getvalue())
    else:
        _write_text(recs, out)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    checks, warnings = verify.run(args.max_n, args.suite)
    for w in warnings:
        print(w, file=sys.stderr)
    for c in checks:
        line = f"{'PASS' if c.passed else 'FAIL'}  {c.name}"
        if not c.passed:
            line += f"  ({c.detail})"
        print(line, file=out)
    failed = sum(not c.passed for c in checks)
    print(f"{len(checks) - failed}/{len(checks)} checks passed", file=out)
    return EXIT_FAILED if failed else EXIT_OK


def _fmt_seating(s) -> str:
    return "[" + ",".join(f"({p.couple_id},{p.font})" for p in s) + "]"


def _fmt_ints(xs) -> str:
    return "[" + ",".join(str(x) for x in xs) + "]"


def cmd_enumerate(args, out) -> int:
    if args.what == "placements":
        items = (_fmt_ints(p.starts) for p in oracles.enumerate_domino_placements(args.m, args.r))
    elif args.what == "permutations":
        items = (_fmt_ints(p) for p in oracles.enumerate_permutations(args.n, args.discordant))
    else:
        items = (_fmt_seating(s) for s in oracles.enumerate_seatings(args.n, args.valid))
    for line in items:
        out.write(line + "\n")
    return EXIT_OK


def _fmt_ops(ops: Counter) -> str:
    return " ".join(f"{k}={ops[k]}" for k in sorted(ops))


def cmd_bench(args, out) -> int:
    n = args.n
    inc_ops: Counter = Counter()
    direct_ops: Counter = Counter()
    t0 = time.perf_counter()
    inc = core.tait_count_incremental(n, inc_ops)
    t1 = time.perf_counter()
    direct = core.tait_count_direct(n, direct_ops)
    t2 = time.perf_counter()
    if inc != direct:
        print(f"error: incremental and direct evaluation disagree at n={n}", file=sys.stderr)
        return EXIT_FAILED
    digits = to_decimal(inc)
    shown = digits if len(digits) <= _BENCH_MAX_PRINT_DIGITS else f"<{len(digits)} digits>"
    print(f"n={n} tait={shown}", file=out)
    print("paths agree", file=out)
    print(f"incremental ops: {_fmt_ops(inc_ops)}", file=out)
    print(f"direct ops: {_fmt_ops(direct_ops)}", file=out)
    # wall times are not deterministic, keep them off stdout
    print(f"incremental time: {t1 - t0:.6f} s", file=sys.stderr)
    print(f"direct time: {t2 - t1:.6f} s", file=sys.stderr)
    return EXIT_OK


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="menage", description="Exact menage numbers and the counts behind them."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="print one exact count")
    p.add_argument("kind", choices=["menage", "tait", "dominos"])
    p.add_argument("value", type=int, metavar="N_OR_M")
    p.add_argument("r", type=int, nargs="?", help="domino count (dominos only)")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("table", help="tabulate tait and menage counts for a range of n")
    p.add_argument("start", type=int, metavar="FROM")
    p.add_argument("stop", type=int, metavar="TO")
    p.add_argument("format", nargs="?", choices=["text", "csv", "json"], default=None)
    p.add_argument("--format", dest="format_opt", choices=["text", "csv", "json"])
    p.add_argument("--terms", action="store_true", help="include the per-r breakdown")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="run invariant suites against the brute-force oracles")
    p.add_argument("max_n", type=int)
    p.add_argument("suite", nargs="?", default="all", choices=[*verify.SUITES, "all"])
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", help="list witness objects, one per line")
    what = p.add_subparsers(dest="what", required=True)
    q = what.add_parser("placements")
    q.add_argument("m", type=int)
    q.add_argument("r", type=int)
    q = what.add_parser("permutations")
    q.add_argument("n", type=int)
    q.add_argument("--discordant", action="store_true")
    q = what.add_parser("seatings")
    q.add_argument("n", type=int)
    q.add_argument("--valid", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("bench", help="time incremental against direct evaluation")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    if args.command == "table":
        if args.format and args.format_opt and args.format != args.format_opt:
            print("menage: error: conflicting table formats", file=sys.stderr)
            return EXIT_USAGE
        args.format = args.format or args.format_opt or "text"
    try:
        return args.func(args, out)
    except DomainError as exc:
        print(f"menage: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
