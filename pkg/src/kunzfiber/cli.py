"""Command-line front end.

Exit codes: 0 success, 2 usage or configuration error, 3 validation mismatch.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import os
import sys
from dataclasses import dataclass
from typing import Optional, Sequence

from . import oracle
from .counting import count_records, n_g, records_to_csv, records_to_jsonl
from .fiber import build_fiber_system, enumerate_fiber, fiber_lattice_points, points_csv
from .semigroup import SemigroupError, format_gaps, format_generators, parse_semigroup
from .validate import run_all

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_MISMATCH = 3


@dataclass
class CliConfig:
    output_format: str = "table"
    max_genus: int = oracle.DEFAULT_MAX_GENUS
    oracle_check: bool = False
    cache_dir: Optional[str] = None
    threads: int = 1


class UsageError(Exception):
    pass


def _emit_rows(header: Sequence[str], rows: Sequence[Sequence], fmt: str, out) -> None:
    if fmt == "csv":
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(["" if v is None else v for v in row] for row in rows)
    elif fmt == "json":
        for row in rows:
            out.write(json.dumps(dict(zip(header, row)), sort_keys=True) + "\n")
    else:
        cells = [list(map(str, header))] + [["-" if v is None else str(v) for v in r] for r in rows]
        widths = [max(len(c[i]) for c in cells) for i in range(len(header))]
        for c in cells:
            out.write("  ".join(v.rjust(w) for v, w in zip(c, widths)).rstrip() + "\n")


def cmd_count_ng(max_g: int, config: CliConfig, out=None) -> int:
    out = out or sys.stdout
    if max_g < 0:
        raise UsageError("--max-g must be nonnegative")
    if config.oracle_check and max_g > config.max_genus:
        raise UsageError(f"--max-g {max_g} exceeds oracle depth cap {config.max_genus}")
    rows = []
    mismatch = None
    for g in range(max_g + 1):
        value = n_g(g, config.threads)
        if config.oracle_check:
            ref = len(oracle.enumerate_genus(g, config.max_genus, config.cache_dir))
            rows.append((g, value, ref))
            if value != ref and mismatch is None:
                mismatch = (g, value, ref)
        else:
            rows.append((g, value))
    header = ["g", "n_g"] + (["oracle_n_g"] if config.oracle_check else [])
    _emit_rows(header, rows, config.output_format, out)
    if mismatch:
        g, a, b = mismatch
        print(f"MISMATCH at g={g}: kunz+fiber {a} != oracle {b}", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_ngamma(gamma: int, g_range: range, m: Optional[int], by_m: bool,
               config: CliConfig, out=None) -> int:
    out = out or sys.stdout
    if gamma < 0:
        raise UsageError("--gamma must be nonnegative")
    if m is not None and (gamma < 1 or not 2 <= m <= gamma + 1):
        raise UsageError("--m must lie in [2, gamma+1] for gamma >= 1")
    recs = count_records(gamma, g_range, by_m=by_m, m=m, workers=config.threads)
    if config.output_format == "csv":
        out.write(records_to_csv(recs))
    elif config.output_format == "json":
        out.write(records_to_jsonl(recs))
    else:
        _emit_rows(["gamma", "m", "g", "count"], [(r.gamma, r.m, r.g, r.count) for r in recs],
                   "table", out)
    return EXIT_OK


def cmd_fiber(T_spec: str, g: int, mode: str, config: CliConfig, out=None) -> int:
    out = out or sys.stdout
    try:
        T = parse_semigroup(T_spec)
    except SemigroupError as exc:
        raise UsageError(str(exc)) from exc
    if mode == "list":
        for S in enumerate_fiber(T, g):
            out.write(format_generators(S) + "\n")
        return EXIT_OK
    if T.genus == 0:
        raise UsageError("base is N_0: its fiber is <2, 2g+1>; use --list")
    if mode == "dump-system":
        out.write(build_fiber_system(T, g).system.dumps() + "\n")
    else:
        out.write(points_csv(fiber_lattice_points(T, g), T.multiplicity))
    return EXIT_OK


def cmd_validate(max_g: int, max_gamma: int, config: CliConfig, out=None) -> int:
    out = out or sys.stdout
    if max_g < 0 or max_gamma < 0:
        raise UsageError("bounds must be nonnegative")
    if max_g > config.max_genus or max_gamma > config.max_genus:
        raise UsageError(f"bounds exceed oracle depth cap {config.max_genus}")
    results = run_all(max_g, max_gamma, config.threads)
    for r in results:
        out.write(r.line() + "\n")
    ok = all(r.passed for r in results)
    out.write(("all checks passed" if ok else "VALIDATION FAILED") + "\n")
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_tree(g: int, show_gaps: bool, config: CliConfig, out=None) -> int:
    out = out or sys.stdout
    try:
        level = oracle.enumerate_genus(g, config.max_genus, config.cache_dir)
    except oracle.OracleDepthError as exc:
        raise UsageError(str(exc)) from exc
    rows = [(format_generators(S), format_gaps(S), S.multiplicity, S.frobenius) for S in level]
    if not show_gaps:
        rows = [(r[0], r[2], r[3]) for r in rows]
        header = ["generators", "m", "frobenius"]
    else:
        header = ["generators", "gaps", "m", "frobenius"]
    _emit_rows(header, rows, config.output_format, out)
    return EXIT_OK


def _g_range(text: str) -> range:
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return range(int(lo), int(hi) + 1)
        v = int(text)
        return range(v, v + 1)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected G or LO..HI, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "csv", "json"), default="table")
    common.add_argument("--threads", type=int, default=1, help="worker processes for counting")
    common.add_argument("--max-genus", type=int, default=oracle.DEFAULT_MAX_GENUS,
                        help="oracle depth cap")
    common.add_argument("--cache-dir", default=os.environ.get(oracle.CACHE_ENV),
                        help=f"oracle level cache (default ${oracle.CACHE_ENV})")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(
        prog="kunzfiber",
        description="Count numerical semigroups by genus and even gaps via Kunz polytopes.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", parents=[common], help="table of n_g")
    p.add_argument("--max-g", type=int, required=True)
    p.add_argument("--oracle-check", action="store_true",
                   help="compare against the semigroup tree; exit 3 on mismatch")

    p = sub.add_parser("ngamma", parents=[common], help="N_gamma(g) or N^m_gamma(g)")
    p.add_argument("--gamma", type=int, required=True)
    p.add_argument("--g", dest="g_range", type=_g_range, required=True, metavar="G|LO..HI")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--m", type=int)
    group.add_argument("--by-m", action="store_true", help="one row per multiplicity of S/2")

    p = sub.add_parser("fiber", parents=[common], help="semigroups S of genus g with S/2 = T")
    p.add_argument("T", help='generators "2,5" or gap set "{1,3}"')
    p.add_argument("--g", type=int, required=True)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--list", dest="mode", action="store_const", const="list")
    mode.add_argument("--points", dest="mode", action="store_const", const="points")
    mode.add_argument("--dump-system", dest="mode", action="store_const", const="dump-system")

    p = sub.add_parser("validate", parents=[common], help="cross-check every route")
    p.add_argument("--max-g", type=int, default=12)
    p.add_argument("--max-gamma", type=int, default=6)

    p = sub.add_parser("tree", parents=[common], help="oracle listing of one genus")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--gaps", action="store_true", help="include gap sets")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    if args.threads < 1:
        parser.error("--threads must be at least 1")
    config = CliConfig(output_format=args.format, max_genus=args.max_genus,
                       oracle_check=getattr(args, "oracle_check", False),
                       cache_dir=args.cache_dir, threads=args.threads)
    try:
        if args.command == "count":
            return cmd_count_ng(args.max_g, config)
        if args.command == "ngamma":
            return cmd_ngamma(args.gamma, args.g_range, args.m, args.by_m, config)
        if args.command == "fiber":
            return cmd_fiber(args.T, args.g, args.mode or "list", config)
        if args.command == "validate":
            return cmd_validate(args.max_g, args.max_gamma, config)
        if args.command == "tree":
            return cmd_tree(args.g, args.gaps, config)
    except UsageError as exc:
        print(f"kunzfiber: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
