"""Command-line surface: gen, verify, analyze, diffset, dioph.

Exit codes follow one discipline across subcommands: 0 success, 1 a
verification suite failed, 2 usage error, 3 runtime error (overflow, I/O,
malformed input). Data goes to files, human summaries to stdout, timing to
stderr, so pipelines can consume stdout without scraping around the clock.
"""

from __future__ import annotations

import argparse
import sys
import time
from typing import Sequence as SequenceArg

from .analysis import bound_checks, diffset_report, diffset_sweep, growth_stats, plateaus
from .csvio import (
    read_terms_csv,
    write_diffset_csv,
    write_plateau_csv,
    write_ratio_csv,
    write_solutions_csv,
    write_terms_csv,
)
from .numtheory import MAX_EXPONENT_CAP, SearchBounds, solve_quadratic_pow2, solve_square_plus_d
from .sequence import Seed, generate
from .verify import FAIL, run_suites

VERIFY_N_CAP = 5000  # the quadratic suites get unpleasant past this
DIFFSET_M_CAP = 5000


def main(argv: SequenceArg[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OverflowError, OSError) as exc:
        print(f"hofsum: error: {exc}", file=sys.stderr)
        return 3


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hofsum",
        description="Generate, verify, and analyze the Hofstadter consecutive-sum sequence.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate terms and write the n,a_n,b_n CSV")
    gen.add_argument("--seed", default="1,2", metavar="A1,A2[,...]")
    gen.add_argument("--n", type=int, default=30000, help="number of terms (default 30000)")
    gen.add_argument("--out", required=True, help="terms CSV path")
    gen.set_defaults(func=cmd_gen, parser=gen)

    ver = sub.add_parser("verify", help="run the property suites and report per-suite status")
    ver.add_argument("--seed", default="1,2", metavar="A1,A2[,...]")
    ver.add_argument("--n", type=int, default=2000, help="number of terms (default 2000)")
    ver.set_defaults(func=cmd_verify, parser=ver)

    ana = sub.add_parser(
        "analyze", help="plateau table, growth ratios, and bound checks; writes the ratio CSV"
    )
    ana.add_argument("--seed", default=None, metavar="A1,A2[,...]")
    src = ana.add_mutually_exclusive_group()
    src.add_argument("--n", type=int, default=30000, help="number of terms (default 30000)")
    src.add_argument("--in", dest="in_path", metavar="CSV", help="analyze an exported terms CSV")
    ana.add_argument("--out", required=True, help="ratio CSV path")
    ana.add_argument("--plateau-out", dest="plateau_out", metavar="CSV")
    ana.set_defaults(func=cmd_analyze, parser=ana)

    dif = sub.add_parser("diffset", help="difference-set census: one row, or a sweep with --out")
    dif.add_argument("--seed", default="1,2", metavar="A1,A2[,...]")
    dif.add_argument("--m", type=int, required=True, help="prefix length to census")
    dif.add_argument("--n", type=int, default=None, help="terms to generate (default: m)")
    dif.add_argument("--out", help="write the full m=2..M sweep CSV here")
    dif.set_defaults(func=cmd_diffset, parser=dif)

    dio = sub.add_parser("dioph", help="exponential Diophantine scans")
    which = dio.add_mutually_exclusive_group(required=True)
    which.add_argument("--quad", type=int, metavar="E", help="solve v^2 + v + E = 2^k")
    which.add_argument("--square", type=int, metavar="D", help="solve x^2 + D = 2^m")
    dio.add_argument("--max-exp", type=int, default=64, help="exponent ceiling (default 64)")
    dio.add_argument("--max-root", type=int, default=10**12, help="|root| ceiling")
    dio.add_argument("--out", help="solutions CSV path (default: print)")
    dio.set_defaults(func=cmd_dioph, parser=dio)

    return parser


def _parse_seed(text: str, parser: argparse.ArgumentParser) -> Seed:
    try:
        return Seed(tuple(int(part) for part in text.split(",")))
    except (ValueError, OverflowError) as exc:
        parser.error(f"--seed: {exc}")
        raise AssertionError("unreachable")


def cmd_gen(args: argparse.Namespace) -> int:
    seed = _parse_seed(args.seed, args.parser)
    if args.n < len(seed):
        args.parser.error(f"--n must be >= the seed length {len(seed)}")
    start = time.perf_counter()
    state = generate(seed, args.n)
    write_terms_csv(args.out, state)
    elapsed = time.perf_counter() - start
    print(
        f"n={state.n} first={state.terms[0]} last={state.terms[-1]}"
        f" b_n={state.b[-1]} -> {args.out}"
    )
    print(f"gen: {elapsed:.3f}s", file=sys.stderr)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    seed = _parse_seed(args.seed, args.parser)
    floor = max(3, len(seed))
    if not floor <= args.n <= VERIFY_N_CAP:
        args.parser.error(f"--n must lie in {floor}..{VERIFY_N_CAP}")
    start = time.perf_counter()
    results = run_suites(seed, args.n)
    for r in results:
        print(f"{r.name}: {r.status} ({r.detail})")
    print(f"verify: {time.perf_counter() - start:.3f}s", file=sys.stderr)
    failures = sum(1 for r in results if r.status == FAIL)
    if failures:
        print(f"{failures} suite(s) failed", file=sys.stderr)
        return 1
    return 0


def cmd_analyze(args: argparse.Namespace) -> int:
    start = time.perf_counter()
    if args.in_path is not None:
        declared = _parse_seed(args.seed, args.parser) if args.seed else None
        state = read_terms_csv(args.in_path, declared)
    else:
        seed = _parse_seed(args.seed or "1,2", args.parser)
        if args.n < max(3, len(seed)):
            args.parser.error(f"--n must be >= max(3, seed length {len(seed)})")
        state = generate(seed, args.n)
    records = plateaus(state)
    stats = growth_stats(state)
    bounds = bound_checks(state)
    write_ratio_csv(args.out, state, stats)
    if args.plateau_out:
        write_plateau_csv(args.plateau_out, records)
    print(
        f"n={state.n} plateaus={len(records)}"
        f" alpha_fit={stats.alpha_fit:.6f} (log-log fit over n={stats.fit_lo}..{stats.fit_hi})"
    )
    print(
        f"lower-bound offset max {bounds.lower_offset_max:.6f} at n={bounds.lower_offset_argmax};"
        f" upper-bound ratio max {bounds.upper_ratio_max:.6f} at n={bounds.upper_ratio_argmax}"
    )
    out_line = f"ratio table -> {args.out}"
    if args.plateau_out:
        out_line += f"; plateau table -> {args.plateau_out}"
    print(out_line)
    print(f"analyze: {time.perf_counter() - start:.3f}s", file=sys.stderr)
    return 0


def cmd_diffset(args: argparse.Namespace) -> int:
    seed = _parse_seed(args.seed, args.parser)
    if not 2 <= args.m <= DIFFSET_M_CAP:
        args.parser.error(f"--m must lie in 2..{DIFFSET_M_CAP}")
    n = args.n if args.n is not None else args.m
    if n < max(args.m, len(seed)):
        args.parser.error(f"--n must be >= max(m, seed length), got {n}")
    start = time.perf_counter()
    state = generate(seed, n)
    if args.out:
        reports = diffset_sweep(state, args.m)
        write_diffset_csv(args.out, reports)
        print(f"m=2..{args.m}: {len(reports)} rows -> {args.out}")
    else:
        rep = diffset_report(state, args.m)
        print(f"{rep.m},{rep.d_size},{rep.r_size},{rep.exponent!r}")
    print(f"diffset: {time.perf_counter() - start:.3f}s", file=sys.stderr)
    return 0


def cmd_dioph(args: argparse.Namespace) -> int:
    if not 1 <= args.max_exp <= MAX_EXPONENT_CAP:
        args.parser.error(f"--max-exp must lie in 1..{MAX_EXPONENT_CAP}")
    if args.max_root < 1:
        args.parser.error("--max-root must be >= 1")
    bounds = SearchBounds(max_exponent=args.max_exp, max_root_abs=args.max_root)
    start = time.perf_counter()
    if args.quad is not None:
        solutions = solve_quadratic_pow2(args.quad, bounds)
        label = f"v^2 + v + {args.quad} = 2^k"
    else:
        solutions = solve_square_plus_d(args.square, bounds)
        label = f"x^2 + {args.square} = 2^m"
    if args.out:
        write_solutions_csv(args.out, solutions)
        print(f"{label}: {len(solutions)} solutions -> {args.out}")
    else:
        print(f"{label}: {len(solutions)} solutions")
        for s in solutions:
            print(f"  root={s.root} exponent={s.exponent} beukers_ok={s.beukers_ok}")
    print(f"dioph: {time.perf_counter() - start:.3f}s", file=sys.stderr)
    return 0
