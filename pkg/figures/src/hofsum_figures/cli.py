"""hofsum-plot: ratio CSV in, five-panel figure out."""

from __future__ import annotations

import argparse
import sys
import time

from .ratios import load_ratio_table
from .render import render


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hofsum-plot",
        description="Render the defect and ratio panels from a ratio table CSV.",
    )
    parser.add_argument("--in", dest="in_path", required=True, help="ratio CSV (n,b_n,r2,r3,r4,r5)")
    parser.add_argument("--out", dest="out_path", required=True, help="figure path (.png or .svg)")
    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    start = time.perf_counter()
    try:
        table = load_ratio_table(args.in_path)
        render(table, args.out_path)
    except (ValueError, OSError) as exc:
        print(f"hofsum-plot: error: {exc}", file=sys.stderr)
        return 3
    print(f"plot: {time.perf_counter() - start:.3f}s", file=sys.stderr)
    print(f"n={table.n[-1]} rows={len(table)} -> {args.out_path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
