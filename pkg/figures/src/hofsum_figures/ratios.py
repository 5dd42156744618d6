"""Parsing and trend classification for the ratio table.

The only contract with the generating side is the CSV schema
`n,b_n,r2,r3,r4,r5` where rk = b_n / n^(1/k). Everything here re-derives what
it needs from those six columns; nothing imports the generator.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass

RATIO_HEADER = ("n", "b_n", "r2", "r3", "r4", "r5")

# A ratio column read back from disk must agree with b_n / n^(1/k) recomputed
# from the integer columns. repr() round-trips floats exactly, so the slack
# only absorbs a writer that formatted instead of repr'd.
REL_TOL = 1e-9

# Relative gap between first- and last-decile means below which a series is
# called flat rather than drifting.
FLAT_BAND = 0.05

RATIO_KS = (2, 3, 4, 5)


class RatioTableError(ValueError):
    """The CSV is not a well-formed ratio table; message carries the row."""


@dataclass(frozen=True)
class RatioTable:
    n: list[int]
    b: list[int]
    r2: list[float]
    r3: list[float]
    r4: list[float]
    r5: list[float]

    def __len__(self) -> int:
        return len(self.n)

    def ratio_series(self, k: int) -> list[float]:
        if k not in RATIO_KS:
            raise ValueError(f"no ratio column for k={k}")
        return getattr(self, f"r{k}")


def _parse_int(field: str, row: int, name: str) -> int:
    try:
        return int(field)
    except ValueError:
        raise RatioTableError(f"row {row}: {name} must be an integer, got {field!r}") from None


def _parse_float(field: str, row: int, name: str) -> float:
    try:
        value = float(field)
    except ValueError:
        raise RatioTableError(f"row {row}: {name} must be a float, got {field!r}") from None
    if not math.isfinite(value):
        raise RatioTableError(f"row {row}: {name} must be finite, got {field!r}")
    return value


def load_ratio_table(path) -> RatioTable:
    """Read and validate a ratio CSV.

    Rejects, with the offending row number: a missing or wrong header, short
    or long rows, non-numeric fields, non-increasing n, nonpositive n,
    and any rk column that disagrees with b_n / n^(1/k) recomputed from the
    integer columns (relative tolerance REL_TOL).
    """
    ns: list[int] = []
    bs: list[int] = []
    cols: dict[int, list[float]] = {k: [] for k in RATIO_KS}
    with open(path, encoding="utf-8", newline="") as f:
        rows = csv.reader(f)
        header = next(rows, None)
        if header is None or tuple(header) != RATIO_HEADER:
            raise RatioTableError(f"row 1: expected header {','.join(RATIO_HEADER)}")
        for i, fields in enumerate(rows):
            row = i + 2
            if len(fields) != len(RATIO_HEADER):
                raise RatioTableError(f"row {row}: expected 6 fields, got {len(fields)}")
            n = _parse_int(fields[0], row, "n")
            b = _parse_int(fields[1], row, "b_n")
            if n < 1:
                raise RatioTableError(f"row {row}: n must be positive, got {n}")
            if ns and n <= ns[-1]:
                raise RatioTableError(f"row {row}: n must increase, got {n} after {ns[-1]}")
            for k, field in zip(RATIO_KS, fields[2:]):
                got = _parse_float(field, row, f"r{k}")
                want = b / n ** (1.0 / k)
                if not math.isclose(got, want, rel_tol=REL_TOL, abs_tol=0.0):
                    raise RatioTableError(
                        f"row {row}: r{k} should be b_n/n^(1/{k}) = {want!r}, got {got!r}"
                    )
                cols[k].append(got)
            ns.append(n)
            bs.append(b)
    if not ns:
        raise RatioTableError("row 2: table has no data rows")
    return RatioTable(n=ns, b=bs, r2=cols[2], r3=cols[3], r4=cols[4], r5=cols[5])


def trend(values: list[float]) -> str | None:
    """Direction of a series judged by its first- and last-decile means.

    Returns "increasing", "decreasing", or "flat" (means within FLAT_BAND of
    each other, relative to the first). A series shorter than two points has
    no direction and returns None, so single-row tables render unannotated.
    """
    if len(values) < 2:
        return None
    tenth = max(1, len(values) // 10)
    head = sum(values[:tenth]) / tenth
    tail = sum(values[-tenth:]) / tenth
    if head == 0.0:
        return "flat" if tail == 0.0 else ("increasing" if tail > 0.0 else "decreasing")
    rel = (tail - head) / abs(head)
    if abs(rel) <= FLAT_BAND:
        return "flat"
    return "increasing" if rel > 0.0 else "decreasing"
