"""CSV export and import for every table the toolkit produces.

All files are UTF-8 with `\n` line endings and a header row. Integers are
plain decimal; floats go through repr so a re-read reproduces them exactly.
Only the terms table is importable; the rest are one-way exports.
"""

from __future__ import annotations

import csv
from typing import Iterable, Sequence

from .analysis import DiffSetReport, GrowthStats, PlateauRecord
from .numtheory import DiophantineSolution
from .sequence import MAX_SUM, Seed, SequenceState, _as_seed, _make_state

TERMS_HEADER = ("n", "a_n", "b_n")
RATIO_HEADER = ("n", "b_n", "r2", "r3", "r4", "r5")
PLATEAU_HEADER = ("B", "n1", "n2", "T_hat")
DIFFSET_HEADER = ("m", "d_size", "r_size", "exponent")
SOLUTIONS_HEADER = ("kind", "parameter", "root", "exponent", "beukers_ok")


class CsvFormatError(ValueError):
    """Malformed CSV input; messages name the offending 1-based row."""


def _writer(f):
    return csv.writer(f, lineterminator="\n")


def write_terms_csv(path: str, state: SequenceState) -> None:
    with open(path, "w", encoding="utf-8", newline="") as f:
        w = _writer(f)
        w.writerow(TERMS_HEADER)
        for i, (a, b) in enumerate(zip(state.terms, state.b), 1):
            w.writerow((i, a, b))


def read_terms_csv(path: str, seed: Seed | Sequence[int] | None = None) -> SequenceState:
    """Rebuild an analysis-only state from a terms CSV.

    The file carries no witness data, so every witness slot reads back as
    unrecorded. When `seed` is not given the first two rows are taken as the
    seed; declare the real one for states seeded with more than two terms
    (otherwise a non-increasing third term is indistinguishable from
    corruption and is rejected).
    """
    declared = _as_seed(seed) if seed is not None else None
    terms: list[int] = []
    prefix = [0]
    with open(path, "r", encoding="utf-8", newline="") as f:
        rows = csv.reader(f)
        header = next(rows, None)
        if header is None or tuple(header) != TERMS_HEADER:
            raise CsvFormatError(f"row 1: expected header {','.join(TERMS_HEADER)}")
        for rownum, row in enumerate(rows, 2):
            if len(row) != 3:
                raise CsvFormatError(f"row {rownum}: expected 3 fields, got {len(row)}")
            try:
                n, a, b = (int(field) for field in row)
            except ValueError:
                raise CsvFormatError(f"row {rownum}: non-integer field") from None
            if n != rownum - 1:
                raise CsvFormatError(f"row {rownum}: n must be {rownum - 1}, got {n}")
            if a < 1:
                raise CsvFormatError(f"row {rownum}: a_n must be positive, got {a}")
            if a > MAX_SUM or prefix[-1] + a > MAX_SUM:
                raise CsvFormatError(f"row {rownum}: terms exceed the 64-bit cap")
            if b != a - n:
                raise CsvFormatError(f"row {rownum}: b_n must be a_n - n = {a - n}, got {b}")
            terms.append(a)
            prefix.append(prefix[-1] + a)

    if declared is not None:
        s = len(declared)
        if len(terms) < s or tuple(terms[:s]) != declared.terms:
            raise CsvFormatError(f"rows 2..{s + 1}: terms do not start with the declared seed")
        inferred = declared
    else:
        if len(terms) < 2:
            raise CsvFormatError("row 2: need at least two data rows to infer a seed")
        inferred = Seed((terms[0], terms[1]))
    for i in range(len(inferred), len(terms)):
        if terms[i] <= terms[i - 1]:
            raise CsvFormatError(
                f"row {i + 2}: generated term {terms[i]} does not exceed its predecessor"
                " (declare the seed if this state was seeded with more terms)"
            )
    n = len(terms)
    return _make_state(inferred, terms, prefix, [0] * n, [0] * n)


def write_ratio_csv(path: str, state: SequenceState, stats: GrowthStats) -> None:
    """The n, b_n, b_n/n^(1/k) table for k = 2..5; the plotter's input."""
    if stats.n_max != state.n:
        raise ValueError(f"stats cover n={stats.n_max} but state has n={state.n}")
    r2, r3, r4, r5 = (stats.ratios[k] for k in (2, 3, 4, 5))
    with open(path, "w", encoding="utf-8", newline="") as f:
        w = _writer(f)
        w.writerow(RATIO_HEADER)
        for i in range(state.n):
            w.writerow(
                (i + 1, state.b[i], repr(r2[i]), repr(r3[i]), repr(r4[i]), repr(r5[i]))
            )


def write_plateau_csv(path: str, records: Iterable[PlateauRecord]) -> None:
    with open(path, "w", encoding="utf-8", newline="") as f:
        w = _writer(f)
        w.writerow(PLATEAU_HEADER)
        for rec in records:
            w.writerow((rec.b, rec.n1, rec.n2, rec.t_hat))


def write_diffset_csv(path: str, reports: Iterable[DiffSetReport]) -> None:
    with open(path, "w", encoding="utf-8", newline="") as f:
        w = _writer(f)
        w.writerow(DIFFSET_HEADER)
        for rep in reports:
            w.writerow((rep.m, rep.d_size, rep.r_size, repr(rep.exponent)))


def write_solutions_csv(path: str, solutions: Iterable[DiophantineSolution]) -> None:
    with open(path, "w", encoding="utf-8", newline="") as f:
        w = _writer(f)
        w.writerow(SOLUTIONS_HEADER)
        for sol in solutions:
            w.writerow(
                (sol.kind, sol.parameter, sol.root, sol.exponent,
                 "true" if sol.beukers_ok else "false")
            )
