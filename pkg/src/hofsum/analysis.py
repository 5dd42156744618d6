"""Structure of the defect sequence b_n = a_n - n: plateaus, difference sets,
growth ratios, and envelope checks against the proved bounds.

Everything here reads a finished SequenceState; nothing mutates it. The
classic-seed results (defect monotonicity, prefix-sum convexity, the
difference-set inequality) are proved only for seed (1, 2); off the classic
seed the plateau records carry monotone_guarantee=False and the callers are
expected to skip the guaranteed-only checks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from statistics import linear_regression

from .sequence import SequenceState


@dataclass
class PlateauRecord:
    """Maximal constant run b_{n1} = ... = b_{n2} = b of the defect sequence.

    t_hat = n1 + b is the first term value on the plateau (a_{n1}) and s_hat
    the sum of all terms before it. e_values, filled on demand by
    e_values_for_plateau, holds 2C - (t_hat - 1)*t_hat over the suffix sums C
    of the pre-plateau prefix (p = 1..n1, the empty suffix included).
    """

    b: int
    n1: int
    n2: int
    t_hat: int
    s_hat: int
    monotone_guarantee: bool = True
    e_values: list[int] | None = field(default=None, repr=False)

    @property
    def last_n(self) -> int:
        """Largest n with b_n <= b; equals n2 under the monotone guarantee."""
        return self.n2

    @property
    def next_run_floor(self) -> int:
        """n2 + b + 2, a lower bound for the first term value of the next run."""
        return self.n2 + self.b + 2


@dataclass(frozen=True, slots=True)
class DiffSetReport:
    """Size census of D_m = S_m - S_m for the prefix-sum set S_m = {s_0..s_m}."""

    m: int
    d_size: int
    r_size: int
    exponent: float

    @property
    def inequality_holds(self) -> bool:
        """r_size >= (d_size - 1)/2 - m; each positive difference is a term or
        a block sum, and there are only m distinct terms available."""
        return self.r_size >= (self.d_size - 1) // 2 - self.m


@dataclass(frozen=True)
class GrowthStats:
    """Defect-growth ratios plus a crude log-log slope over the tail."""

    n_max: int
    alpha_fit: float
    fit_lo: int
    fit_hi: int
    ratios: dict[int, list[float]]  # k -> [b_n / n^(1/k) for n = 1..n_max]


@dataclass(frozen=True)
class BoundCheckConfig:
    """Constants for the envelope checks, kept exact where possible."""

    lower_log_divisor: float = math.log(20.0)
    upper_exponent: Fraction = Fraction(4175, 2506)
    # sharpest published difference-set growth exponents, reported for context
    comparison_exponents: tuple[Fraction, Fraction] = (
        Fraction(6681, 4175),
        Fraction(688, 413),
    )


@dataclass(frozen=True)
class BoundCheckReport:
    """Extremes of the two envelope gaps over the computed range.

    lower_offset_max = max over n >= 16 of loglog(n)/log(20) - b_n; any finite
    value certifies b_n >= loglog(n)/log(20) - C on the range with
    C = max(lower_offset_max, 0). upper_ratio_max = max of a_n / n^(4175/2506).
    """

    n_lo: int
    n_hi: int
    lower_offset_max: float
    lower_offset_argmax: int
    upper_ratio_max: float
    upper_ratio_argmax: int
    config: BoundCheckConfig


def plateaus(state: SequenceState) -> list[PlateauRecord]:
    """Maximal constant runs of b_n, in index order; they tile 1..n.

    For the classic seed consecutive run values strictly increase (the defect
    never decreases); other seeds get monotone_guarantee=False records and no
    such promise.
    """
    if state.n < 3:
        raise ValueError("plateau analysis wants at least one generated term past the seed")
    guarantee = state.is_classic
    b = state.b
    prefix = state.prefix_sums
    records: list[PlateauRecord] = []
    i = 0
    while i < len(b):
        j = i
        while j + 1 < len(b) and b[j + 1] == b[i]:
            j += 1
        n1 = i + 1
        records.append(
            PlateauRecord(
                b=b[i],
                n1=n1,
                n2=j + 1,
                t_hat=n1 + b[i],
                s_hat=prefix[n1 - 1],
                monotone_guarantee=guarantee,
            )
        )
        i = j + 1
    return records


def e_values_for_plateau(record: PlateauRecord, state: SequenceState) -> list[int]:
    """Offsets 2C - (t_hat - 1)*t_hat for C over suffix sums of the pre-plateau
    prefix, in p = 1..n1 order (p = n1 contributes the empty sum C = 0).

    A power of two 2^r on the plateau with 2^r > s_hat forces
    2^(r+1) = v^2 + v + E for one of these E and some v >= t_hat, which is what
    makes the list useful as solve_quadratic_pow2 input. Classic seed only;
    the result is cached on the record.
    """
    if not record.monotone_guarantee:
        raise ValueError("e_values are defined for classic-seed plateaus only")
    if record.e_values is not None:
        return record.e_values
    n1 = record.n1
    if not 1 <= n1 <= state.n or state.b[n1 - 1] != record.b:
        raise ValueError("plateau record does not match this state")
    prefix = state.prefix_sums
    top = prefix[n1 - 1]
    base = (record.t_hat - 1) * record.t_hat
    values = [2 * (top - prefix[p - 1]) - base for p in range(1, n1 + 1)]
    record.e_values = values
    return values


def diffset_report(state: SequenceState, m: int, ceiling: int = 5000) -> DiffSetReport:
    """Exact census of D_m = S_m - S_m by hashing all positive differences.

    Quadratic in m; the ceiling keeps accidental huge requests out. d_size
    counts 0 and both signs (D_m is symmetric), r_size counts the block sums
    (differences spanning >= 2 terms).
    """
    if not 2 <= m <= min(state.n, ceiling):
        raise ValueError(f"m must lie in 2..min(n={state.n}, ceiling={ceiling})")
    prefix = state.prefix_sums
    positive: set[int] = set()
    blocks: set[int] = set()
    for j in range(1, m + 1):
        sj = prefix[j]
        for i in range(j):
            positive.add(sj - prefix[i])
        for i in range(j - 1):
            blocks.add(sj - prefix[i])
    d_size = 2 * len(positive) + 1
    return DiffSetReport(m, d_size, len(blocks), math.log(d_size) / math.log(m + 1))


def diffset_sweep(state: SequenceState, m_max: int, ceiling: int = 5000) -> list[DiffSetReport]:
    """diffset_report for every m in 2..m_max in one incremental pass.

    Stage m adds the differences s_m - s_i; each new positive difference is
    checked right then for membership in {terms} u {block sums} (all three
    sets only grow, so this equals the full subset check at every stage).
    Raises ValueError on the first subset violation.
    """
    if not 2 <= m_max <= min(state.n, ceiling):
        raise ValueError(f"m_max must lie in 2..min(n={state.n}, ceiling={ceiling})")
    prefix = state.prefix_sums
    positive: set[int] = set()
    blocks: set[int] = set()
    term_set: set[int] = {state.terms[0]}
    reports: list[DiffSetReport] = []
    for m in range(1, m_max + 1):
        sm = prefix[m]
        term_set.add(state.terms[m - 1])
        for i in range(m - 1):
            blocks.add(sm - prefix[i])
        for i in range(m):
            diff = sm - prefix[i]
            if diff not in positive:
                positive.add(diff)
                if diff not in term_set and diff not in blocks:
                    raise ValueError(
                        f"difference {diff} at m={m} is neither a term nor a block sum"
                    )
        if m >= 2:
            d_size = 2 * len(positive) + 1
            reports.append(
                DiffSetReport(m, d_size, len(blocks), math.log(d_size) / math.log(m + 1))
            )
    return reports


def representable_prefix_equality(state: SequenceState, k: int) -> bool:
    """Do the block sums of a_1..a_k inside (a_2, a_k] equal {a_3, ..., a_k}?

    This is the enumeration property behind the generator: every generated term
    is the next block sum, and no block sum is skipped.
    """
    if not 3 <= k <= state.n:
        raise ValueError(f"k must lie in 3..{state.n}, got {k}")
    prefix = state.prefix_sums
    a2 = state.terms[1]
    ak = state.terms[k - 1]
    reachable: set[int] = set()
    for p in range(1, k):
        base = prefix[p - 1]
        for q in range(p + 1, k + 1):
            total = prefix[q] - base
            if total > ak:
                break
            if total > a2:
                reachable.add(total)
    return reachable == set(state.terms[2:k])


def growth_stats(state: SequenceState) -> GrowthStats:
    """Ratios b_n / n^(1/k) for k = 2..5 plus a log-log slope over the tail.

    The slope is fit on indices in the upper half of the range with b_n >= 1
    (log of zero is off the table, and the head is all start-up noise).
    """
    b = state.b
    usable = sum(1 for v in b if v >= 1)
    if usable < 100:
        raise ValueError(f"need >= 100 terms with b_n >= 1, have {usable}")
    n_max = state.n
    ratios: dict[int, list[float]] = {}
    for k in (2, 3, 4, 5):
        inv = 1.0 / k
        ratios[k] = [bn / n**inv for n, bn in enumerate(b, 1)]
    fit_lo = max(1, n_max // 2)
    xs = []
    ys = []
    for n in range(fit_lo, n_max + 1):
        if b[n - 1] >= 1:
            xs.append(math.log(n))
            ys.append(math.log(b[n - 1]))
    if len(xs) < 2:
        raise ValueError("upper half of the range has too few nonzero defects to fit")
    slope = linear_regression(xs, ys).slope
    return GrowthStats(n_max=n_max, alpha_fit=slope, fit_lo=fit_lo, fit_hi=n_max, ratios=ratios)


def bound_checks(state: SequenceState, config: BoundCheckConfig | None = None) -> BoundCheckReport:
    """Extremes of the proved-envelope gaps over the computed range."""
    if config is None:
        config = BoundCheckConfig()
    if state.n < 1000:
        raise ValueError(f"bound checks want >= 1000 terms, have {state.n}")
    b = state.b
    terms = state.terms
    div = config.lower_log_divisor

    lower_max = -math.inf
    lower_arg = 0
    for n in range(16, state.n + 1):  # loglog needs n past e, and 16 clears it
        gap = math.log(math.log(n)) / div - b[n - 1]
        if gap > lower_max:
            lower_max = gap
            lower_arg = n

    expo = float(config.upper_exponent)
    upper_max = -math.inf
    upper_arg = 0
    for n in range(1, state.n + 1):
        ratio = terms[n - 1] / n**expo
        if ratio > upper_max:
            upper_max = ratio
            upper_arg = n

    return BoundCheckReport(
        n_lo=1,
        n_hi=state.n,
        lower_offset_max=lower_max,
        lower_offset_argmax=lower_arg,
        upper_ratio_max=upper_max,
        upper_ratio_argmax=upper_arg,
        config=config,
    )
