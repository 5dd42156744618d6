"""End-to-end acceptance gate: one test per shipping criterion, each printing
a single [PASS]/[FAIL] line with the measured numbers behind the verdict.
"""

import subprocess
import sys
import time
from bisect import bisect_right

import pytest

from hofsum import (
    SearchBounds,
    SequenceOverflowError,
    bound_checks,
    brute_force_generate,
    consecutive_decomposition,
    diffset_sweep,
    generate,
    growth_stats,
    is_power_of_two,
    omitted_integers,
    plateaus,
    representable_prefix_equality,
    solve_quadratic_pow2,
    solve_square_plus_d,
    write_plateau_csv,
    write_ratio_csv,
)


def _verdict(name: str, ok: bool, detail: str) -> None:
    print(f"[{'PASS' if ok else 'FAIL'}] {name}: {detail}")
    assert ok, f"{name}: {detail}"


def test_criterion_1_first_terms_exactness():
    state = generate((1, 2), 20)
    expected = [1, 2, 3, 5, 6, 8, 10, 11, 14, 16, 17, 18, 19, 21, 22, 24, 25, 29, 30, 32]
    omitted = omitted_integers(state, 20)
    ok = state.terms == expected and omitted == [4, 7, 9, 12, 13, 15, 20]
    _verdict(
        "first-terms exactness",
        ok,
        f"20 terms ending {state.terms[-1]}, omitted up to 20: {omitted}",
    )


def test_criterion_2_oracle_equivalence():
    start = time.perf_counter()
    mismatched = []
    if generate((1, 2), 5000).terms != brute_force_generate((1, 2), 5000).terms:
        mismatched.append("classic")
    for seed in ((1, 3), (2, 5), (2, 2), (3, 1), (1, 2, 100)):
        if generate(seed, 1000).terms != brute_force_generate(seed, 1000).terms:
            mismatched.append(str(seed))
    elapsed = time.perf_counter() - start
    ok = not mismatched and elapsed < 60.0
    _verdict(
        "oracle equivalence",
        ok,
        f"classic n=5000 plus five alternate seeds n=1000 in {elapsed:.2f}s,"
        f" mismatches: {mismatched or 'none'}",
    )


def test_criterion_3_enumeration_equality(classic_5000):
    bad = [k for k in range(3, 2001) if not representable_prefix_equality(classic_5000, k)]
    _verdict(
        "no-gap enumeration",
        not bad,
        f"block sums equal the terms for every K=3..2000, counterexamples: {bad or 'none'}",
    )


def test_criterion_4_decomposition_sweep():
    start = time.perf_counter()
    problem = ""
    for n in range(1, 1_000_001):
        dec = consecutive_decomposition(n)
        if (dec is None) != is_power_of_two(n):
            problem = f"existence mismatch at N={n}"
            break
        # the constructor re-sums every run; spot re-sums stay independent of it
        if dec is not None and n % 997 == 0:
            if sum(range(dec.start, dec.start + dec.length)) != n:
                problem = f"re-sum failure at N={n}"
                break
    elapsed = time.perf_counter() - start
    ok = not problem and elapsed < 10.0
    _verdict(
        "consecutive-run sweep",
        ok,
        problem or f"N<=1e6, exists iff not a power of two, runs re-sum, {elapsed:.2f}s",
    )


def test_criterion_5_monotone_convex_omitted(classic_30000, classic_5000):
    b = classic_30000.b
    monotone = all(b[i] >= b[i - 1] for i in range(1, len(b)))
    terms = classic_30000.terms
    convex = all(terms[i] > terms[i - 1] for i in range(1, len(terms)))
    omitted = omitted_integers(classic_5000, classic_5000.terms[-1])
    identity = all(
        bisect_right(omitted, classic_5000.terms[k - 1]) == classic_5000.b[k - 1]
        for k in range(1, 5001)
    )
    ok = monotone and convex and identity
    _verdict(
        "monotonicity and convexity",
        ok,
        f"b nondecreasing to n=30000: {monotone}; prefix sums strictly convex: {convex};"
        f" omitted-count identity to n=5000: {identity}",
    )


def test_criterion_6_difference_set_inequality(classic_5000):
    reports = diffset_sweep(classic_5000, 2000)  # raises on any subset violation
    violations = [r.m for r in reports if not r.inequality_holds]
    first, last = reports[0], reports[-1]
    ok = (
        not violations
        and (first.d_size, first.r_size) == (7, 1)
        and (last.d_size, last.r_size) == (2424395, 1212195)
    )
    _verdict(
        "difference-set inequality",
        ok,
        f"m<=2000 subset exact, inequality violations: {violations or 'none'};"
        f" m=2 row ({first.d_size},{first.r_size}), m=2000 row ({last.d_size},{last.r_size})",
    )


def test_criterion_7_diophantine_finiteness():
    base = SearchBounds(max_exponent=64, max_root_abs=10**12)
    doubled = SearchBounds(max_exponent=64, max_root_abs=2 * 10**12)
    unstable = []
    for e in range(-100, 101):
        narrow = [(s.root, s.exponent) for s in solve_quadratic_pow2(e, base) if s.exponent > 2]
        wide = [(s.root, s.exponent) for s in solve_quadratic_pow2(e, doubled) if s.exponent > 2]
        if narrow != wide:
            unstable.append(e)
    square_bounds = SearchBounds(max_exponent=200, max_root_abs=10**15)
    outside = []
    d7 = []
    for d in range(-1000, 1001):
        if d == 0:
            continue
        sols = solve_square_plus_d(d, square_bounds)
        if not all(s.beukers_ok for s in sols):
            outside.append(d)
        if d == 7:
            d7 = sorted(s.exponent for s in sols)
    ok = not unstable and not outside and d7 == [3, 4, 5, 7, 15]
    _verdict(
        "Diophantine finiteness at desk scale",
        ok,
        f"|E|<=100, k in 3..64 stable under doubled root bound (unstable: {unstable or 'none'});"
        f" |D|<=1000, m<=200 all inside the exponent bound (outside: {outside or 'none'});"
        f" D=7 exponents {d7}",
    )


def test_criterion_8_figure_scale_pipeline(tmp_path):
    start = time.perf_counter()
    state = generate((1, 2), 30000)
    records = plateaus(state)
    stats = growth_stats(state)
    report = bound_checks(state)
    write_ratio_csv(tmp_path / "ratio.csv", state, stats)
    write_plateau_csv(tmp_path / "plateau.csv", records)
    elapsed = time.perf_counter() - start
    heuristic = 0.2 < stats.alpha_fit < 0.5
    ok = elapsed < 5.0 and 0.1 < stats.alpha_fit < 0.6
    _verdict(
        "figure-scale experiment",
        ok,
        f"pipeline {elapsed:.2f}s, {len(records)} plateaus,"
        f" alpha_fit={stats.alpha_fit:.4f}"
        f" ({'inside' if heuristic else 'outside'} the heuristic (0.2,0.5) window),"
        f" lower offset max {report.lower_offset_max:.3f} at n={report.lower_offset_argmax},"
        f" upper ratio max {report.upper_ratio_max:.3f} at n={report.upper_ratio_argmax}",
    )


CHILD_SCRIPT = """\
import resource, time
import hofsum

t0 = time.perf_counter()
state = hofsum.generate((1, 2), 1_000_000)
elapsed = time.perf_counter() - t0
peak_kib = resource.getrusage(resource.RUSAGE_SELF).ru_maxrss
print(elapsed, peak_kib, state.terms[-1], state.b[-1])
"""


def test_criterion_9_performance_budget():
    res = subprocess.run(
        [sys.executable, "-c", CHILD_SCRIPT],
        capture_output=True,
        text=True,
        timeout=180,
    )
    assert res.returncode == 0, res.stderr
    elapsed_field, peak_field, a_field, b_field = res.stdout.split()
    elapsed = float(elapsed_field)
    peak_mib = int(peak_field) / 1024.0
    with pytest.raises(SequenceOverflowError):
        generate((2**61, 2**62), 3)  # the cap stays armed at full scale
    ok = elapsed < 10.0 and peak_mib < 1024.0 and (a_field, b_field) == ("1001292", "1292")
    _verdict(
        "showcase performance",
        ok,
        f"n=1e6 in {elapsed:.2f}s, peak {peak_mib:.0f}MiB, a_n={a_field}, b_n={b_field},"
        f" overflow guard active",
    )
