"""Consecutive-run decompositions and two power-of-two Diophantine searches.

A positive integer is a sum of >= 2 consecutive positive integers exactly when
it is not a power of two; `consecutive_decomposition` builds such a run from
the smallest odd prime divisor. The two solvers enumerate v^2 + v + E = 2^k
and x^2 + D = 2^m over bounded exponents with exact integer arithmetic (no
floating point anywhere near a perfect-square decision).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

QUADRATIC_POW2 = "quadratic_pow2"
SQUARE_PLUS_D = "square_plus_D"

# Sanity cap, far beyond the Beukers range 435 + 10*log2|D| for any desk-scale
# |D|; exact ints can't overflow, this just refuses absurd scans.
MAX_EXPONENT_CAP = 4096


@dataclass(frozen=True, slots=True)
class Decomposition:
    """n = start + (start+1) + ... + (start+length-1), with length >= 2."""

    n: int
    start: int
    length: int

    def __post_init__(self) -> None:
        if self.start < 1 or self.length < 2:
            raise ValueError(f"degenerate run start={self.start} length={self.length}")
        # arithmetic-series total, doubled to stay in integers
        if self.length * (2 * self.start + self.length - 1) != 2 * self.n:
            raise ValueError(f"run {self.start}..{self.start + self.length - 1} does not sum to {self.n}")


@dataclass(frozen=True)
class SearchBounds:
    """Exponent and |root| limits for the Diophantine searches."""

    max_exponent: int
    max_root_abs: int

    def __post_init__(self) -> None:
        if not 1 <= self.max_exponent <= MAX_EXPONENT_CAP:
            raise ValueError(
                f"max_exponent must lie in 1..{MAX_EXPONENT_CAP}, got {self.max_exponent}"
            )
        if self.max_root_abs < 1:
            raise ValueError(f"max_root_abs must be positive, got {self.max_root_abs}")


@dataclass(frozen=True, slots=True)
class DiophantineSolution:
    """One (root, exponent) pair for the named equation and parameter."""

    kind: str
    parameter: int
    root: int
    exponent: int
    beukers_ok: bool

    @property
    def in_finite_tail(self) -> bool:
        """True for quadratic solutions with k > 2, the provably finite regime."""
        return self.kind == QUADRATIC_POW2 and self.exponent > 2


def is_power_of_two(n: int) -> bool:
    return n >= 1 and n & (n - 1) == 0


def _smallest_odd_prime_factor(n: int) -> int | None:
    """Smallest odd prime dividing n, or None when n is a power of two."""
    odd = n >> ((n & -n).bit_length() - 1)
    if odd == 1:
        return None
    f = 3
    while f * f <= odd:
        if odd % f == 0:
            return f
        f += 2
    return odd


def consecutive_decomposition(n: int) -> Decomposition | None:
    """A run of >= 2 consecutive positive integers summing to n, or None.

    None exactly when n is a power of two. With d the smallest odd prime
    divisor of n and m = n/d: a run of d integers centred at m works whenever
    the centre sits far enough from zero (m >= (d+1)/2); otherwise the centred
    run would dip below 1, and folding the negative head against its mirror
    leaves the 2m integers centred between d//2 and d//2 + 1.
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    d = _smallest_odd_prime_factor(n)
    if d is None:
        return None
    m = n // d
    half = (d - 1) // 2
    if m >= half + 1:
        return Decomposition(n, m - half, d)
    return Decomposition(n, half + 1 - m, 2 * m)


def beukers_exponent_bound(d: int) -> float:
    """Upper bound 435 + 10*log2|d| on exponents m with x^2 + d = 2^m solvable."""
    if d == 0:
        raise ValueError("d must be nonzero")
    return 435.0 + 10.0 * math.log2(abs(d))


def solve_quadratic_pow2(e: int, bounds: SearchBounds) -> list[DiophantineSolution]:
    """All (v, k) with v*v + v + e == 2**k, 1 <= k <= max_exponent, |v| bounded.

    Per exponent the equation is an ordinary quadratic in v; a solution exists
    iff the discriminant 2^{k+2} + 1 - 4e is a perfect square. The discriminant
    is 1 mod 4, so its root t is odd and both candidate roots (t-1)/2 and
    -(t+1)/2 are integers. Sorted by (k, v).
    """
    sols: list[DiophantineSolution] = []
    for k in range(1, bounds.max_exponent + 1):
        disc = (1 << (k + 2)) + 1 - 4 * e
        if disc < 0:
            continue
        t = math.isqrt(disc)
        if t * t != disc:
            continue
        # Beukers annotation via (2v+1)^2 + (4e-1) = 2^{k+2}
        ok = (k + 2) < beukers_exponent_bound(4 * e - 1)
        for v in (-(t + 1) // 2, (t - 1) // 2):
            if abs(v) <= bounds.max_root_abs:
                sols.append(DiophantineSolution(QUADRATIC_POW2, e, v, k, ok))
    return sols


def solve_square_plus_d(d: int, bounds: SearchBounds) -> list[DiophantineSolution]:
    """All (x, m) with x*x + d == 2**m, 0 <= m <= max_exponent, 0 <= x bounded.

    Only x >= 0 is reported; -x solves whenever x does. Each solution carries
    the Beukers check m < 435 + 10*log2|d|. Sorted by (m, x).
    """
    if d == 0:
        raise ValueError("d must be nonzero")
    limit = beukers_exponent_bound(d)
    sols: list[DiophantineSolution] = []
    for m in range(0, bounds.max_exponent + 1):
        rem = (1 << m) - d
        if rem < 0:
            continue
        x = math.isqrt(rem)
        if x * x == rem and x <= bounds.max_root_abs:
            sols.append(DiophantineSolution(SQUARE_PLUS_D, d, x, m, m < limit))
    return sols
