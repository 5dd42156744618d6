"""Generators for the Hofstadter consecutive-sum sequence (OEIS A005243).

The classic sequence starts a_1 = 1, a_2 = 2, and every later term is the least
integer exceeding the previous term that is a sum of two or more consecutive
earlier terms:

    1, 2, 3, 5, 6, 8, 10, 11, 14, 16, 17, 18, 19, 21, 22, 24, 25, 29, 30, 32, ...

Generalized seeds (any >= 2 positive starting terms, duplicates and descents
allowed) follow the same greedy rule from the first generated index on.

Two independent routes produce the sequence: `generate` advances a frontier of
windows in sum order, `brute_force_generate` applies the definition literally.
They must agree term for term; the test suite holds them to that.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Iterator, Sequence

# Terms and prefix sums must stay within a signed 64-bit word. Python ints never
# wrap, so this cap is what turns runaway growth into an explicit error instead
# of a silently degrading run.
MAX_SUM = 2**63 - 1


class SequenceOverflowError(OverflowError):
    """A term or prefix sum left the 64-bit range the generators guarantee."""


@dataclass(frozen=True)
class Seed:
    """Starting terms. The classic sequence seeds with (1, 2)."""

    terms: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.terms) < 2:
            raise ValueError("seed needs at least two terms")
        for t in self.terms:
            if not isinstance(t, int) or t < 1:
                raise ValueError(f"seed terms must be positive integers, got {t!r}")
            if t > MAX_SUM:
                raise SequenceOverflowError(f"seed term {t} exceeds the 64-bit cap")

    @classmethod
    def classic(cls) -> "Seed":
        return cls((1, 2))

    @property
    def is_classic(self) -> bool:
        return self.terms == (1, 2)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[int]:
        return iter(self.terms)


@dataclass(frozen=True, slots=True)
class Window:
    """A contiguous block a_p + ... + a_q of already-known terms (1-indexed, q > p)."""

    p: int
    q: int
    sum: int

    def __post_init__(self) -> None:
        if not 1 <= self.p < self.q:
            raise ValueError(f"window needs 1 <= p < q, got p={self.p} q={self.q}")


@dataclass(frozen=True, slots=True)
class Witness:
    """The block a_p + ... + a_q = value recorded when a term was generated."""

    p: int
    q: int
    value: int


@dataclass(frozen=True)
class SequenceState:
    """Terms a_1..a_n plus the derived series the analysis layer needs.

    prefix_sums[m] is a_1 + ... + a_m (so prefix_sums[0] == 0) and
    b[i] == terms[i] - (i+1), the defect of the 1-indexed term i+1.
    witness_p/witness_q record the generating block per index; 0 marks a seed
    position or an imported state whose witnesses were never recorded.
    A finished state is read-only by contract: nothing in this package mutates
    one, so states are safe to share across threads.
    """

    seed: Seed
    terms: list[int]
    prefix_sums: list[int]
    b: list[int]
    witness_p: list[int]
    witness_q: list[int]

    @property
    def n(self) -> int:
        return len(self.terms)

    @property
    def is_classic(self) -> bool:
        return self.seed.is_classic

    def a(self, n: int) -> int:
        """1-indexed term access."""
        if not 1 <= n <= len(self.terms):
            raise IndexError(f"term index {n} outside 1..{len(self.terms)}")
        return self.terms[n - 1]

    def block_sum(self, p: int, q: int) -> int:
        """Sum a_p + ... + a_q via prefix sums."""
        if not 1 <= p <= q <= len(self.terms):
            raise IndexError(f"block {p}..{q} outside 1..{len(self.terms)}")
        return self.prefix_sums[q] - self.prefix_sums[p - 1]

    def witness(self, n: int) -> Witness | None:
        """Recorded generating block for a_n, or None for seed/imported rows."""
        if not 1 <= n <= len(self.terms):
            raise IndexError(f"term index {n} outside 1..{len(self.terms)}")
        p = self.witness_p[n - 1]
        if p == 0:
            return None
        return Witness(p, self.witness_q[n - 1], self.terms[n - 1])

    def iter_witnesses(self) -> Iterator[tuple[int, Witness]]:
        """(n, witness) pairs for every index that has one recorded."""
        for i, p in enumerate(self.witness_p):
            if p:
                yield i + 1, Witness(p, self.witness_q[i], self.terms[i])

    def validate(self) -> None:
        """Full invariant audit; raises ValueError on the first violation."""
        n = len(self.terms)
        s = len(self.seed)
        if n < s or tuple(self.terms[:s]) != self.seed.terms:
            raise ValueError("terms do not extend the seed")
        if not (
            len(self.prefix_sums) == n + 1
            and len(self.b) == n
            and len(self.witness_p) == n
            and len(self.witness_q) == n
        ):
            raise ValueError("series lengths disagree")
        if self.prefix_sums[0] != 0:
            raise ValueError("prefix_sums must start at 0")
        for i, t in enumerate(self.terms):
            if t < 1 or t > MAX_SUM:
                raise ValueError(f"term a_{i+1}={t} outside 1..2^63-1")
            if self.prefix_sums[i + 1] != self.prefix_sums[i] + t:
                raise ValueError(f"prefix sum mismatch at m={i+1}")
            if self.prefix_sums[i + 1] > MAX_SUM:
                raise ValueError(f"prefix sum at m={i+1} exceeds the 64-bit cap")
            if self.b[i] != t - (i + 1):
                raise ValueError(f"defect mismatch at n={i+1}")
            if i >= s and t <= self.terms[i - 1]:
                raise ValueError(f"generated term a_{i+1} fails strict increase")
        for i in range(n):
            p, q = self.witness_p[i], self.witness_q[i]
            if i < s or p == 0:
                if p or q:
                    raise ValueError(f"unexpected witness on row {i+1}")
                continue
            if not (1 <= p < q <= i):
                raise ValueError(f"witness block {p}..{q} invalid for a_{i+1}")
            if self.prefix_sums[q] - self.prefix_sums[p - 1] != self.terms[i]:
                raise ValueError(f"witness for a_{i+1} does not re-sum")


def _as_seed(seed: Seed | Sequence[int]) -> Seed:
    return seed if isinstance(seed, Seed) else Seed(tuple(seed))


def _seed_prefix(seed: Seed) -> list[int]:
    prefix = [0]
    total = 0
    for t in seed:
        total += t
        if total > MAX_SUM:
            raise SequenceOverflowError("seed prefix sums exceed the 64-bit cap")
        prefix.append(total)
    return prefix


def _make_state(
    seed: Seed,
    terms: list[int],
    prefix: list[int],
    wp: list[int],
    wq: list[int],
) -> SequenceState:
    b = [t - n for n, t in enumerate(terms, 1)]
    return SequenceState(seed, terms, prefix, b, wp, wq)


def generate(seed: Seed | Sequence[int], n_max: int) -> SequenceState:
    """Extend `seed` to n_max terms by advancing a frontier of windows.

    Each start index p owns one active window (p, q); every pending window sum
    sits in `pending`, chained per distinct value through `nxt`, with the
    distinct values in a min-heap. Popping the least value either emits it as
    the next term (when it exceeds the last term) or discards it (possible only
    while a non-monotone seed still tops the frontier). Every popped window
    then advances to (p, q+1); since the advance happens after any append,
    a_{q+1} always exists, and the advanced sums re-enter the frontier strictly
    above the popped value, which keeps the pop order nondecreasing.
    """
    seed = _as_seed(seed)
    if not isinstance(n_max, int) or n_max < len(seed):
        raise ValueError(f"n_max must be an int >= seed length {len(seed)}")

    terms = list(seed)
    prefix = _seed_prefix(seed)
    count = len(terms)
    wp = [0] * count
    wq = [0] * count
    if n_max == count:
        return _make_state(seed, terms, prefix, wp, wq)

    # window start p only ranges over 1..n_max-1
    qarr = [0] * (n_max + 1)
    nxt = [0] * (n_max + 1)
    pending: dict[int, int] = {}
    heap: list[int] = []
    for k in range(2, count + 1):
        p = k - 1
        qarr[p] = k
        v = prefix[k] - prefix[k - 2]
        head = pending.get(v)
        if head is None:
            heap.append(v)
            nxt[p] = 0
        else:
            nxt[p] = head
        pending[v] = p
    heapq.heapify(heap)

    last = terms[-1]
    prefix_last = prefix[-1]
    pop = heapq.heappop
    push = heapq.heappush
    pget = pending.get
    ppop = pending.pop
    tappend = terms.append
    pappend = prefix.append

    while count < n_max:
        v = pop(heap)
        p = ppop(v)
        if v > last:
            total = prefix_last + v
            if total > MAX_SUM:
                raise SequenceOverflowError(
                    f"prefix sum would exceed 2^63-1 at n={count + 1}"
                )
            count += 1
            tappend(v)
            pappend(total)
            prefix_last = total
            last = v
            wp.append(p)
            wq.append(qarr[p])
            # the new 2-term window ending at the fresh term
            p2 = count - 1
            qarr[p2] = count
            ns = terms[-2] + v
            head = pget(ns)
            if head is None:
                push(heap, ns)
                nxt[p2] = 0
            else:
                nxt[p2] = head
            pending[ns] = p2
        # advance every window that carried this value
        while p:
            chained = nxt[p]
            q1 = qarr[p] + 1
            qarr[p] = q1
            ns = prefix[q1] - prefix[p - 1]
            head = pget(ns)
            if head is None:
                push(heap, ns)
                nxt[p] = 0
            else:
                nxt[p] = head
            pending[ns] = p
            p = chained

    return _make_state(seed, terms, prefix, wp, wq)


def brute_force_generate(seed: Seed | Sequence[int], n_max: int) -> SequenceState:
    """The definition, verbatim: walk candidates a_{k-1}+1, a_{k-1}+2, ... and
    take the first that is a block sum of the terms so far. Quadratic-ish and
    meant for cross-checking `generate` at desk scale, not for production runs.
    """
    seed = _as_seed(seed)
    if not isinstance(n_max, int) or n_max < len(seed):
        raise ValueError(f"n_max must be an int >= seed length {len(seed)}")

    terms = list(seed)
    prefix = _seed_prefix(seed)
    wp = [0] * len(terms)
    wq = [0] * len(terms)
    while len(terms) < n_max:
        k = len(terms)
        x = terms[-1]
        while True:
            x += 1
            found = _find_block(x, prefix, k)
            if found is not None:
                break
        p, q = found
        total = prefix[-1] + x
        if total > MAX_SUM:
            raise SequenceOverflowError(f"prefix sum would exceed 2^63-1 at n={k + 1}")
        terms.append(x)
        prefix.append(total)
        wp.append(p)
        wq.append(q)
    return _make_state(seed, terms, prefix, wp, wq)


def _find_block(x: int, prefix: list[int], k_limit: int) -> tuple[int, int] | None:
    """Least-q block (p, q) with q - p >= 1, q <= k_limit, summing to x.

    Sliding window over the (strictly increasing) prefix sums: for each end
    index the start pointer only moves forward, so the scan is linear.
    """
    lo = 0
    for hi in range(2, k_limit + 1):
        while prefix[hi] - prefix[lo] > x:
            lo += 1
        if prefix[hi] - prefix[lo] == x and hi - lo >= 2:
            return (lo + 1, hi)
    return None


def is_representable(x: int, state: SequenceState, k_limit: int | None = None) -> Witness | None:
    """Witness that x = a_p + ... + a_q with q > p and q <= k_limit, else None.

    Any valid witness may be returned; callers must not rely on which.
    """
    if k_limit is None:
        k_limit = state.n
    if not 2 <= k_limit <= state.n:
        raise ValueError(f"k_limit must lie in 2..{state.n}, got {k_limit}")
    if x < 1:
        raise ValueError(f"x must be positive, got {x}")
    found = _find_block(x, state.prefix_sums, k_limit)
    if found is None:
        return None
    return Witness(found[0], found[1], x)


def omitted_integers(state: SequenceState, limit: int) -> list[int]:
    """Positive integers <= limit that never occur as a term.

    For strictly increasing states with limit = a_n the result has exactly
    b_n elements: n terms occupy [1, a_n], the rest are omitted.
    """
    if limit < 0:
        raise ValueError(f"limit must be >= 0, got {limit}")
    if limit > state.terms[-1]:
        raise ValueError(
            f"limit {limit} exceeds the generated range (last term {state.terms[-1]})"
        )
    present = set(state.terms)
    return [x for x in range(1, limit + 1) if x not in present]


def iter_windows(
    state: SequenceState,
    k_max: int | None = None,
    max_sum: int | None = None,
) -> Iterator[Window]:
    """All blocks (p, q) with q <= k_max in (p, q) order, capped by max_sum.

    The cap prunes each start index as soon as its sums pass it, so scans
    bounded by a term value stay near-linear instead of quadratic.
    """
    if k_max is None:
        k_max = state.n
    if not 2 <= k_max <= state.n:
        raise ValueError(f"k_max must lie in 2..{state.n}, got {k_max}")
    prefix = state.prefix_sums
    for p in range(1, k_max):
        base = prefix[p - 1]
        for q in range(p + 1, k_max + 1):
            total = prefix[q] - base
            if max_sum is not None and total > max_sum:
                break
            yield Window(p, q, total)
