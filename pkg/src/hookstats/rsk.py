"""Robinson-Schensted correspondence and permutation sums over S_n."""

from __future__ import annotations

import bisect
import itertools
import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .partitions import Partition, hook_lengths

Permutation = tuple[int, ...]
Tableau = tuple[tuple[int, ...], ...]

DEFAULT_EXHAUSTIVE_CAP = 8


class ResourceLimitError(RuntimeError):
    """Raised when an exhaustive computation exceeds its size cap."""


@dataclass(frozen=True)
class TableauPair:
    P: Tableau
    Q: Tableau

    @property
    def shape(self) -> Partition:
        return Partition(tuple(len(row) for row in self.P))


@dataclass(frozen=True)
class MomentEstimate:
    n: int
    p: int
    samples: int
    mean: float
    std_error: float
    seed: int


def _check_permutation(w: Sequence[int]) -> Permutation:
    w = tuple(w)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise ValueError(f"not a permutation of 1..{len(w)}: {w}")
    return w


def rsk(w: Sequence[int]) -> TableauPair:
    """Row-insertion RSK: returns (insertion tableau P, recording tableau Q)."""
    w = _check_permutation(w)
    P: list[list[int]] = []
    Q: list[list[int]] = []
    for step, x in enumerate(w, start=1):
        row = 0
        while True:
            if row == len(P):
                P.append([x])
                Q.append([step])
                break
            current = P[row]
            pos = bisect.bisect_right(current, x)
            if pos == len(current):
                current.append(x)
                Q[row].append(step)
                break
            x, current[pos] = current[pos], x
            row += 1
    return TableauPair(tuple(map(tuple, P)), tuple(map(tuple, Q)))


def is_standard(T: Tableau) -> bool:
    shape = [len(r) for r in T]
    if any(not r for r in T) or any(shape[i] < shape[i + 1] for i in range(len(shape) - 1)):
        return False
    entries = sorted(x for r in T for x in r)
    if entries != list(range(1, len(entries) + 1)):
        return False
    for i, r in enumerate(T):
        if any(r[c] >= r[c + 1] for c in range(len(r) - 1)):
            return False
        if i and any(T[i - 1][c] >= r[c] for c in range(len(r))):
            return False
    return True


def rsk_inverse(pq: TableauPair) -> Permutation:
    """Recover w from (P, Q) by reverse bumping in decreasing order of Q entries."""
    if not (is_standard(pq.P) and is_standard(pq.Q)):
        raise ValueError("P and Q must be standard Young tableaux")
    if [len(r) for r in pq.P] != [len(r) for r in pq.Q]:
        raise ValueError("P and Q must have the same shape")
    P = [list(r) for r in pq.P]
    where = {x: i for i, r in enumerate(pq.Q) for x in r}
    n = len(where)
    w = [0] * n
    for step in range(n, 0, -1):
        row = where[step]
        x = P[row].pop()
        if not P[row]:
            P.pop()
        for r in range(row - 1, -1, -1):
            # largest entry smaller than x gets bumped back up
            pos = bisect.bisect_left(P[r], x) - 1
            x, P[r][pos] = P[r][pos], x
        w[step - 1] = x
    return tuple(w)


def longest_increasing(w: Sequence[int]) -> int:
    """Length of the longest increasing subsequence by patience sorting."""
    piles: list[int] = []
    for x in w:
        pos = bisect.bisect_left(piles, x)
        if pos == len(piles):
            piles.append(x)
        else:
            piles[pos] = x
    return len(piles)


def permutations(n: int, cap: int | None = DEFAULT_EXHAUSTIVE_CAP) -> Iterable[Permutation]:
    if cap is not None and n > cap:
        raise ResourceLimitError(f"exhaustive enumeration of S_{n} exceeds cap n <= {cap}")
    return itertools.permutations(range(1, n + 1))


def shape_fibers(n: int, cap: int | None = DEFAULT_EXHAUSTIVE_CAP) -> Counter:
    """Counter mapping each shape to the number of w in S_n with that RSK shape."""
    return Counter(rsk(w).shape for w in permutations(n, cap))


def exact_hookpower_sum(n: int, k: int, cap: int | None = DEFAULT_EXHAUSTIVE_CAP) -> int:
    """sum over w in S_n of sum over cells u of sh(w) of h_u^(2k)."""
    if n < 1:
        raise ValueError("n must be positive")
    fibers = shape_fibers(n, cap)
    # per-permutation sum, grouped by shape to avoid recomputing hooks
    return sum(count * sum(h ** (2 * k) for h in hook_lengths(shape)) for shape, count in fibers.items())


def exact_is_moment(n: int, p: int, cap: int | None = DEFAULT_EXHAUSTIVE_CAP) -> Fraction:
    """(1/n!) sum over w in S_n of is(w)^p."""
    total = sum(longest_increasing(w) ** p for w in permutations(n, cap))
    return Fraction(total, math.factorial(n))


def hook_bound_sandwich(n: int, k: int, cap: int | None = DEFAULT_EXHAUSTIVE_CAP) -> tuple[Fraction, Fraction, Fraction]:
    """(lower, R_k(n), upper) where lower = E[is^2k] and upper = 2^(2k+1) n E[is^2k]."""
    lower = exact_is_moment(n, 2 * k, cap)
    middle = Fraction(exact_hookpower_sum(n, k, cap), math.factorial(n))
    upper = 2 ** (2 * k + 1) * n * lower
    return lower, middle, upper


def monte_carlo_is_moment(n: int, p: int, samples: int, seed: int) -> MomentEstimate:
    """Sample mean and standard error of (is(w)/sqrt(n))^p over uniform w in S_n.

    Permutations come from ``numpy.random.Generator(PCG64(seed)).permutation``
    (a Fisher-Yates shuffle), so results are reproducible for a given seed.
    """
    if n < 1 or p < 1:
        raise ValueError("n and p must be positive")
    if samples < 100:
        raise ValueError("need at least 100 samples")
    rng = np.random.Generator(np.random.PCG64(seed))
    base = np.arange(1, n + 1)
    scale = math.sqrt(n)
    values = np.empty(samples, dtype=float)
    for i in range(samples):
        values[i] = (longest_increasing(rng.permutation(base).tolist()) / scale) ** p
    mean = float(values.mean())
    std_error = float(values.std(ddof=1) / math.sqrt(samples))
    return MomentEstimate(n=n, p=p, samples=samples, mean=mean, std_error=std_error, seed=seed)
