"""Integer partitions, hook lengths and standard Young tableau counts."""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial, prod
from typing import Iterator, NamedTuple


class HookInvariantError(ArithmeticError):
    """Raised when n! is not divisible by the hook product of a shape."""


@dataclass(frozen=True, order=True)
class Partition:
    """A weakly decreasing tuple of positive parts. ``Partition(())`` is the partition of 0."""

    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        if any(not isinstance(p, int) or p < 1 for p in parts):
            raise ValueError(f"parts must be positive integers: {parts!r}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts must be weakly decreasing: {parts!r}")

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def first(self) -> int:
        return self.parts[0] if self.parts else 0

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i: int) -> int:
        return self.parts[i]

    def __repr__(self) -> str:
        return f"Partition({self.parts!r})"

    def cells(self) -> Iterator[Cell]:
        for row, part in enumerate(self.parts, start=1):
            for col in range(1, part + 1):
                yield Cell(row, col)


class Cell(NamedTuple):
    """A box of a Young diagram, 1-based (row, col) in English notation."""

    row: int
    col: int


def _as_partition(lam: Partition | tuple[int, ...] | list[int]) -> Partition:
    return lam if isinstance(lam, Partition) else Partition(tuple(lam))


def enumerate_partitions(n: int) -> Iterator[Partition]:
    """Yield every partition of ``n`` once, in reverse-lexicographic order.

    >>> [p.parts for p in enumerate_partitions(4)]
    [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        yield Partition(())
        return
    parts = [n]
    while True:
        yield Partition(tuple(parts))
        # strip trailing ones, then decrement the last part > 1 and refill
        ones = 0
        while parts and parts[-1] == 1:
            parts.pop()
            ones += 1
        if not parts:
            return
        parts[-1] -= 1
        largest = parts[-1]
        remaining = ones + 1
        while remaining > largest:
            parts.append(largest)
            remaining -= largest
        parts.append(remaining)


def partition_count(n: int) -> int:
    """p(n) by Euler's pentagonal recurrence."""
    p = [1] + [0] * n
    for m in range(1, n + 1):
        total, k = 0, 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > m:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[m - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= m:
                total += sign * p[m - g2]
            k += 1
        p[m] = total
    return p[n]


def conjugate(lam: Partition | tuple[int, ...]) -> Partition:
    lam = _as_partition(lam)
    if not lam.parts:
        return lam
    return Partition(tuple(sum(1 for p in lam.parts if p >= j) for j in range(1, lam.parts[0] + 1)))


def hook_length(lam: Partition | tuple[int, ...], u: Cell | tuple[int, int]) -> int:
    """Arm plus leg plus one for the cell ``u`` of ``lam``."""
    lam = _as_partition(lam)
    row, col = u
    if row < 1 or row > len(lam) or col < 1 or col > lam.parts[row - 1]:
        raise ValueError(f"cell {tuple(u)} lies outside {lam.parts}")
    leg = sum(1 for p in lam.parts[row:] if p >= col)
    return lam.parts[row - 1] - col + leg + 1


def hook_lengths(lam: Partition | tuple[int, ...]) -> list[int]:
    """All hook lengths of ``lam`` in row-major order."""
    lam = _as_partition(lam)
    conj = conjugate(lam).parts
    return [
        part - col + conj[col - 1] - row + 1
        for row, part in enumerate(lam.parts, start=1)
        for col in range(1, part + 1)
    ]


def syt_count(lam: Partition | tuple[int, ...]) -> int:
    """Number of standard Young tableaux of shape ``lam`` by the hook-length formula."""
    lam = _as_partition(lam)
    numerator = factorial(lam.n)
    denominator = prod(hook_lengths(lam))
    f, rem = divmod(numerator, denominator)
    if rem:
        raise HookInvariantError(f"{lam.n}! not divisible by hook product {denominator} of {lam.parts}")
    return f


def syt_count_oracle(lam: Partition | tuple[int, ...]) -> int:
    """Count SYT by removing corners recursively (f of the empty shape is 1).

    Independent of hook lengths; memoized per call.
    """
    memo: dict[tuple[int, ...], int] = {(): 1}

    def count(parts: tuple[int, ...]) -> int:
        if parts in memo:
            return memo[parts]
        total = 0
        for i, p in enumerate(parts):
            nxt = parts[i + 1] if i + 1 < len(parts) else 0
            if p > nxt:
                child = parts[:i] + (p - 1,) + parts[i + 1 :]
                if child[-1] == 0:
                    child = child[:-1]
                total += count(child)
        memo[parts] = total
        return total

    return count(_as_partition(lam).parts)
