"""Exact hook-length averages Phi_n(F) over partitions of n.

Phi_n(F) = (1/n!) * sum over partitions lam of n of f_lam**2 * F(h_u**2 : u in lam),
where F is a symmetric function of the squared hook lengths. All values are
``fractions.Fraction``; nothing in this module touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod
from typing import Iterable, Sequence, Union

from .partitions import Partition, enumerate_partitions, hook_lengths, syt_count

INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class QProduct:
    """sum_u prod_{i=1}^{r} (h_u^2 - i^2)"""

    r: int

    def __post_init__(self) -> None:
        _check_nonnegative("r", self.r)

    def evaluate(self, squares: Sequence[int]) -> int:
        return sum(prod(x - i * i for i in range(1, self.r + 1)) for x in squares)

    def __str__(self) -> str:
        return f"q{self.r}"


@dataclass(frozen=True)
class PowerSum:
    """sum_u h_u^(2k)"""

    k: int

    def __post_init__(self) -> None:
        _check_nonnegative("k", self.k)

    def evaluate(self, squares: Sequence[int]) -> int:
        return sum(x**self.k for x in squares)

    def __str__(self) -> str:
        return f"p{self.k}"


@dataclass(frozen=True)
class Elementary:
    """e_j of the multiset of squared hook lengths."""

    j: int

    def __post_init__(self) -> None:
        _check_nonnegative("j", self.j)

    def evaluate(self, squares: Sequence[int]) -> int:
        return elementary_symmetric(squares, self.j)

    def __str__(self) -> str:
        return f"e{self.j}"


@dataclass(frozen=True)
class PowerSumVector:
    """prod_i sum_u h_u^(2 mu_i) for a partition mu."""

    mu: Partition

    def __post_init__(self) -> None:
        if not isinstance(self.mu, Partition):
            object.__setattr__(self, "mu", Partition(tuple(self.mu)))

    def evaluate(self, squares: Sequence[int]) -> int:
        return prod(sum(x**m for x in squares) for m in self.mu.parts)

    def __str__(self) -> str:
        return "p" + ",".join(map(str, self.mu.parts))


HookStatistic = Union[QProduct, PowerSum, Elementary, PowerSumVector]


def _check_nonnegative(name: str, value: int) -> None:
    if not isinstance(value, int) or value < 0:
        raise ValueError(f"{name} must be a nonnegative integer, got {value!r}")


def elementary_symmetric(values: Iterable[int], j: int) -> int:
    """e_j(values); e_0 = 1 and e_j = 0 when j exceeds the number of values."""
    e = [1] + [0] * j
    for x in values:
        for i in range(j, 0, -1):
            e[i] += e[i - 1] * x
    return e[j]


def squared_hooks(lam: Partition) -> tuple[int, ...]:
    return tuple(h * h for h in hook_lengths(lam))


def eval_statistic(F: HookStatistic, lam: Partition | tuple[int, ...]) -> Fraction:
    if not isinstance(lam, Partition):
        lam = Partition(tuple(lam))
    return Fraction(F.evaluate(squared_hooks(lam)))


@lru_cache(maxsize=None)
def weighted_shapes(n: int) -> tuple[tuple[Partition, int, tuple[int, ...]], ...]:
    """(lam, f_lam**2, squared hooks) for every lam of n, computed once per n."""
    return tuple((lam, syt_count(lam) ** 2, squared_hooks(lam)) for lam in enumerate_partitions(n))


def phi(F: HookStatistic, n: int) -> Fraction:
    _check_nonnegative("n", n)
    total = sum(weight * F.evaluate(squares) for _, weight, squares in weighted_shapes(n))
    return Fraction(total, factorial(n))


def okada_lhs(r: int, n: int) -> Fraction:
    """P_r(n), the average of sum_u prod_{i<=r}(h_u^2 - i^2)."""
    return phi(QProduct(r), n)


def r_poly_value(k: int, n: int) -> Fraction:
    """R_k(n), the average of sum_u h_u^(2k)."""
    return phi(PowerSum(k), n)


class RationalPolynomial:
    """Polynomial in one variable with Fraction coefficients, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()) -> None:
        c = [Fraction(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(c)

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, x) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __add__(self, other: RationalPolynomial) -> RationalPolynomial:
        a, b = self.coeffs, other.coeffs
        size = max(len(a), len(b))
        return RationalPolynomial(
            (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(size)
        )

    def __sub__(self, other: RationalPolynomial) -> RationalPolynomial:
        return self + other.scale(-1)

    def __mul__(self, other: RationalPolynomial) -> RationalPolynomial:
        if self.is_zero() or other.is_zero():
            return RationalPolynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return RationalPolynomial(out)

    def scale(self, c) -> RationalPolynomial:
        return RationalPolynomial(c * x for x in self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, RationalPolynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"RationalPolynomial({[str(c) for c in self.coeffs]})"


def interpolate(points: Sequence[tuple[int, Fraction]]) -> RationalPolynomial:
    """Unique polynomial of degree < len(points) through ``points`` (Newton form)."""
    if not points:
        raise ValueError("need at least one point")
    xs = [Fraction(x) for x, _ in points]
    if len(set(xs)) != len(xs):
        raise ValueError("abscissae must be distinct")
    table = [Fraction(y) for _, y in points]
    newton = [table[0]]
    for order in range(1, len(xs)):
        table = [
            (table[i + 1] - table[i]) / (xs[i + order] - xs[i]) for i in range(len(table) - 1)
        ]
        newton.append(table[0])

    result = RationalPolynomial()
    for i in range(len(newton) - 1, -1, -1):
        # Horner on the Newton basis: result = result * (x - x_i) + c_i
        result = result * RationalPolynomial([-xs[i], 1]) + RationalPolynomial([newton[i]])
    return result


def forward_differences(values: Sequence) -> list[list[Fraction]]:
    rows = [[Fraction(v) for v in values]]
    while len(rows[-1]) > 1:
        last = rows[-1]
        rows.append([last[i + 1] - last[i] for i in range(len(last) - 1)])
    return rows


def detect_degree(values: Sequence) -> int | str:
    """Degree of the polynomial sampled at consecutive integers, or ``INCONCLUSIVE``.

    The highest order d with a nonzero forward difference is reported only if
    there are at least two differences of order d + 1 and all of them vanish,
    i.e. at least d + 3 samples. Polynomiality of the source is assumed.
    A list of zeros has degree 0.
    """
    if not values:
        raise ValueError("need at least one value")
    rows = forward_differences(values)
    nonzero = [d for d, row in enumerate(rows) if any(row)]
    d = nonzero[-1] if nonzero else 0
    if len(values) < d + 3:
        return INCONCLUSIVE
    return d
