"""Truncated bivariate series with exact Laurent-polynomial coefficients.

A ``TruncatedBivariateSeries`` of order N stores the coefficients of
y^0..y^N, each a ``TPolynomial`` in an inner variable (t or z). Inner
exponents may go negative while a series is being built; identities are
checked only after those terms have cancelled.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable, Mapping

from .closed_forms import divisor_data
from .hook_statistics import Elementary, phi
from .partitions import enumerate_partitions, hook_lengths, syt_count

CORRECTED = "corrected"
AS_PRINTED = "as_printed"
VARIANTS = (CORRECTED, AS_PRINTED)


class TPolynomial:
    """Sparse Laurent polynomial {exponent: Fraction} in one inner variable."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[int, object] | Iterable[object] = ()) -> None:
        if isinstance(terms, Mapping):
            items = terms.items()
        else:
            items = enumerate(terms)
        self.terms: dict[int, Fraction] = {e: Fraction(c) for e, c in items if c != 0}

    @classmethod
    def monomial(cls, exponent: int, coeff=1) -> TPolynomial:
        return cls({exponent: coeff})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __getitem__(self, exponent: int) -> Fraction:
        return self.terms.get(exponent, Fraction(0))

    @property
    def min_exponent(self) -> int | None:
        return min(self.terms) if self.terms else None

    @property
    def degree(self) -> int:
        return max(self.terms) if self.terms else -1

    def is_polynomial(self) -> bool:
        return all(e >= 0 for e in self.terms)

    def coefficients(self) -> list[Fraction]:
        """Dense list from t^0 to t^degree; raises on negative exponents."""
        if not self.is_polynomial():
            raise ValueError(f"negative exponents present: {self}")
        return [self[e] for e in range(self.degree + 1)]

    def __add__(self, other: TPolynomial) -> TPolynomial:
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return TPolynomial(out)

    def __neg__(self) -> TPolynomial:
        return TPolynomial({e: -c for e, c in self.terms.items()})

    def __sub__(self, other: TPolynomial) -> TPolynomial:
        return self + (-other)

    def __mul__(self, other) -> TPolynomial:
        if not isinstance(other, TPolynomial):
            return TPolynomial({e: c * other for e, c in self.terms.items()})
        out: dict[int, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return TPolynomial(out)

    __rmul__ = __mul__

    def __truediv__(self, scalar) -> TPolynomial:
        return TPolynomial({e: c / scalar for e, c in self.terms.items()})

    def evaluate(self, x) -> Fraction:
        return sum((c * Fraction(x) ** e for e, c in self.terms.items()), Fraction(0))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, TPolynomial):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*t^{e}" for e, c in sorted(self.terms.items(), reverse=True))


ZERO = TPolynomial()
ONE = TPolynomial.monomial(0)


class TruncatedBivariateSeries:
    """sum_{n<=order} coeffs[n] * y^n with TPolynomial coefficients."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Iterable[TPolynomial] = ()) -> None:
        if order < 0:
            raise ValueError("order must be nonnegative")
        c = list(coeffs)[: order + 1]
        c += [ZERO] * (order + 1 - len(c))
        self.order = order
        self.coeffs: list[TPolynomial] = c

    def __getitem__(self, n: int) -> TPolynomial:
        return self.coeffs[n]

    def _check(self, other: TruncatedBivariateSeries) -> None:
        if self.order != other.order:
            raise ValueError(f"order mismatch: {self.order} vs {other.order}")

    def __add__(self, other: TruncatedBivariateSeries) -> TruncatedBivariateSeries:
        self._check(other)
        return TruncatedBivariateSeries(self.order, (a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other) -> TruncatedBivariateSeries:
        if not isinstance(other, TruncatedBivariateSeries):
            return TruncatedBivariateSeries(self.order, (c * other for c in self.coeffs))
        self._check(other)
        out = [ZERO] * (self.order + 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j in range(self.order + 1 - i):
                if other.coeffs[j]:
                    out[i + j] = out[i + j] + a * other.coeffs[j]
        return TruncatedBivariateSeries(self.order, out)

    def exp(self) -> TruncatedBivariateSeries:
        """exp(S) for S with zero constant term, via n G_n = sum_k k S_k G_{n-k}."""
        if self.coeffs[0]:
            raise ValueError("exp requires a zero constant term")
        g = [ONE] + [ZERO] * self.order
        for n in range(1, self.order + 1):
            acc = ZERO
            for k in range(1, n + 1):
                if self.coeffs[k] and g[n - k]:
                    acc = acc + self.coeffs[k] * g[n - k] * k
            g[n] = acc / n
        return TruncatedBivariateSeries(self.order, g)

    def substitute_inner(self, value) -> list[Fraction]:
        return [c.evaluate(value) for c in self.coeffs]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, TruncatedBivariateSeries):
            return self.order == other.order and self.coeffs == other.coeffs
        return NotImplemented

    def __repr__(self) -> str:
        return f"TruncatedBivariateSeries(order={self.order}, coeffs={self.coeffs!r})"


@dataclass(frozen=True)
class SeriesComparison:
    equal: bool
    outer_degree: int | None = None
    inner_degree: int | None = None
    left: Fraction | None = None
    right: Fraction | None = None

    def __bool__(self) -> bool:
        return self.equal


def series_equal(a: TruncatedBivariateSeries, b: TruncatedBivariateSeries) -> SeriesComparison:
    """Exact comparison reporting the first mismatch in (outer, inner) degree order."""
    a._check(b)
    for n, (ca, cb) in enumerate(zip(a.coeffs, b.coeffs)):
        if ca == cb:
            continue
        for e in sorted(set(ca.terms) | set(cb.terms)):
            if ca[e] != cb[e]:
                return SeriesComparison(False, n, e, ca[e], cb[e])
    return SeriesComparison(True)


def _check_order(order: int, limit: int) -> None:
    if order < 0 or order > limit:
        raise ValueError(f"order must be in 0..{limit}, got {order}")


def no_lhs_direct(order: int) -> TruncatedBivariateSeries:
    """sum_lam x^|lam| prod_u (1 - z/h_u^2), coefficients as polynomials in z."""
    _check_order(order, 20)
    coeffs = []
    for n in range(order + 1):
        total = ZERO
        scale = Fraction(1, factorial(n) ** 2)
        for lam in enumerate_partitions(n):
            # prod (1 - z/h^2) = f^2/(n!)^2 * prod (h^2 - z)
            poly = ONE
            for h in hook_lengths(lam):
                poly = poly * TPolynomial({0: h * h, 1: -1})
            total = total + poly * (syt_count(lam) ** 2 * scale)
        coeffs.append(total)
    return TruncatedBivariateSeries(order, coeffs)


def _log_euler_series(order: int, weight) -> TruncatedBivariateSeries:
    """sum_m weight(m) x^m, the series -sum_k log(1 - x^k) when weight = sigma(m)/m."""
    return TruncatedBivariateSeries(
        order, [ZERO] + [TPolynomial.monomial(0, weight(m)) for m in range(1, order + 1)]
    )


def no_rhs_product(order: int) -> TruncatedBivariateSeries:
    """prod_k (1 - x^k)^(z-1) = exp((1 - z) sum_m sigma(m)/m x^m)."""
    _check_order(order, 20)
    log_part = _log_euler_series(order, lambda m: divisor_data(m).sigma_over_m)
    return (log_part * TPolynomial({0: 1, 1: -1})).exp()


def phi_e_generating_lhs(order: int) -> TruncatedBivariateSeries:
    """sum_n y^n/n! sum_j (-1)^(n-j) Phi_n(e_j) t^j from brute-force averages."""
    _check_order(order, 12)
    coeffs = []
    for n in range(order + 1):
        terms = {j: (-1) ** (n - j) * phi(Elementary(j), n) / factorial(n) for j in range(n + 1)}
        coeffs.append(TPolynomial(terms))
    return TruncatedBivariateSeries(order, coeffs)


def phi_e_generating_rhs(order: int, variant: str = CORRECTED) -> TruncatedBivariateSeries:
    """exp((1 - 1/t) sum_m w(m) (yt)^m) with w = sigma(m)/m or, as printed, tau(m)."""
    _check_order(order, 20)
    if variant == CORRECTED:
        weight = lambda m: divisor_data(m).sigma_over_m  # noqa: E731
    elif variant == AS_PRINTED:
        weight = lambda m: divisor_data(m).tau  # noqa: E731
    else:
        raise ValueError(f"variant must be one of {VARIANTS}, got {variant!r}")
    inner = TruncatedBivariateSeries(
        order, [ZERO] + [TPolynomial.monomial(m, weight(m)) for m in range(1, order + 1)]
    )
    result = (inner * TPolynomial({0: 1, -1: -1})).exp()
    if variant == CORRECTED:
        for n, c in enumerate(result.coeffs):
            if not c.is_polynomial() or c.degree > n:
                raise ArithmeticError(f"y^{n} coefficient is not a polynomial of degree <= {n}: {c}")
    return result


def partition_counts_from_product(order: int) -> list[int]:
    """x^n coefficients of the product side at z = 0, i.e. prod (1 - x^k)^-1."""
    values = no_rhs_product(order).substitute_inner(0)
    return [int(v) for v in values]


def ej_from_generating_rhs(j: int, n: int, order: int | None = None) -> Fraction:
    """(-1)^(n-j) n! [y^n t^j] of the corrected right-hand side."""
    series = phi_e_generating_rhs(n if order is None else order, CORRECTED)
    return (-1) ** (n - j) * factorial(n) * series[n][j]


__all__ = [
    "AS_PRINTED",
    "CORRECTED",
    "SeriesComparison",
    "TPolynomial",
    "TruncatedBivariateSeries",
    "ej_from_generating_rhs",
    "no_lhs_direct",
    "no_rhs_product",
    "partition_counts_from_product",
    "phi_e_generating_lhs",
    "phi_e_generating_rhs",
    "series_equal",
]
