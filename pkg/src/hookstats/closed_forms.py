"""Closed-form right-hand sides for hook-length averages.

Includes the Okada product formula, central factorial numbers and the
resulting expansion of R_k(n), divisor data, and two formulas for the
elementary-function averages Phi_n(e_j): the divisor-count version as it
was originally published and the sigma(m)/m version that agrees with
brute force.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, prod

from .hook_statistics import RationalPolynomial


def okada_constant(r: int) -> Fraction:
    """C(2r, r) C(2r+2, r+1) / (2 (r+1)^2)."""
    return Fraction(comb(2 * r, r) * comb(2 * r + 2, r + 1), 2 * (r + 1) ** 2)


def okada_rhs(r: int, n: int) -> Fraction:
    return okada_constant(r) * prod(n - j for j in range(r + 1))


def lemma1_value(r: int, which: int) -> Fraction:
    """Closed value of P_r at n = r+1 or n = r+2: okada_constant(r) * n!."""
    if which not in (r + 1, r + 2):
        raise ValueError(f"which must be r+1 or r+2 (r={r}), got {which}")
    return okada_constant(r) * factorial(which)


@lru_cache(maxsize=None)
def _central_factorial_row(n: int) -> tuple[int, ...]:
    if n == 0:
        return (1,)
    prev = _central_factorial_row(n - 1)
    row = [0] * (n + 1)
    for k in range(1, n + 1):
        above = prev[k] if k < len(prev) else 0
        row[k] = k * k * above + prev[k - 1]
    return tuple(row)


def central_factorial(n: int, k: int) -> int:
    """T(n, k) with T(n,k) = k^2 T(n-1,k) + T(n-1,k-1), T(0,0) = 1."""
    if n < 0 or k < 0:
        raise ValueError("n and k must be nonnegative")
    row = _central_factorial_row(n)
    return row[k] if k < len(row) else 0


def q_basis(i: int) -> RationalPolynomial:
    """q_i(x) = prod_{j=1}^{i} (x - j^2), q_0 = 1."""
    poly = RationalPolynomial([1])
    for j in range(1, i + 1):
        poly = poly * RationalPolynomial([-j * j, 1])
    return poly


def expand_power_in_q_basis(k: int) -> list[Fraction]:
    """Coefficients A(k, 0..k) with x^k = sum_i A(k, i) q_i(x), by polynomial division."""
    remainder = list(RationalPolynomial([0] * k + [1]).coeffs)
    coeffs = [Fraction(0)] * (k + 1)
    for i in range(k, -1, -1):
        c = remainder[i] if i < len(remainder) else Fraction(0)
        coeffs[i] = c
        if c:
            q = q_basis(i).coeffs
            for d, qc in enumerate(q):
                remainder[d] -= c * qc
    if any(remainder):
        raise ArithmeticError(f"nonzero remainder expanding x^{k}")
    return coeffs


def phi_pk_closed(k: int, n: int) -> Fraction:
    """R_k(n) = sum_i T(k+1, i+1) * okada_constant(i) * (i+1)! * C(n, i+1)."""
    return sum(
        (
            central_factorial(k + 1, i + 1) * okada_constant(i) * factorial(i + 1) * comb(n, i + 1)
            for i in range(k + 1)
        ),
        Fraction(0),
    )


@dataclass(frozen=True)
class DivisorData:
    m: int
    tau: int
    sigma_over_m: Fraction


def divisors(m: int) -> list[int]:
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    small, large = [], []
    d = 1
    while d * d <= m:
        if m % d == 0:
            small.append(d)
            if d * d != m:
                large.append(m // d)
        d += 1
    return small + large[::-1]


def divisor_data(m: int) -> DivisorData:
    divs = divisors(m)
    return DivisorData(m=m, tau=len(divs), sigma_over_m=Fraction(sum(divs), m))


def compositions(total: int, parts: int):
    """Ordered tuples of ``parts`` positive integers summing to ``total``."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(1, total - parts + 2):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def phi_ej_paper(j: int, n: int) -> Fraction:
    """The divisor-count formula for Phi_n(e_j) exactly as originally printed.

    C(n,j) sum_q j!/(j-q)! sum_p C(n-q,p) sum_{b_1+..+b_p=q} prod tau(b_i+1).
    Disagrees with brute force from n = 2 on; kept to document the discrepancy.
    """
    _check_j(j, n)
    total = 0
    for q in range(j + 1):
        inner = 0
        for p in range(q + 1):
            weight = comb(n - q, p)
            if weight:
                inner += weight * sum(
                    prod(divisor_data(b + 1).tau for b in bs) for bs in compositions(q, p)
                )
        total += factorial(j) // factorial(j - q) * inner
    return Fraction(comb(n, j) * total)


@lru_cache(maxsize=None)
def _sigma_power_table(order: int) -> tuple[tuple[Fraction, ...], ...]:
    """Row u holds the coefficients of (sum_m sigma(m)/m y^m)^u up to y^order."""
    g = [Fraction(0)] + [divisor_data(m).sigma_over_m for m in range(1, order + 1)]
    rows = [tuple([Fraction(1)] + [Fraction(0)] * order)]
    for _ in range(order):
        prev = rows[-1]
        nxt = [Fraction(0)] * (order + 1)
        for a, pa in enumerate(prev):
            if pa:
                for m in range(1, order + 1 - a):
                    nxt[a + m] += pa * g[m]
        rows.append(tuple(nxt))
    return tuple(rows)


def sigma_weight_sum(u: int, n: int) -> Fraction:
    """W(u, n) = sum over compositions m_1+..+m_u = n of prod sigma(m_i)/m_i."""
    if u > n:
        return Fraction(0)
    return _sigma_power_table(n)[u][n]


def phi_ej_corrected(j: int, n: int) -> Fraction:
    """n! sum_{u=n-j}^{n} C(u, n-j) W(u, n) / u!"""
    _check_j(j, n)
    return factorial(n) * sum(
        (Fraction(comb(u, n - j), factorial(u)) * sigma_weight_sum(u, n) for u in range(n - j, n + 1)),
        Fraction(0),
    )


def _check_j(j: int, n: int) -> None:
    if j < 0 or n < 0:
        raise ValueError("j and n must be nonnegative")
    if j > n:
        raise ValueError(f"j={j} exceeds n={n}")
