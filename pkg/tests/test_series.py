from fractions import Fraction

import pytest

from hookstats.closed_forms import phi_ej_corrected
from hookstats.partitions import partition_count
from hookstats.series import (
    AS_PRINTED,
    CORRECTED,
    TPolynomial,
    TruncatedBivariateSeries,
    ej_from_generating_rhs,
    no_lhs_direct,
    no_rhs_product,
    partition_counts_from_product,
    phi_e_generating_lhs,
    phi_e_generating_rhs,
    series_equal,
)

ONE = TPolynomial([1])


def tp(*coeffs):
    return TPolynomial([Fraction(c) for c in coeffs])


def test_tpolynomial_arithmetic():
    a = TPolynomial({-1: 1, 0: 1})
    b = TPolynomial({1: 1, 0: -1})
    assert a * b == TPolynomial({1: 1, -1: -1})
    assert not (a - a)
    assert a.min_exponent == -1 and not a.is_polynomial()
    assert tp(1, 2).coefficients() == [1, 2]
    with pytest.raises(ValueError):
        a.coefficients()


def test_exp_of_simple_series():
    # exp(y) truncated: 1/n!
    s = TruncatedBivariateSeries(5, [TPolynomial(), ONE]).exp()
    assert [c[0] for c in s.coeffs] == [1, 1, Fraction(1, 2), Fraction(1, 6), Fraction(1, 24), Fraction(1, 120)]
    with pytest.raises(ValueError):
        TruncatedBivariateSeries(2, [ONE]).exp()


def test_no_lhs_low_coefficients():
    lhs = no_lhs_direct(3)
    assert lhs[0] == ONE
    assert lhs[1] == tp(1, -1)
    assert lhs[2] == no_rhs_product(3)[2]


def test_no_rhs_low_coefficients():
    rhs = no_rhs_product(4)
    assert rhs[0] == ONE
    assert rhs[1] == tp(1, -1)


def test_nekrasov_okounkov_order_10():
    assert series_equal(no_lhs_direct(10), no_rhs_product(10)).equal


def test_product_at_z0_counts_partitions():
    assert partition_counts_from_product(10) == [partition_count(n) for n in range(11)]


def test_generating_lhs_low_coefficients():
    lhs = phi_e_generating_lhs(2)
    assert lhs[0] == ONE
    assert lhs[1] == tp(-1, 1)
    assert lhs[2] == tp(Fraction(1, 2), Fraction(-5, 2), 2)


def test_generating_rhs_corrected_low_coefficients():
    rhs = phi_e_generating_rhs(2, CORRECTED)
    assert rhs[1] == tp(-1, 1)
    assert rhs[2] == tp(Fraction(1, 2), Fraction(-5, 2), 2)


def test_generating_rhs_as_printed_differs():
    rhs = phi_e_generating_rhs(2, AS_PRINTED)
    assert rhs[2] == tp(Fraction(1, 2), -3, Fraction(5, 2))
    cmp = series_equal(phi_e_generating_lhs(2), rhs)
    assert not cmp
    assert (cmp.outer_degree, cmp.inner_degree) == (2, 1)
    assert (cmp.left, cmp.right) == (Fraction(-5, 2), -3)


def test_generating_identity_order_8():
    assert series_equal(phi_e_generating_lhs(8), phi_e_generating_rhs(8, CORRECTED)).equal


def test_corrected_coefficients_are_polynomials():
    rhs = phi_e_generating_rhs(12, CORRECTED)
    for n, c in enumerate(rhs.coeffs):
        assert c.is_polynomial() and c.degree <= n


def test_as_printed_is_polynomial_but_wrong():
    # (1 - 1/t)^u only meets t^n with u <= n, so no negative powers survive
    rhs = phi_e_generating_rhs(6, AS_PRINTED)
    assert all(c.is_polynomial() and c.degree <= n for n, c in enumerate(rhs.coeffs))
    lhs = phi_e_generating_lhs(6)
    assert [lhs[n] == rhs[n] for n in range(7)] == [True, True] + [False] * 5


@pytest.mark.parametrize("n", range(0, 9))
def test_generating_rhs_vs_closed_form(n):
    for j in range(n + 1):
        assert ej_from_generating_rhs(j, n, order=8) == phi_ej_corrected(j, n)


def test_series_equal_reflexive_and_order_checks():
    s = no_rhs_product(5)
    assert series_equal(s, s)
    with pytest.raises(ValueError):
        series_equal(s, no_rhs_product(4))
    with pytest.raises(ValueError):
        phi_e_generating_rhs(3, "typo")
    with pytest.raises(ValueError):
        no_lhs_direct(21)
