from fractions import Fraction

import pytest

from bethestates.identities import (bosonic_sum, bosonic_sum_collapsed,
                                    check_identity, collapsed_kernel, divide_by_euler,
                                    fermionic_sum, gauss_general,
                                    gordon_andrews_products, gordon_andrews_sum,
                                    kernel_offset, kernel_poly, kernel_sum,
                                    level_series, q_count, q_count_at_one)
from bethestates.configs import count_xxz_general
from bethestates.qalg import QPolynomial, QSeries, pochhammer
from bethestates.spectral import ChainSpec
from bethestates.tsdata import compute_ts
from bethestates.util import PreconditionError

F = Fraction


# -- kernels -----------------------------------------------------------------------

def test_kernel_poly_basics():
    assert kernel_poly(1, 1, 0) == QPolynomial.one()
    assert kernel_poly(-1, 1, 0) == QPolynomial.monomial(1, 1)
    # both binomials vanish once m exceeds the window
    assert kernel_poly(1, 2, 2) == QPolynomial.monomial(2, 1)  # only second term
    with pytest.raises(PreconditionError):
        kernel_poly(1, 1, 2)


def test_kernel_offset_parity():
    from math import comb
    for k in range(6):
        for m in range(k + 1):
            assert kernel_offset(0, k, m) == comb(k - m, 2)
            assert kernel_offset(1, k, m) == comb(m, 2)


def test_kernel_sum_closed_form():
    for k in range(1, 13):
        want = QPolynomial({0: 1, k: 1}) * pochhammer(1, k)
        assert kernel_sum(k) == want


def test_collapsed_kernel_at_one_vanishes_for_integer_p0():
    ts = compute_ts(5)
    for k in range(1, 9):
        assert collapsed_kernel(ts, k).eval_at_one() == 0


def test_gauss_general_negative_top():
    assert gauss_general(-1, 1) == QPolynomial.monomial(-1, -1)
    assert gauss_general(-1, 0) == QPolynomial.one()
    from bethestates.configs import signed_binom
    for t in range(-4, 3):
        for b in range(5):
            assert gauss_general(t, b).eval_at_one() == signed_binom(t, b)


# -- q-analog of the count -----------------------------------------------------------

def test_q_count_example3():
    ts = compute_ts(6)
    chain = ChainSpec(6, [(3, 5)])
    poly = q_count(ts, chain, 5)
    assert poly.eval_at_one() == 101
    assert q_count_at_one(ts, chain, 5) == 101


def test_q_count_level_zero():
    ts = compute_ts(6)
    chain = ChainSpec(6, [(3, 5)])
    assert q_count(ts, chain, 0) == QPolynomial.one()


def test_q_count_specializes_to_count_all_levels():
    ts = compute_ts(6)
    chain = ChainSpec(6, [(3, 5)])
    for l in range(16):
        assert q_count(ts, chain, l).eval_at_one() == count_xxz_general(ts, chain, l)
        assert q_count_at_one(ts, chain, l) == count_xxz_general(ts, chain, l)


# -- fermionic side -------------------------------------------------------------------

def test_level_series_zero():
    ts = compute_ts(F(16, 7))
    assert level_series(ts, 0, 10) == QSeries.one(10)


def test_level_series_one_integer_p0():
    # level 1 has exactly two unit vectors (the two length-1 strings);
    # at p0 = 2 their contributions cancel exactly
    ts = compute_ts(2)
    assert level_series(ts, 1, 12).is_zero()


def test_level_series_one_p0_three():
    # hand expansion: q^(2/3)/(1-q) - q^(1/3)(q/(1-q)) = (q^(2/3)-q^(4/3))/(1-q)...
    # computed independently below from the quadratic form values
    ts = compute_ts(3)
    theta = [[F(2, 3), F(1, 3), F(1, 3)],
             [F(1, 3), F(2, 3), F(2, 3)],
             [F(1, 3), F(2, 3), F(-1, 3)]]
    s1 = QSeries.monomial(theta[0][0], 1, 8).div_cyclotomic(1)
    s3 = QSeries.monomial(theta[2][2], 1, 8).div_cyclotomic(-1)
    want = s1 + s3
    assert level_series(ts, 1, 8).first_discrepancy(want) is None


def test_fermionic_sum_leading_term():
    for p0 in (2, 3, F(5, 2), F(16, 7)):
        ts = compute_ts(p0)
        s = fermionic_sum(ts, 6)
        assert s.coeff(0) == 1


def test_integer_p0_exponents_are_integers():
    for p0 in (2, 3, 4):
        ts = compute_ts(p0)
        s = fermionic_sum(ts, 15)
        assert all(e.denominator == 1 for e in s.terms)


# -- identity checks -------------------------------------------------------------------

def test_identity_rational_5_2_frozen():
    # both sides reduce to 1 + q^11 + q^12 at this cutoff (hand-derived from
    # the k=1, m=0 bosonic term q^10 * q/(1-q))
    ts = compute_ts(F(5, 2))
    lhs = fermionic_sum(ts, 12)
    rhs = bosonic_sum(ts, 12)
    want = {F(0): 1, F(11): 1, F(12): 1}
    assert lhs.terms == want
    assert rhs.terms == want


def test_identity_rational_7_2_frozen():
    # first bosonic term: exponent y_2*z_1 = 14 times the kernel q, giving
    # q^15/(1-q); at cutoff 15 both sides are exactly 1 + q^15
    ts = compute_ts(F(7, 2))
    want = {F(0): 1, F(15): 1}
    assert fermionic_sum(ts, 15).terms == want
    assert bosonic_sum(ts, 15).terms == want


def test_identity_wider_rational_sweep():
    for p0 in (F(9, 4), F(13, 5), F(8, 5)):
        ts = compute_ts(p0)
        lhs = fermionic_sum(ts, 14)
        assert lhs.first_discrepancy(bosonic_sum(ts, 14)) is None, p0
        assert lhs.first_discrepancy(bosonic_sum_collapsed(ts, 14)) is None, p0


def test_q_count_full_polynomial_rational_p0():
    ts = compute_ts(F(16, 7))
    chain = ChainSpec(F(16, 7), [(1, 3)])
    for l in range(4):
        assert q_count(ts, chain, l).eval_at_one() == count_xxz_general(ts, chain, l)


def test_identity_p0_2_vs_modulus5_product():
    ts = compute_ts(2)
    lhs = fermionic_sum(ts, 10)
    triple, _ = gordon_andrews_products(ts, 10)
    assert lhs.first_discrepancy(triple) is None
    assert lhs.coeff(0) == 1 and lhs.coeff(2) == -1 and lhs.coeff(3) == -1


def test_identity_report():
    ts = compute_ts(F(7, 3))
    rep = check_identity(ts, 10)
    assert rep.agree and rep.first_discrepancy is None
    d = rep.to_json_dict()
    assert d["schema"] == "v1" and d["agree"] is True and d["p0"] == "7/3"


def test_collapsed_equals_double_sum():
    for p0 in (2, 3, F(5, 2), F(7, 3)):
        ts = compute_ts(p0)
        a = bosonic_sum(ts, 14)
        b = bosonic_sum_collapsed(ts, 14)
        assert a.first_discrepancy(b) is None, p0


def test_gordon_andrews_sum_matches():
    for p0 in (2, 3):
        ts = compute_ts(p0)
        lhs = fermionic_sum(ts, 15)
        assert lhs.first_discrepancy(gordon_andrews_sum(ts, 15)) is None


def test_residue_product_form():
    ts = compute_ts(2)
    lhs = fermionic_sum(ts, 12)
    _, residue = gordon_andrews_products(ts, 12)
    assert divide_by_euler(lhs).first_discrepancy(residue) is None


def test_gordon_andrews_needs_integer():
    ts = compute_ts(F(5, 2))
    with pytest.raises(PreconditionError):
        gordon_andrews_sum(ts, 5)
    with pytest.raises(PreconditionError):
        gordon_andrews_products(ts, 5)
