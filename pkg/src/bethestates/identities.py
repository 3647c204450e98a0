"""q-series identities: fermionic level sums against bosonic alternating sums.

The fermionic side sums q**(l^2/p0) * V_l over all levels, where V_l is the
generating series of states at level l.  The bosonic side is an alternating
double sum whose kernel polynomials are the same for every rational p0.  For
integer p0 the bosonic side collapses further to the classical
Gordon-Andrews alternating sum and, via the Jacobi triple product, to
modulus-(2 p0 + 1) products.  All comparisons are exact and term-by-term up
to a truncation cutoff.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .configs import _context, enumerate_lambda
from .qalg import QPolynomial, QSeries, as_exp, gauss_binomial, product_expand
from .spectral import ChainSpec, coupling_matrix
from .tsdata import TSData, zone
from .util import PreconditionError, rat_str


# -- q-analog of the state count ------------------------------------------------

def gauss_general(top: int, b: int, base_sign: int = 1) -> QPolynomial:
    """Gaussian binomial extended to negative tops.

    For top < 0 the standard negation identity gives a signed Laurent
    polynomial whose value at q = 1 is the generalized binomial.
    """
    if b < 0:
        return QPolynomial.zero()
    if top >= 0:
        return gauss_binomial(top, b, base_sign)
    shift = Fraction(top * b) - Fraction(b * (b - 1), 2)
    poly = gauss_binomial(b - top - 1, b, 1) * QPolynomial.monomial(shift, (-1) ** b)
    return poly.subs_inverse() if base_sign == -1 else poly


def _quadratic_form(ts: TSData, lam) -> Fraction:
    """(1/2) lam~ B lam~^t = lam~ Theta lam~^t for the multiplicity vector."""
    theta = coupling_matrix(ts)
    signed = [((-1) ** zone(ts, j + 1)) * x for j, x in enumerate(lam)]
    total = Fraction(0)
    for i, si in enumerate(signed):
        if not si:
            continue
        row = theta.rows[i]
        total += si * sum(row[j] * sj for j, sj in enumerate(signed) if sj)
    return total


def q_count(ts: TSData, chain: ChainSpec, l: int) -> QPolynomial:
    """q-analog of the state count at level l (a Laurent polynomial).

    Each admissible multiplicity vector contributes its quadratic-form
    monomial times a product of Gaussian binomials in base q**(parity).
    Evaluating at q = 1 recovers the plain count.
    """
    ctx = _context(ts, chain, l)
    signs = [(-1) ** zone(ts, j) for j in range(1, ts.dim + 1)]
    out = QPolynomial.zero()
    for lam in enumerate_lambda(ts, l):
        tops = ctx.tops(lam)
        if tops is None:
            continue
        term = QPolynomial.monomial(_quadratic_form(ts, lam), 1)
        for t, x, eps in zip(tops, lam, signs):
            if x:
                term = term * gauss_general(t, x, eps)
                if term.is_zero():
                    break
        out = out + term
    return out


_EVAL1_CACHE: dict[tuple[int, int], int] = {}


def q_count_at_one(ts: TSData, chain: ChainSpec, l: int) -> int:
    """The q-analog evaluated at q = 1.

    Evaluation at q = 1 is a ring homomorphism, so the value of the full
    product polynomial equals the product of the factor values; this computes
    each Gaussian factor exactly as a polynomial and multiplies its
    coefficient sums, avoiding the polynomial product blow-up on large sweeps.
    """
    ctx = _context(ts, chain, l)
    total = 0
    for lam in enumerate_lambda(ts, l):
        tops = ctx.tops(lam)
        if tops is None:
            continue
        prod = 1
        for t, x in zip(tops, lam):
            if x:
                key = (t, x)
                val = _EVAL1_CACHE.get(key)
                if val is None:
                    val = gauss_general(t, x, 1).eval_at_one()
                    _EVAL1_CACHE[key] = val
                prod *= val
                if not prod:
                    break
        total += prod
    return total


# -- fermionic side --------------------------------------------------------------

def level_series(ts: TSData, l: int, cutoff) -> QSeries:
    """V_l: sum over level-l multiplicity vectors of the quadratic-form
    monomial divided by finite q-factorials in base q**(parity)."""
    cutoff = as_exp(cutoff)
    signs = [(-1) ** zone(ts, j) for j in range(1, ts.dim + 1)]
    acc = QSeries.zero(cutoff)
    for lam in enumerate_lambda(ts, l):
        term = _level_term(ts, lam, signs, Fraction(0), cutoff)
        if term is not None:
            acc = acc + term
    return acc


def _level_term(ts, lam, signs, extra_exp, cutoff):
    """One multiplicity vector's series, or None when nothing survives the
    cutoff (the exact minimal exponent is known in closed form)."""
    e0 = extra_exp + _quadratic_form(ts, lam)
    min_exp = e0 + sum(Fraction(x * (x + 1), 2) for x, s in zip(lam, signs) if s < 0)
    if min_exp > cutoff:
        return None
    term = QSeries.monomial(e0, 1, cutoff)
    for x, eps in zip(lam, signs):
        for i in range(1, x + 1):
            term = term.div_cyclotomic(eps * i)
    return term


def fermionic_sum(ts: TSData, cutoff) -> QSeries:
    """Sum of q**(l^2/p0) V_l over levels l >= 0, truncated at the cutoff.

    The level loop stops once the exact minimal exponent has exceeded the
    cutoff for numerator-of-p0 consecutive levels, which guards against
    non-monotone dips without assuming a growth bound.
    """
    cutoff = as_exp(cutoff)
    signs = [(-1) ** zone(ts, j) for j in range(1, ts.dim + 1)]
    window = ts.p0.numerator
    acc = QSeries.zero(cutoff)
    dead = 0
    l = 0
    while dead < window:
        lead = Fraction(l * l) / ts.p0
        live = False
        for lam in enumerate_lambda(ts, l):
            term = _level_term(ts, lam, signs, lead, cutoff)
            if term is not None:
                live = True
                acc = acc + term
        dead = 0 if live else dead + 1
        l += 1
        if l > 100000:
            raise AssertionError("level sum failed to terminate")
    return acc


# -- bosonic side ----------------------------------------------------------------

def kernel_poly(sign: int, k: int, m: int) -> QPolynomial:
    """The universal kernel polynomial; the same for every rational p0."""
    if sign not in (1, -1):
        raise PreconditionError("kernel sign must be +1 or -1")
    if k < m or m < 0:
        raise PreconditionError("kernel needs k >= m >= 0")
    if sign == 1:
        first, second = 0, 2 * k - m
    else:
        first, second = k + m, 0
    out = QPolynomial.monomial(first, 1) * gauss_binomial(k - 1, m, 1)
    out = out + QPolynomial.monomial(second, 1) * gauss_binomial(k - 1, m - 1, 1)
    return out


def kernel_offset(alpha: int, k: int, m: int) -> int:
    """Quadratic exponent correction; parity of alpha selects the binomial."""
    if alpha % 2 == 0:
        return comb(k - m, 2) if k - m >= 0 else 0
    return comb(m, 2)


def kernel_sum(k: int) -> QPolynomial:
    """Alternating m-sum of the positive-base kernels at fixed k."""
    if k < 1:
        raise PreconditionError("kernel sum needs k >= 1")
    out = QPolynomial.zero()
    for m in range(k + 1):
        mono = QPolynomial.monomial(Fraction(m * (m + 1), 2), (-1) ** m)
        out = out + mono * kernel_poly(1, k, m)
    return out


def _bosonic_exponent(ts: TSData, k: int, m: int) -> int:
    a = ts.alpha
    quad = (k * ts.y(a + 1) + m * ts.y(a)) * (k * ts.z(a) + m * ts.z(a - 1))
    return quad + kernel_offset(a, k, m)


def bosonic_sum(ts: TSData, cutoff) -> QSeries:
    """Alternating double sum over k >= m >= 0, (k, m) != (0, 0)."""
    cutoff = as_exp(cutoff)
    a = ts.alpha
    eps = 1 if a % 2 == 0 else -1
    acc = QSeries.one(cutoff)
    k = 1
    while True:
        exps = [_bosonic_exponent(ts, k, m) for m in range(k + 1)]
        if min(exps) > cutoff:
            break
        for m, e in enumerate(exps):
            if e > cutoff:
                continue
            if a % 2 == 0:
                sgn = (-1) ** (k + m)
            else:
                sgn = (-1) ** m
            poly = kernel_poly(eps, k, m) * QPolynomial.monomial(e, sgn)
            ser = poly.to_series(cutoff)
            for i in range(1, k + 1):
                ser = ser.div_cyclotomic(i)
            acc = acc + ser
        k += 1
    return acc


def collapsed_kernel(ts: TSData, k: int) -> QPolynomial:
    """The single-sum kernel L_k obtained by resumming the m index."""
    if k < 1:
        raise PreconditionError("collapsed kernel needs k >= 1")
    a = ts.alpha
    eps = 1 if a % 2 == 0 else -1
    ya, za1 = ts.y(a), ts.z(a - 1)
    cross = ts.y(a + 1) * za1 + 2 * ya * za1 + ya * ts.z(a)
    out = QPolynomial.zero()
    for m in range(k + 1):
        e = m * m * ya * za1 - k * m * cross + kernel_offset(a, k, k - m)
        out = out + QPolynomial.monomial(e, (-1) ** m) * kernel_poly(eps, k, k - m)
    return out


def bosonic_sum_collapsed(ts: TSData, cutoff) -> QSeries:
    """The bosonic side reorganized as a single sum over k."""
    cutoff = as_exp(cutoff)
    a = ts.alpha
    base = (ts.y(a + 1) + ts.y(a)) * (ts.z(a) + ts.z(a - 1))
    acc = QSeries.one(cutoff)
    k = 1
    while True:
        if min(_bosonic_exponent(ts, k, m) for m in range(k + 1)) > cutoff:
            break
        sgn = (-1) ** k if a % 2 else 1
        poly = collapsed_kernel(ts, k) * QPolynomial.monomial(k * k * base, sgn)
        ser = poly.to_series(cutoff)
        for i in range(1, k + 1):
            ser = ser.div_cyclotomic(i)
        acc = acc + ser
        k += 1
    return acc


# -- integer p0: Gordon-Andrews forms ---------------------------------------------

def _require_integer(ts: TSData) -> int:
    if not ts.is_integer():
        raise PreconditionError("this form needs integer p0")
    return int(ts.p0)


def gordon_andrews_sum(ts: TSData, cutoff) -> QSeries:
    """1 + sum over k of (-1)**k q**(k^2 p0 + k(k-1)/2) (1 + q**k), integer p0."""
    p0 = _require_integer(ts)
    cutoff = as_exp(cutoff)
    acc = QSeries.one(cutoff)
    k = 1
    while True:
        e = k * k * p0 + k * (k - 1) // 2
        if e > cutoff:
            break
        poly = QPolynomial({Fraction(e): (-1) ** k, Fraction(e + k): (-1) ** k})
        acc = acc + poly.to_series(cutoff)
        k += 1
    return acc


def gordon_andrews_products(ts: TSData, cutoff) -> tuple:
    """Modulus-(2 p0 + 1) product forms for integer p0.

    Returns (triple_product, residue_product): the first equals the fermionic
    sum itself; the second is the reciprocal product over residue classes
    n != 0, p0, p0+1 mod 2p0+1 and equals the fermionic sum divided by the
    Euler product.
    """
    p0 = _require_integer(ts)
    cutoff = as_exp(cutoff)
    mod = 2 * p0 + 1
    triple = product_expand(
        [(1, mod, 0), (1, mod, -(p0 + 1)), (1, mod, -p0)], cutoff)
    residues = [r for r in range(1, mod) if r not in (p0, p0 + 1)]
    residue_prod = product_expand([(-1, mod, r - mod) for r in residues], cutoff)
    return triple, residue_prod


def divide_by_euler(series: QSeries) -> QSeries:
    """Divide by the Euler product, i.e. multiply by the partition series."""
    out = series
    i = 1
    while i <= series.cutoff - (series.min_exp() or 0):
        out = out.div_cyclotomic(i)
        i += 1
    return out


# -- reports ----------------------------------------------------------------------

@dataclass(frozen=True)
class IdentityReport:
    p0: Fraction
    cutoff: Fraction
    lhs: QSeries
    rhs: QSeries
    agree: bool
    first_discrepancy: tuple | None

    def to_json_dict(self) -> dict:
        def series_terms(s: QSeries):
            return [[rat_str(e), s.terms[e]] for e in sorted(s.terms)]
        disc = None
        if self.first_discrepancy is not None:
            e, a, b = self.first_discrepancy
            disc = {"exponent": rat_str(e), "lhs": a, "rhs": b}
        return {
            "schema": "v1",
            "p0": rat_str(self.p0),
            "cutoff": rat_str(self.cutoff),
            "lhs": series_terms(self.lhs),
            "rhs": series_terms(self.rhs),
            "agree": self.agree,
            "first_discrepancy": disc,
        }


def check_identity(ts: TSData, cutoff) -> IdentityReport:
    """Compare the fermionic and bosonic sides term-by-term up to the cutoff."""
    cutoff = as_exp(cutoff)
    lhs = fermionic_sum(ts, cutoff)
    rhs = bosonic_sum(ts, cutoff)
    disc = lhs.first_discrepancy(rhs)
    return IdentityReport(ts.p0, cutoff, lhs, rhs, disc is None, disc)
