"""Exact arithmetic in the variable q: Laurent polynomials and truncated series.

Exponents are arbitrary rationals (Fraction), coefficients arbitrary-precision
integers; there is no floating point anywhere.  QPolynomial is exact and
finite.  QSeries carries a cutoff: exponents strictly greater than the cutoff
are unknown and silently discarded, and binary operations only ever tighten
the region of validity.  Values are immutable by convention; every operation
returns a fresh object.
"""

from __future__ import annotations

import heapq
from fractions import Fraction

from .util import PreconditionError


def as_exp(e) -> Fraction:
    return e if isinstance(e, Fraction) else Fraction(e)


def _merge(pairs) -> dict:
    terms: dict[Fraction, int] = {}
    for e, c in pairs:
        if not c:
            continue
        e = as_exp(e)
        c0 = terms.get(e)
        if c0 is None:
            terms[e] = c
        else:
            c0 += c
            if c0:
                terms[e] = c0
            else:
                del terms[e]
    return terms


class QPolynomial:
    """Finite Laurent-style polynomial: rational exponents, integer coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        if terms is None:
            self.terms = {}
        elif isinstance(terms, dict):
            self.terms = _merge(terms.items())
        else:
            self.terms = _merge(terms)

    @classmethod
    def zero(cls) -> "QPolynomial":
        return cls()

    @classmethod
    def one(cls) -> "QPolynomial":
        return cls({Fraction(0): 1})

    @classmethod
    def monomial(cls, exponent, coeff: int = 1) -> "QPolynomial":
        return cls({as_exp(exponent): coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def min_exp(self):
        return min(self.terms) if self.terms else None

    def max_exp(self):
        return max(self.terms) if self.terms else None

    def coeff(self, exponent) -> int:
        return self.terms.get(as_exp(exponent), 0)

    def eval_at_one(self) -> int:
        return sum(self.terms.values())

    def subs_inverse(self) -> "QPolynomial":
        """Substitute q -> 1/q (negate every exponent)."""
        return QPolynomial({-e: c for e, c in self.terms.items()})

    def __neg__(self) -> "QPolynomial":
        return QPolynomial({e: -c for e, c in self.terms.items()})

    def __add__(self, other):
        if isinstance(other, int):
            other = QPolynomial({Fraction(0): other})
        if not isinstance(other, QPolynomial):
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            c0 = out.get(e, 0) + c
            if c0:
                out[e] = c0
            else:
                out.pop(e, None)
        return QPolynomial(out)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = QPolynomial({Fraction(0): other})
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return QPolynomial({e: c * other for e, c in self.terms.items()})
        if not isinstance(other, QPolynomial):
            return NotImplemented
        out: dict[Fraction, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                c0 = out.get(e, 0) + c1 * c2
                if c0:
                    out[e] = c0
                else:
                    out.pop(e, None)
        return QPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "QPolynomial":
        if n < 0:
            raise PreconditionError("negative power of a polynomial")
        out = QPolynomial.one()
        for _ in range(n):
            out = out * self
        return out

    def shift(self, d) -> "QPolynomial":
        d = as_exp(d)
        return QPolynomial({e + d: c for e, c in self.terms.items()})

    def exact_div(self, other: "QPolynomial") -> "QPolynomial":
        """Exact division; raises ArithmeticError when the quotient is not exact."""
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return QPolynomial()
        rem = dict(self.terms)
        out: dict[Fraction, int] = {}
        d_lo = other.min_exp()
        c_lo = other.terms[d_lo]
        e_max = self.max_exp() - other.max_exp()
        while rem:
            e_r = min(rem)
            e = e_r - d_lo
            if e > e_max:
                raise ArithmeticError("inexact polynomial division")
            q, r = divmod(rem[e_r], c_lo)
            if r:
                raise ArithmeticError("inexact polynomial division")
            out[e] = q
            for e_o, c_o in other.terms.items():
                k = e_o + e
                c0 = rem.get(k, 0) - q * c_o
                if c0:
                    rem[k] = c0
                else:
                    rem.pop(k, None)
        return QPolynomial(out)

    def to_series(self, cutoff) -> "QSeries":
        return QSeries(self.terms, cutoff)

    def __eq__(self, other):
        if isinstance(other, int):
            other = QPolynomial({Fraction(0): other})
        if not isinstance(other, QPolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __repr__(self):
        return f"QPolynomial({_format_terms(self.terms)})"

    __str__ = __repr__


class QSeries:
    """Truncated formal series: terms known exactly for exponents <= cutoff."""

    __slots__ = ("terms", "cutoff")

    def __init__(self, terms, cutoff):
        cutoff = as_exp(cutoff)
        if isinstance(terms, dict):
            terms = terms.items()
        self.terms = {e: c for e, c in _merge(terms).items() if e <= cutoff}
        self.cutoff = cutoff

    @classmethod
    def zero(cls, cutoff) -> "QSeries":
        return cls({}, cutoff)

    @classmethod
    def one(cls, cutoff) -> "QSeries":
        return cls({Fraction(0): 1}, cutoff)

    @classmethod
    def monomial(cls, exponent, coeff, cutoff) -> "QSeries":
        return cls({as_exp(exponent): coeff}, cutoff)

    def is_zero(self) -> bool:
        return not self.terms

    def min_exp(self):
        return min(self.terms) if self.terms else None

    def coeff(self, exponent) -> int:
        return self.terms.get(as_exp(exponent), 0)

    def shift(self, d) -> "QSeries":
        """Multiply by q**d: exact relabeling, so the cutoff moves along."""
        d = as_exp(d)
        return QSeries({e + d: c for e, c in self.terms.items()}, self.cutoff + d)

    def truncated(self, cutoff) -> "QSeries":
        cutoff = as_exp(cutoff)
        if cutoff > self.cutoff:
            raise PreconditionError("cannot extend a series beyond its cutoff")
        return QSeries(self.terms, cutoff)

    def __neg__(self) -> "QSeries":
        return QSeries({e: -c for e, c in self.terms.items()}, self.cutoff)

    def __add__(self, other):
        if isinstance(other, int):
            other = QSeries({Fraction(0): other}, self.cutoff)
        elif isinstance(other, QPolynomial):
            other = other.to_series(self.cutoff)
        if not isinstance(other, QSeries):
            return NotImplemented
        cutoff = min(self.cutoff, other.cutoff)
        out = dict(self.terms)
        for e, c in other.terms.items():
            c0 = out.get(e, 0) + c
            if c0:
                out[e] = c0
            else:
                out.pop(e, None)
        return QSeries(out, cutoff)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = QPolynomial({Fraction(0): other})
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return QSeries({e: c * other for e, c in self.terms.items()}, self.cutoff)
        if isinstance(other, QPolynomial):
            other = other.to_series(self.cutoff - min(other.min_exp() or 0, 0))
        if not isinstance(other, QSeries):
            return NotImplemented
        # Retained coefficients must be exact: the unknown tail of one factor,
        # shifted by the partner's minimal exponent, bounds the valid region.
        ma = self.min_exp() or 0
        mb = other.min_exp() or 0
        cutoff = min(self.cutoff + min(mb, 0), other.cutoff + min(ma, 0))
        out: dict[Fraction, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                if e > cutoff:
                    continue
                c0 = out.get(e, 0) + c1 * c2
                if c0:
                    out[e] = c0
                else:
                    out.pop(e, None)
        return QSeries(out, cutoff)

    __rmul__ = __mul__

    def div_cyclotomic(self, step) -> "QSeries":
        """Divide by (1 - q**step), step != 0.

        For step > 0 this is multiplication by the geometric series
        1 + q**step + q**(2 step) + ...; a negative step is reduced to the
        positive case through 1/(1 - q**step) = -q**(-step)/(1 - q**(-step)).
        """
        step = as_exp(step)
        if step == 0:
            raise PreconditionError("cyclotomic step must be nonzero")
        if step < 0:
            return -(self.shift(-step).div_cyclotomic(-step))
        amounts = dict(self.terms)
        heap = list(amounts)
        heapq.heapify(heap)
        out: dict[Fraction, int] = {}
        while heap:
            e = heapq.heappop(heap)
            c = amounts.pop(e, 0)
            if not c:
                continue
            out[e] = c
            e2 = e + step
            if e2 <= self.cutoff:
                if e2 in amounts:
                    amounts[e2] += c
                else:
                    amounts[e2] = c
                    heapq.heappush(heap, e2)
        return QSeries(out, self.cutoff)

    def first_discrepancy(self, other: "QSeries", upto=None):
        """First (exponent, own coeff, other coeff) difference within the
        common region of validity, or None when the series agree there."""
        limit = min(self.cutoff, other.cutoff)
        if upto is not None:
            limit = min(limit, as_exp(upto))
        for e in sorted(set(self.terms) | set(other.terms)):
            if e > limit:
                break
            ca = self.terms.get(e, 0)
            cb = other.terms.get(e, 0)
            if ca != cb:
                return (e, ca, cb)
        return None

    def agrees_with(self, other: "QSeries", upto=None) -> bool:
        return self.first_discrepancy(other, upto) is None

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.terms == other.terms and self.cutoff == other.cutoff

    def __repr__(self):
        return f"QSeries({_format_terms(self.terms)} + O(q^{self.cutoff}))"

    __str__ = __repr__


def _format_terms(terms: dict) -> str:
    if not terms:
        return "0"
    parts = []
    for e in sorted(terms):
        c = terms[e]
        if e == 0:
            parts.append(f"{c}")
        elif e.denominator == 1:
            parts.append(f"{c}*q^{e}")
        else:
            parts.append(f"{c}*q^({e})")
    return " + ".join(parts)


# -- function-style aliases for the series operations ------------------------

def qs_add(a: QSeries, b: QSeries) -> QSeries:
    return a + b


def qs_mul(a: QSeries, b: QSeries) -> QSeries:
    return a * b


def qs_div_cyclotomic(a: QSeries, step) -> QSeries:
    return a.div_cyclotomic(step)


def pochhammer(step_sign: int, n: int) -> QPolynomial:
    """Product of (1 - x**i) for i = 1..n with x = q**step_sign."""
    if step_sign not in (1, -1):
        raise PreconditionError("step_sign must be +1 or -1")
    if n < 0:
        raise PreconditionError("pochhammer length must be nonnegative")
    out = QPolynomial.one()
    for i in range(1, n + 1):
        out = out * QPolynomial({Fraction(0): 1, Fraction(step_sign * i): -1})
    return out


_GAUSS_CACHE: dict[tuple[int, int], QPolynomial] = {}


def gauss_binomial(m: int, n: int, base_sign: int = 1) -> QPolynomial:
    """Gaussian binomial coefficient in base q**base_sign.

    Zero unless 0 <= n <= m; otherwise the exact quotient
    (x;x)_m / ((x;x)_n (x;x)_{m-n}) with x = q**base_sign, computed one
    factor pair at a time by exact polynomial division (every intermediate is
    itself a Gaussian binomial, so each division is exact).  The inverse base
    is an exponent relabeling.
    """
    if base_sign not in (1, -1):
        raise PreconditionError("base_sign must be +1 or -1")
    if not (0 <= n <= m):
        return QPolynomial.zero()
    key = (m, n)
    poly = _GAUSS_CACHE.get(key)
    if poly is None:
        small = min(n, m - n)
        poly = QPolynomial.one()
        for i in range(1, small + 1):
            poly = poly * QPolynomial({Fraction(0): 1, Fraction(m - small + i): -1})
            poly = poly.exact_div(QPolynomial({Fraction(0): 1, Fraction(i): -1}))
        _GAUSS_CACHE[key] = poly
    if base_sign == -1:
        return poly.subs_inverse()
    return poly


def product_expand(factors, cutoff) -> QSeries:
    """Expand a product of factors (1 - q**(a n + b))**(sign) over n >= 1.

    Each factor is a triple (sign, a, b) with sign in {+1, -1}; sign -1 means
    the reciprocal 1/(1 - q**(a n + b)).  Every progression must have a > 0
    and strictly positive exponents, otherwise the formal product diverges.
    """
    cutoff = as_exp(cutoff)
    out = QSeries.one(cutoff)
    for sign, a, b in factors:
        a = as_exp(a)
        b = as_exp(b)
        if sign not in (1, -1):
            raise PreconditionError("factor sign must be +1 or -1")
        if a <= 0 or a + b <= 0:
            raise PreconditionError(
                f"progression {a}*n+{b} must have positive slope and exponents")
        n = 1
        while True:
            e = a * n + b
            if e > cutoff:
                break
            if sign == 1:
                out = out * QPolynomial({Fraction(0): 1, e: -1})
            else:
                out = out.div_cyclotomic(e)
            n += 1
    return out
