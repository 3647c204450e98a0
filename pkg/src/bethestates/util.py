"""Small shared helpers: exact parsing, fractional parts, optional process pool."""

from __future__ import annotations

import math
import os
import re
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction


class PreconditionError(ValueError):
    """An argument violates a documented precondition."""


class ParseError(ValueError):
    """Malformed textual input (CLI-facing)."""


_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


def parse_rational(text: str) -> Fraction:
    """Parse 'A' or 'A/B' into an exact Fraction.  Decimal literals are rejected."""
    text = text.strip()
    if not _RATIONAL_RE.match(text):
        raise ParseError(f"not a rational literal (expected A or A/B): {text!r}")
    if "/" in text:
        num, den = text.split("/")
        if int(den) == 0:
            raise ParseError(f"zero denominator: {text!r}")
        return Fraction(int(num), int(den))
    return Fraction(int(text))


def frac_part(x: Fraction) -> Fraction:
    """Fractional part in [0, 1), i.e. x - floor(x), also for negative x."""
    return x - math.floor(x)


def rat_str(x) -> str:
    """Canonical text form of a rational: '3', '-2', '16/7'."""
    return str(Fraction(x))


def binom(n: int, k: int) -> int:
    """C(n, k) for n, k >= 0; zero when k > n."""
    return math.comb(n, k)


def worker_cap() -> int:
    """Maximum worker processes, capped by the BETHE_THREADS environment variable."""
    raw = os.environ.get("BETHE_THREADS", "1")
    try:
        cap = int(raw)
    except ValueError:
        cap = 1
    return max(1, cap)


def parallel_map(fn, items):
    """Map fn over items, in order.  Uses processes only when BETHE_THREADS > 1.

    Results are reduced in input order regardless of completion order, so
    output is deterministic either way.
    """
    items = list(items)
    cap = worker_cap()
    if cap <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=min(cap, len(items))) as pool:
        return list(pool.map(fn, items))
