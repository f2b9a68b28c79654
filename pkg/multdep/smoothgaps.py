# Copyright (C) 2026 Redcar & Cleveland Borough Council
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU Affero General Public License as published by
# the Free Software Foundation, version 3.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU Affero General Public License for more details.
#
# You should have received a copy of the GNU Affero General Public License
# along with this program.  If not, see <https://www.gnu.org/licenses/>.

"""
Smooth numbers, their gaps, and the linear forms in two logarithms behind
the gap bounds.

This module provides:
- smooth_stream: increasing S-smooth integers up to N (heap merge)
- gap_table / fit_gap_exponents: normalized gaps and fitted exponents
- cf_convergents: certified continued-fraction convergents of log p/log q
- gouillon_A: the explicit constant A and the derived exponent c0
- linear_form: certified enclosure of |r log q - s log p|
"""

import heapq
import logging
from dataclasses import dataclass
from fractions import Fraction
from math import floor
from typing import Optional, Tuple

import mpmath
from mpmath import iv
from sympy import isprime

from .computation_logger import computation_logger
from .conf import resolve
from .exceptions import PreconditionViolation, WitnessVerificationError
from .intervals import (
    bounds,
    ceiling_reached,
    certified_floor,
    decimal_precision,
    exact,
    interval_to_decimals,
    midpoint_decimal,
    precision_ladder,
    to_decimal,
    working_precision,
)

logger = logging.getLogger(__name__)

MAX_PRIMES = 6
MAX_CONVERGENTS = 60
GOUILLON_FACTOR = Fraction(368208, 10)


@dataclass(frozen=True)
class SmoothTerm:
    index: int
    value: int
    exponents: Tuple[int, ...]


@dataclass(frozen=True)
class GapRecord:
    """Gap after m_j with the statistic g_j (log m_j)^theta / m_j."""

    index: int
    m: int
    gap: int
    normalized: Tuple[Fraction, Fraction]

    @property
    def midpoint(self):
        lo, hi = self.normalized
        return (lo + hi) / 2

    def as_row(self, digits=None):
        return [self.index, self.m, self.gap, midpoint_decimal(self.normalized, digits)]


@dataclass(frozen=True)
class GapSummary:
    records: int
    largest: Optional[GapRecord]
    smallest: Optional[GapRecord]

    def as_dict(self, digits=None):
        def row(record):
            if record is None:
                return None
            return {"m": record.m, "gap": record.gap, "normalized": record.as_row(digits)[3]}

        return {"records": self.records, "max": row(self.largest), "min": row(self.smallest)}


@dataclass(frozen=True)
class Convergent:
    """r/s with a certified enclosure of |log p/log q - r/s|."""

    index: int
    numerator: int
    denominator: int
    error: Tuple[Fraction, Fraction]

    def as_dict(self, digits=None):
        lo, hi = interval_to_decimals(self.error, digits)
        return {
            "j": self.index,
            "r": self.numerator,
            "s": self.denominator,
            "error": [lo, hi],
        }


@dataclass(frozen=True)
class GouillonConstant:
    p: int
    q: int
    value: str
    c0: Fraction

    def as_dict(self):
        return {"A": self.value, "c0": str(self.c0)}


@dataclass(frozen=True)
class LinearForm:
    r: int
    s: int
    p: int
    q: int
    enclosure: Tuple[Fraction, Fraction]
    exponent: Optional[str]

    def as_dict(self, digits=None):
        lo, hi = interval_to_decimals(self.enclosure, digits)
        return {
            "value": midpoint_decimal(self.enclosure, digits),
            "lo": lo,
            "hi": hi,
            "exponent": self.exponent,
        }


def _check_primes(primes):
    primes = sorted(set(int(p) for p in primes))
    if not 1 <= len(primes) <= MAX_PRIMES:
        raise PreconditionViolation(f"need between 1 and {MAX_PRIMES} distinct primes")
    for p in primes:
        if not isprime(p):
            raise PreconditionViolation(f"{p} is not prime")
    return tuple(primes)


def _check_pair(p, q):
    if not (isprime(p) and isprime(q) and p < q):
        raise PreconditionViolation("need primes p < q")


# Smooth numbers


def smooth_stream(primes, limit):
    """
    Yield every integer <= limit whose prime factors lie in ``primes``,
    in increasing order and starting with 1.

    A min-heap merges the products m*p; equal values are popped once.
    """
    primes = _check_primes(primes)
    if limit < 1:
        raise PreconditionViolation("limit must be at least 1")
    heap = [(1, (0,) * len(primes))]
    previous = None
    index = 0
    while heap:
        value, exponents = heapq.heappop(heap)
        if value == previous:
            continue
        previous = value
        index += 1
        yield SmoothTerm(index, value, exponents)
        for i, p in enumerate(primes):
            if value * p <= limit:
                bumped = exponents[:i] + (exponents[i] + 1,) + exponents[i + 1 :]
                heapq.heappush(heap, (value * p, bumped))


def _normalized(gap, m, theta):
    """Interval for gap * (log m)^theta / m."""
    if theta == 0:
        value = exact(Fraction(gap, m))
    elif m == 1:
        return Fraction(0), Fraction(0)
    else:
        log_m = iv.log(exact(m))
        value = exact(gap) * iv.exp(exact(theta) * iv.log(log_m)) / m
    return bounds(value)


def gap_table(primes, limit, theta=0, digits=None):
    """
    Gaps between consecutive smooth numbers up to ``limit``.

    Args:
        primes: 1 to 6 distinct primes
        limit: N >= 2; pairs with m_(j+1) <= N are recorded
        theta: Non-negative rational exponent of the normalization

    Returns:
        (records, summary); the summary covers records with m_j^2 >= N
    """
    if limit < 2:
        raise PreconditionViolation("gap tables need N >= 2")
    theta = Fraction(theta)
    if theta < 0:
        raise PreconditionViolation("theta must be non-negative")
    digits = resolve(digits, "DECIMAL_DIGITS")
    bits = int(digits * 3.33) + 32
    terms = [t.value for t in smooth_stream(primes, limit)]
    records = []
    with working_precision(bits):
        for j, (m, following) in enumerate(zip(terms, terms[1:]), start=1):
            gap = following - m
            records.append(GapRecord(j, m, gap, _normalized(gap, m, theta)))
    tail = [r for r in records if r.m * r.m >= limit]
    summary = GapSummary(
        len(tail),
        max(tail, key=lambda r: r.midpoint) if tail else None,
        min(tail, key=lambda r: r.midpoint) if tail else None,
    )
    return records, summary


@dataclass(frozen=True)
class GapExponentFit:
    m: int
    gap: int
    exponent: mpmath.mpf


def fit_gap_exponents(records, digits=None):
    """
    Fitted exponents c_j = log(m_j/g_j) / log log m_j for m_j >= 3.

    Returns:
        (fits, largest, smallest); a report only, the bounds carry o(1) terms
    """
    fits = []
    with decimal_precision(resolve(digits, "DECIMAL_DIGITS") + 10):
        for record in records:
            if record.m < 3:
                continue
            m = mpmath.mpf(record.m)
            c = mpmath.log(m / record.gap) / mpmath.log(mpmath.log(m))
            fits.append(GapExponentFit(record.m, record.gap, c))
    if not fits:
        return fits, None, None
    return (
        fits,
        max(fits, key=lambda f: f.exponent),
        min(fits, key=lambda f: f.exponent),
    )


# Continued fractions


def partial_quotients(value, limit):
    """Continued-fraction quotients of a rational, at most ``limit`` of them."""
    quotients = []
    value = Fraction(value)
    while len(quotients) < limit:
        a = floor(value)
        quotients.append(a)
        rest = value - a
        if rest == 0:
            break
        value = 1 / rest
    return quotients


def certified_partial_quotients(lo, hi, limit):
    """Quotients shared by both endpoints, hence by every number between."""
    cap = limit + 2
    low, high = partial_quotients(lo, cap), partial_quotients(hi, cap)
    shared = []
    for a, b in zip(low, high):
        if a != b:
            break
        shared.append(a)
    # The last quotient of a terminating expansion is not shared by the interior
    shortest = min(len(low), len(high))
    if shared and len(shared) == shortest and shortest < cap:
        shared.pop()
    return shared[:limit]


def convergents_from(quotients):
    r0, s0, r1, s1 = 1, 0, quotients[0], 1
    yield r1, s1
    for a in quotients[1:]:
        r0, s0, r1, s1 = r1, s1, a * r1 + r0, a * s1 + s0
        yield r1, s1


def _log_ratio(p, q):
    return iv.log(exact(p)) / iv.log(exact(q))


def cf_convergents(p, q, count, ceiling=None):
    """
    Certified convergents r_j/s_j of log p / log q, j = 0..count-1.

    Precision doubles until count + 1 partial quotients are certified by the
    enclosure and agree with the previous precision level.

    Raises:
        PreconditionViolation: Unless p < q are primes and 1 <= count <= 60
        PrecisionCeilingReached: If the ceiling is reached first
    """
    _check_pair(p, q)
    if not 1 <= count <= MAX_CONVERGENTS:
        raise PreconditionViolation(f"count must be in 1..{MAX_CONVERGENTS}")
    previous = None
    for bits in precision_ladder(ceiling=ceiling):
        with working_precision(bits):
            lo, hi = bounds(_log_ratio(p, q))
        quotients = certified_partial_quotients(lo, hi, count + 1)
        if len(quotients) == count + 1 and quotients == previous:
            return _build_convergents(quotients, lo, hi, count)
        previous = quotients if len(quotients) == count + 1 else None
        computation_logger.log_precision("cf_convergents", bits * 2, "quotients unsettled")
    raise ceiling_reached("cf_convergents", ceiling)


def _build_convergents(quotients, lo, hi, count):
    pairs = list(convergents_from(quotients))
    result = []
    for j in range(count):
        r, s = pairs[j]
        target = Fraction(r, s)
        errors = sorted((abs(lo - target), abs(hi - target)))
        convergent = Convergent(j, r, s, (errors[0], errors[1]))
        if errors[1] * s * pairs[j + 1][1] >= 1:
            raise WitnessVerificationError(f"convergent {r}/{s} breaks the error law")
        result.append(convergent)
    return result


# Linear forms in two logarithms


def _significant(lo, hi, digits):
    a, b = to_decimal(lo, digits), to_decimal(hi, digits)
    return a if a == b else None


def gouillon_A(p, q, ceiling=None):
    """
    A = 36820.8 * max(1, log p) * log q to 10 significant digits, and the
    exponent c0 = 1/ceil(A).
    """
    _check_pair(p, q)
    for bits in precision_ladder(ceiling=ceiling):
        with working_precision(bits):
            log_p = iv.log(exact(p))
            factor = log_p if p > 2 else iv.mpf(1)
            value = exact(GOUILLON_FACTOR) * factor * iv.log(exact(q))
            lo, hi = bounds(value)
            text = _significant(lo, hi, 10)
            whole = certified_floor(value)
        if text is not None and whole is not None:
            return GouillonConstant(p, q, text, Fraction(1, whole + 1))
    raise ceiling_reached("gouillon_A", ceiling)


def linear_form(r, s, p=2, q=3, ceiling=None, digits=None):
    """
    Certified enclosure of |r log q - s log p| of relative width <= 2^-64.

    Also reports log(value)/log R with R = max(r, s), or None when R = 1.

    Raises:
        PreconditionViolation: If r or s is below 1
        PrecisionCeilingReached: If the enclosure cannot be tightened
    """
    if r < 1 or s < 1:
        raise PreconditionViolation("r and s must be positive")
    _check_pair(p, q)
    for bits in precision_ladder(ceiling=ceiling):
        with working_precision(bits):
            lo, hi = bounds(r * iv.log(exact(q)) - s * iv.log(exact(p)))
        if hi < 0:
            lo, hi = -hi, -lo
        if lo > 0 and (hi - lo) * 2**64 <= lo:
            return LinearForm(r, s, p, q, (lo, hi), _form_exponent((lo, hi), max(r, s), digits))
        computation_logger.log_precision("linear_form", bits * 2, "enclosure too wide")
    raise ceiling_reached("linear_form", ceiling)


def _form_exponent(enclosure, R, digits=None):
    if R == 1:
        return None
    digits = resolve(digits, "DECIMAL_DIGITS")
    middle = (enclosure[0] + enclosure[1]) / 2
    with decimal_precision(digits + 10):
        value = mpmath.mpf(middle.numerator) / middle.denominator
        return mpmath.nstr(mpmath.log(value) / mpmath.log(R), digits)
