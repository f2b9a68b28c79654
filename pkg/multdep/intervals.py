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
Certified interval helpers on top of mpmath's ``iv`` context.

Every irrational quantity is carried as an mpmath interval; decisions are
taken on the exact rational endpoints, so an undecided comparison is
reported as ``None`` and the caller escalates precision.

mpmath keeps its precision on process-wide contexts. working_precision and
decimal_precision hold one re-entrant lock while they change it, so calls
from several threads run their precision-sensitive sections one at a time.
"""

import logging
import threading
from contextlib import contextmanager
from fractions import Fraction
from math import floor

import mpmath
from mpmath import iv, libmp

from .conf import resolve
from .exceptions import PrecisionCeilingReached

logger = logging.getLogger(__name__)

_precision_lock = threading.RLock()


@contextmanager
def working_precision(bits):
    """Temporarily set the interval context precision to ``bits``."""
    with _precision_lock:
        saved = iv.prec
        iv.prec = int(bits)
        try:
            yield
        finally:
            iv.prec = saved


@contextmanager
def decimal_precision(digits):
    """mpmath.workdps(digits) under the precision lock."""
    with _precision_lock, mpmath.workdps(digits):
        yield


def precision_ladder(start=None, ceiling=None):
    """Yield start, 2*start, 4*start, ... up to the ceiling (inclusive)."""
    bits = resolve(start, "START_PRECISION_BITS")
    ceiling = resolve(ceiling, "PRECISION_CEILING_BITS")
    while bits <= ceiling:
        yield bits
        bits *= 2


def ceiling_reached(operation, ceiling=None):
    ceiling = resolve(ceiling, "PRECISION_CEILING_BITS")
    return PrecisionCeilingReached(
        f"{operation} undecided at the precision ceiling of {ceiling} bits"
    )


def exact(q):
    """Tight interval around the rational q at the current precision."""
    q = Fraction(q)
    if q.denominator == 1:
        return iv.mpf(q.numerator)
    return iv.mpf(q.numerator) / q.denominator


def _raw_to_fraction(raw):
    sign, _, _, _ = raw
    man, exp = libmp.to_man_exp(raw)
    value = Fraction(man) * (Fraction(2) ** exp)
    return -value if sign else value


def bounds(x):
    """Exact rational endpoints (lo, hi) of a real interval."""
    lo, hi = x._mpi_
    return _raw_to_fraction(lo), _raw_to_fraction(hi)


def width(x):
    lo, hi = bounds(x)
    return hi - lo


def compare(x, q):
    """
    Certified sign of x - q: -1, 1, or None when the interval contains q.

    Zero is never certified, since x is treated as irrational.
    """
    lo, hi = bounds(x)
    q = Fraction(q)
    if hi < q:
        return -1
    if lo > q:
        return 1
    return None


def certified_floor(x):
    """floor(x) when the whole interval shares it, else None."""
    lo, hi = bounds(x)
    f = floor(lo)
    return f if floor(hi) == f else None


def log(q):
    return iv.log(exact(q))


def sqrt(q):
    return iv.sqrt(exact(q))


def cube_root(q):
    """Real cube root of a positive rational, as exp(log(q)/3)."""
    return iv.exp(iv.log(exact(q)) / 3)


def pi():
    return +iv.pi


class ComplexInterval:
    """Rectangular complex interval built from two real mpmath intervals."""

    def __init__(self, re, im=None):
        self.re = re if hasattr(re, "_mpi_") else exact(re)
        if im is None:
            self.im = iv.mpf(0)
        else:
            self.im = im if hasattr(im, "_mpi_") else exact(im)

    @classmethod
    def from_quadratic(cls, value):
        """Embed an exact QuadraticNumber (or rational) into C."""
        from .exact import QuadraticNumber

        if not isinstance(value, QuadraticNumber):
            return cls(Fraction(value))
        re = exact(value.real_part())
        im = exact(value.y)
        if value.d == -3:
            im = im * iv.sqrt(3) / 2
        return cls(re, im)

    def __add__(self, other):
        other = _as_complex(other)
        return ComplexInterval(self.re + other.re, self.im + other.im)

    def __sub__(self, other):
        other = _as_complex(other)
        return ComplexInterval(self.re - other.re, self.im - other.im)

    def __neg__(self):
        return ComplexInterval(-self.re, -self.im)

    def __mul__(self, other):
        other = _as_complex(other)
        return ComplexInterval(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def scale(self, factor):
        factor = factor if hasattr(factor, "_mpi_") else exact(factor)
        return ComplexInterval(self.re * factor, self.im * factor)

    def abs2(self):
        return self.re**2 + self.im**2

    def inverse(self):
        n = self.abs2()
        return ComplexInterval(self.re / n, -self.im / n)

    def __pow__(self, exponent):
        base = self if exponent >= 0 else self.inverse()
        e = abs(int(exponent))
        result = ComplexInterval(iv.mpf(1))
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def abs2_upper(self):
        return bounds(self.abs2())[1]

    def abs2_lower(self):
        lo = bounds(self.abs2())[0]
        return max(lo, Fraction(0))


def _as_complex(value):
    if isinstance(value, ComplexInterval):
        return value
    return ComplexInterval.from_quadratic(value)


def unit_circle(numerator, denominator):
    """Interval for exp(2*pi*i*numerator/denominator)."""
    angle = 2 * iv.pi * numerator / denominator
    return ComplexInterval(iv.cos(angle), iv.sin(angle))


# Decimal rendering with exact integer arithmetic


def _decimal_exponent(value):
    """e with 10^e <= value < 10^(e+1), for value > 0."""
    e = len(str(value.numerator)) - len(str(value.denominator))
    while Fraction(10) ** e > value:
        e -= 1
    while Fraction(10) ** (e + 1) <= value:
        e += 1
    return e


def to_decimal(value, digits=None, rounding="nearest"):
    """
    Render a rational as a decimal with ``digits`` significant digits.

    Args:
        value: Exact rational
        digits: Significant digits (MULTDEP_DECIMAL_DIGITS)
        rounding: "nearest", "floor" or "ceiling"

    Returns:
        Plain positional notation, switching to an exponent for very small
        or very large magnitudes
    """
    digits = resolve(digits, "DECIMAL_DIGITS")
    value = Fraction(value)
    if value == 0:
        return "0"
    negative = value < 0
    magnitude = -value if negative else value
    e = _decimal_exponent(magnitude)
    shift = digits - 1 - e
    scaled = magnitude * Fraction(10) ** shift
    if rounding == "nearest":
        mantissa = floor(scaled + Fraction(1, 2))
    else:
        # Directed rounding acts on the signed value
        toward_zero = (rounding == "floor") != negative
        mantissa = floor(scaled) if toward_zero else -floor(-scaled)
    if mantissa >= 10**digits:
        mantissa //= 10
        e += 1
        shift -= 1
    text = _place_point(mantissa, shift, e, digits)
    return "-" + text if negative else text


def _place_point(mantissa, shift, e, digits):
    if -7 < e < 21:
        if shift <= 0:
            return str(mantissa * 10 ** (-shift))
        body = str(mantissa).rjust(shift + 1, "0")
        integer, fraction = body[:-shift], body[-shift:].rstrip("0")
        return f"{integer}.{fraction}" if fraction else integer
    body = str(mantissa)
    lead, rest = body[0], body[1:].rstrip("0")
    return f"{lead}.{rest}e{e}" if rest else f"{lead}e{e}"


def interval_to_decimals(x, digits=None):
    """Outward-rounded decimal strings for the endpoints of x."""
    lo, hi = x if isinstance(x, tuple) else bounds(x)
    return (
        to_decimal(lo, digits, rounding="floor"),
        to_decimal(hi, digits, rounding="ceiling"),
    )


def midpoint_decimal(x, digits=None):
    lo, hi = x if isinstance(x, tuple) else bounds(x)
    return to_decimal((lo + hi) / 2, digits)
