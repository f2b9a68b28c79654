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
Exact numbers: rationals and elements of the imaginary quadratic fields
Q(i) and Q(sqrt(-3)).

A quadratic element is stored as x + y*tau with rational x, y, where
tau = i for d = -1 and tau = (1 + sqrt(-3))/2 for d = -3. Rationals are
plain ``fractions.Fraction`` values.

This module provides:
- The supported rings (Z, Q, Z[i], Z[w]) and their unit groups
- QuadraticNumber arithmetic (exact, immutable)
- Parsing of command-line strings and canonical string formatting
"""

import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Union

from .exceptions import MixedRings, ParseError, ZeroInput


class Ring(Enum):
    """Rings of coordinates understood by the toolkit."""

    Z = "Z"
    Q = "Q"
    ZI = "Zi"
    ZW = "Zw"

    @property
    def d(self):
        """Return -1 or -3 for the quadratic rings, None otherwise."""
        return {Ring.ZI: -1, Ring.ZW: -3}.get(self)

    @property
    def is_quadratic(self):
        return self.d is not None

    @property
    def unit_order(self):
        """Number of roots of unity w in the ring."""
        return {Ring.Z: 2, Ring.Q: 2, Ring.ZI: 4, Ring.ZW: 6}[self]

    @property
    def discriminant(self):
        return {Ring.ZI: -4, Ring.ZW: -3}.get(self)

    @property
    def unit_symbol(self):
        return {Ring.ZI: "i", Ring.ZW: "w"}.get(self, "")

    @classmethod
    def for_d(cls, d):
        return {-1: cls.ZI, -3: cls.ZW}[d]


# tau^2 = TRACE[d] * tau - NORM[d]
_TRACE = {-1: 0, -3: 1}
_NORM = {-1: 1, -3: 1}


@dataclass(frozen=True, eq=False)
class QuadraticNumber:
    """The element x + y*tau_d of Q(sqrt(d)), d in {-1, -3}."""

    x: Fraction
    y: Fraction
    d: int

    def __post_init__(self):
        if self.d not in _TRACE:
            raise ParseError(f"unsupported quadratic field d={self.d}")
        object.__setattr__(self, "x", Fraction(self.x))
        object.__setattr__(self, "y", Fraction(self.y))

    # Construction helpers

    @classmethod
    def of(cls, value, d):
        """Coerce an int, Fraction or QuadraticNumber into the field of d."""
        if isinstance(value, QuadraticNumber):
            if value.d != d:
                raise MixedRings(f"cannot mix d={value.d} with d={d}")
            return value
        return cls(Fraction(value), Fraction(0), d)

    def _coerce(self, other):
        if isinstance(other, QuadraticNumber):
            if other.d != self.d:
                raise MixedRings(f"cannot mix d={self.d} with d={other.d}")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadraticNumber(Fraction(other), Fraction(0), self.d)
        return NotImplemented

    # Ring structure

    @property
    def ring(self):
        return Ring.for_d(self.d)

    @property
    def trace_coefficient(self):
        return _TRACE[self.d]

    def norm(self):
        """Exact field norm, equal to |self|^2."""
        tr, nm = _TRACE[self.d], _NORM[self.d]
        return self.x * self.x + tr * self.x * self.y + nm * self.y * self.y

    def conjugate(self):
        return QuadraticNumber(self.x + _TRACE[self.d] * self.y, -self.y, self.d)

    def is_zero(self):
        return self.x == 0 and self.y == 0

    def is_rational(self):
        return self.y == 0

    def is_integral(self):
        return self.x.denominator == 1 and self.y.denominator == 1

    def real_part(self):
        """Real part of the complex embedding (always rational)."""
        return self.x + Fraction(_TRACE[self.d], 2) * self.y

    def imag_coefficient(self):
        """Imaginary part divided by sqrt(-D)/2 (rational)."""
        return self.y

    def sort_key(self):
        return (self.x, self.y)

    # Arithmetic

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QuadraticNumber(self.x + other.x, self.y + other.y, self.d)

    __radd__ = __add__

    def __neg__(self):
        return QuadraticNumber(-self.x, -self.y, self.d)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QuadraticNumber(self.x - other.x, self.y - other.y, self.d)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        tr, nm = _TRACE[self.d], _NORM[self.d]
        yy = self.y * other.y
        return QuadraticNumber(
            self.x * other.x - nm * yy,
            self.x * other.y + other.x * self.y + tr * yy,
            self.d,
        )

    __rmul__ = __mul__

    def inverse(self):
        n = self.norm()
        if n == 0:
            raise ZeroInput("division by zero")
        c = self.conjugate()
        return QuadraticNumber(c.x / n, c.y / n, self.d)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, exponent):
        if not isinstance(exponent, int):
            return NotImplemented
        base = self if exponent >= 0 else self.inverse()
        e = abs(exponent)
        result = QuadraticNumber(Fraction(1), Fraction(0), self.d)
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    # Comparison

    def __eq__(self, other):
        if isinstance(other, QuadraticNumber):
            return (self.x, self.y, self.d) == (other.x, other.y, other.d)
        if isinstance(other, (int, Fraction)):
            return self.y == 0 and self.x == other
        return NotImplemented

    def __hash__(self):
        if self.y == 0:
            return hash(self.x)
        return hash((self.x, self.y, self.d))

    def __repr__(self):
        return f"QuadraticNumber({format_number(self)!r}, d={self.d})"

    def __str__(self):
        return format_number(self)


ExactNumber = Union[int, Fraction, QuadraticNumber]


def unit_generator(d):
    """Return the generator zeta of the unit group: i, or tau for d=-3."""
    return QuadraticNumber(0, 1, d)


def units(ring):
    """List the roots of unity of the ring as zeta^0, zeta^1, ..."""
    if not ring.is_quadratic:
        return [Fraction(1), Fraction(-1)]
    zeta = unit_generator(ring.d)
    return [zeta**k for k in range(ring.unit_order)]


def unit_index(value, ring):
    """Return k with value == zeta^k, or None when value is not a root of unity."""
    for k, unit in enumerate(units(ring)):
        if value == unit:
            return k
    return None


def is_root_of_unity(value):
    if isinstance(value, QuadraticNumber):
        return unit_index(value, value.ring) is not None
    return Fraction(value) in (1, -1)


def is_zero(value):
    if isinstance(value, QuadraticNumber):
        return value.is_zero()
    return value == 0


def ring_of(values, default=Ring.Q):
    """
    Determine the common ring of a vector of exact numbers.

    Rationals mixed with quadratic elements are read as elements of that
    quadratic field.

    Raises:
        MixedRings: If elements of both quadratic fields occur
    """
    ds = {v.d for v in values if isinstance(v, QuadraticNumber)}
    if len(ds) > 1:
        raise MixedRings("coordinates come from different quadratic fields")
    if ds:
        return Ring.for_d(ds.pop())
    return default


def coerce_vector(values, ring):
    """Bring every coordinate into the representation used for ``ring``."""
    if ring.is_quadratic:
        return tuple(QuadraticNumber.of(v, ring.d) for v in values)
    result = []
    for v in values:
        if isinstance(v, QuadraticNumber):
            if not v.is_rational():
                raise MixedRings(f"{v} is not rational")
            v = v.x
        result.append(Fraction(v))
    return tuple(result)


def sort_key(value):
    if isinstance(value, QuadraticNumber):
        return value.sort_key()
    return (Fraction(value), Fraction(0))


def distance2(a, b):
    """Exact squared Euclidean distance between two exact numbers."""
    diff = a - b
    if isinstance(diff, QuadraticNumber):
        return diff.norm()
    diff = Fraction(diff)
    return diff * diff


def vector_distance2(xs, vs):
    return sum((distance2(x, v) for x, v in zip(xs, vs)), Fraction(0))


def norm2(value):
    """Exact |value|^2."""
    if isinstance(value, QuadraticNumber):
        return value.norm()
    value = Fraction(value)
    return value * value


# Parsing and formatting

_RATIONAL = re.compile(r"^[+-]?(\d+(\.\d*)?|\.\d+)(/\d+)?$")


def parse_rational(text):
    """
    Parse "3", "-8/9" or "0.25" into an exact Fraction.

    Raises:
        ParseError: If the text is not a rational literal
    """
    text = text.strip().replace(" ", "")
    if not _RATIONAL.match(text):
        raise ParseError(f"not a rational number: {text!r}")
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"not a rational number: {text!r}") from exc


def _parse_coefficient(text):
    if text in ("", "+"):
        return Fraction(1)
    if text == "-":
        return Fraction(-1)
    return parse_rational(text)


def parse_number(text, ring=Ring.Q):
    """
    Parse a command-line literal into an exact number of ``ring``.

    Z and Q give Fractions; Zi accepts "a+bi" and Zw accepts "a+bw" with
    rational a, b and give QuadraticNumbers. Integrality is not checked here.
    """
    text = str(text).strip().replace(" ", "")
    if not text:
        raise ParseError("empty number")
    if not ring.is_quadratic:
        return parse_rational(text)
    symbol = ring.unit_symbol
    if not text.endswith(symbol):
        return QuadraticNumber(parse_rational(text), 0, ring.d)
    body = text[:-1]
    split = max(body.rfind("+"), body.rfind("-"))
    if split <= 0:
        return QuadraticNumber(0, _parse_coefficient(body), ring.d)
    real, imag = body[:split], body[split:]
    return QuadraticNumber(parse_rational(real), _parse_coefficient(imag), ring.d)


def parse_vector(texts, ring):
    return tuple(parse_number(t, ring) for t in texts)


def format_number(value):
    """Canonical string of an exact number, e.g. "3/2" or "1-2i"."""
    if isinstance(value, QuadraticNumber):
        symbol = value.ring.unit_symbol
        if value.y == 0:
            return str(value.x)
        if value.y == 1:
            coefficient = ""
        elif value.y == -1:
            coefficient = "-"
        else:
            coefficient = str(value.y)
        if value.x == 0:
            return f"{coefficient}{symbol}"
        sign = "" if coefficient.startswith("-") else "+"
        return f"{value.x}{sign}{coefficient}{symbol}"
    return str(Fraction(value))
