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
Catalog of irrational constants with certified interval evaluation.

Real constants:
- sqrt2, sqrt3, sqrt5
- cbrt2, cbrt4, cbrt3, cbrt9
- log2/log3

Together with 1 the catalog entries are linearly independent over Q: the
algebraic ones are distinct real radicals 2^(a) 3^(b) 5^(c) with exponents in
[0, 1), which are independent by Besicovitch's theorem, and log2/log3 is
transcendental (Gelfond-Schneider). Hence 1, r, s are independent exactly
when the coefficient vectors of r and s over the catalog have rank 2.

Complex pairs (alpha, beta = r + s*alpha) for lattice sums a + b*alpha + c*beta:
- rho: alpha = cube root of 2 times exp(2 pi i/3), beta = alpha^2
- sigma: alpha = cube root of 3 times exp(2 pi i/3), beta = alpha^2

Both generate a non-real cubic field whose real subfield is Q.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict

from mpmath import iv

from .exceptions import UnsupportedConstant
from .intervals import ComplexInterval, cube_root, exact, sqrt

logger = logging.getLogger(__name__)


REAL_CATALOG = {
    "sqrt2": lambda: sqrt(2),
    "sqrt3": lambda: sqrt(3),
    "sqrt5": lambda: sqrt(5),
    "cbrt2": lambda: cube_root(2),
    "cbrt4": lambda: cube_root(4),
    "cbrt3": lambda: cube_root(3),
    "cbrt9": lambda: cube_root(9),
    "log2/log3": lambda: iv.log(exact(2)) / iv.log(exact(3)),
}


@dataclass(frozen=True)
class RealConstant:
    """offset + sum(coefficient * catalog entry), evaluated as an interval."""

    terms: Dict[str, Fraction] = field(default_factory=dict)
    offset: Fraction = Fraction(0)

    def __post_init__(self):
        for name in self.terms:
            if name not in REAL_CATALOG:
                raise UnsupportedConstant(f"{name} is not in the constant catalog")
        cleaned = {k: Fraction(v) for k, v in self.terms.items() if v}
        object.__setattr__(self, "terms", cleaned)
        object.__setattr__(self, "offset", Fraction(self.offset))

    @classmethod
    def named(cls, name):
        return cls({name: Fraction(1)})

    def evaluate(self):
        """Interval at the current iv precision."""
        value = exact(self.offset)
        for name, coefficient in sorted(self.terms.items()):
            value = value + exact(coefficient) * REAL_CATALOG[name]()
        return value

    def __add__(self, other):
        if isinstance(other, RealConstant):
            terms = dict(self.terms)
            for name, c in other.terms.items():
                terms[name] = terms.get(name, 0) + c
            return RealConstant(terms, self.offset + other.offset)
        return RealConstant(self.terms, self.offset + Fraction(other))

    __radd__ = __add__

    def scale(self, factor):
        factor = Fraction(factor)
        return RealConstant(
            {k: v * factor for k, v in self.terms.items()}, self.offset * factor
        )

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other if isinstance(other, RealConstant) else -Fraction(other))

    def is_rational(self):
        return not self.terms

    def __str__(self):
        parts = [str(self.offset)] if self.offset else []
        for name, c in sorted(self.terms.items()):
            parts.append(name if c == 1 else f"{c}*{name}")
        return " + ".join(parts) if parts else "0"


def parse_constant(text):
    """
    Parse a catalog name, optionally negated ("-cbrt2").

    Raises:
        UnsupportedConstant: For names outside the catalog
    """
    text = str(text).strip()
    sign = 1
    if text.startswith("-"):
        sign, text = -1, text[1:]
    if text not in REAL_CATALOG:
        raise UnsupportedConstant(
            f"{text!r} is not supported; choose from {', '.join(REAL_CATALOG)}"
        )
    return RealConstant.named(text).scale(sign)


def independent_with_one(r, s):
    """True when 1, r, s are linearly independent over Q."""
    names = sorted(set(r.terms) | set(s.terms))
    vr = [r.terms.get(n, 0) for n in names]
    vs = [s.terms.get(n, 0) for n in names]
    return any(
        vr[i] * vs[j] - vr[j] * vs[i] for i in range(len(names)) for j in range(i + 1, len(names))
    )


@dataclass(frozen=True)
class LatticePair:
    """alpha = radius * exp(2 pi i/3) and beta = r + s * alpha."""

    name: str
    radius: RealConstant
    r: RealConstant
    s: RealConstant
    description: str

    def alpha(self):
        """Complex interval for alpha at the current precision."""
        radius = self.radius.evaluate()
        return ComplexInterval(-radius / 2, radius * iv.sqrt(3) / 2)

    def beta(self):
        return self.alpha().scale(self.s.evaluate()) + ComplexInterval(self.r.evaluate())


LATTICE_PAIRS = {
    "rho": LatticePair(
        "rho",
        RealConstant.named("cbrt2"),
        -RealConstant.named("cbrt4"),
        -RealConstant.named("cbrt2"),
        "alpha = 2^(1/3) exp(2 pi i/3), beta = alpha^2",
    ),
    "sigma": LatticePair(
        "sigma",
        RealConstant.named("cbrt3"),
        -RealConstant.named("cbrt9"),
        -RealConstant.named("cbrt3"),
        "alpha = 3^(1/3) exp(2 pi i/3), beta = alpha^2",
    ),
}

DEFAULT_LATTICE_PAIR = "rho"


def lattice_pair(name=DEFAULT_LATTICE_PAIR):
    try:
        return LATTICE_PAIRS[name]
    except KeyError as exc:
        raise UnsupportedConstant(
            f"unknown lattice pair {name!r}; choose from {', '.join(LATTICE_PAIRS)}"
        ) from exc
