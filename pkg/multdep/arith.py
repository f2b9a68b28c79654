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
Factorization and heights over Z, Q, Z[i] and Z[w].

This module provides:
- factorize: rational integer factorization within a configured bound
- exponent_vector: signed prime exponents of a nonzero rational
- gaussian_factorize: unit times canonical prime powers in Z[i] / Z[w]
- weil_height: absolute Weil height, stored exactly as a squared value
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import floor, gcd, isqrt
from typing import Dict, Optional

from sympy import factorint, isprime, perfect_power, pollard_rho, sqrt_mod

from .conf import resolve
from .exact import QuadraticNumber, Ring, unit_generator
from .exceptions import (
    FactorBoundExceeded,
    PreconditionViolation,
    UnsupportedElement,
    WrongRing,
    ZeroInput,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PrimeExponentMap:
    """
    Sparse factorization: prime -> nonzero exponent, plus a unit index.

    The unit is zeta^unit_index with zeta = -1 over Z/Q and zeta = i or tau
    over the quadratic rings.
    """

    exponents: Dict = field(default_factory=dict, hash=False)
    unit_index: int = 0
    ring: Ring = Ring.Q

    def __post_init__(self):
        cleaned = {p: e for p, e in self.exponents.items() if e != 0}
        object.__setattr__(self, "exponents", cleaned)
        object.__setattr__(
            self, "unit_index", self.unit_index % self.ring.unit_order
        )

    @property
    def sign(self):
        """Sign of a rational factorization."""
        return -1 if self.unit_index else 1

    @property
    def unit(self):
        if self.ring.is_quadratic:
            return unit_generator(self.ring.d) ** self.unit_index
        return Fraction(self.sign)

    def primes(self):
        return sorted(self.exponents, key=_prime_key)

    def reconstruct(self):
        """Multiply the factorization back out (exactly)."""
        value = self.unit
        for p, e in self.exponents.items():
            base = p if isinstance(p, QuadraticNumber) else Fraction(p)
            value = value * base**e
        return value

    def multiply(self, other):
        exponents = dict(self.exponents)
        for p, e in other.exponents.items():
            exponents[p] = exponents.get(p, 0) + e
        return PrimeExponentMap(
            exponents, self.unit_index + other.unit_index, self.ring
        )


def _prime_key(p):
    if isinstance(p, QuadraticNumber):
        return (p.norm(), p.x, p.y)
    return (Fraction(p), 0, 0)


def _split(n, rho_steps, retries):
    """Split composite n with Pollard rho, trying fresh seeds on failure."""
    for attempt in range(retries):
        divisor = pollard_rho(n, s=2 + attempt, a=1 + attempt, max_steps=rho_steps)
        if divisor and 1 < divisor < n:
            return divisor
    return None


def factorize(n, bound=None, trial_limit=None, rho_steps=None, retries=None):
    """
    Factor a positive integer.

    Trial division through ``trial_limit`` followed by Pollard rho on each
    remaining composite cofactor with a fixed step budget.

    Args:
        n: Integer >= 1
        bound: Largest accepted input (MULTDEP_FACTOR_BOUND)
        trial_limit: Trial division limit (MULTDEP_TRIAL_DIVISION_LIMIT)
        rho_steps: Pollard rho iteration budget (MULTDEP_RHO_MAX_STEPS)
        retries: Number of rho restarts (MULTDEP_RHO_RETRIES)

    Returns:
        PrimeExponentMap with positive exponents

    Raises:
        FactorBoundExceeded: If n exceeds the bound or a cofactor resists rho
    """
    n = int(n)
    if n < 1:
        raise PreconditionViolation(f"factorize needs n >= 1, got {n}")
    bound = resolve(bound, "FACTOR_BOUND")
    trial_limit = resolve(trial_limit, "TRIAL_DIVISION_LIMIT")
    rho_steps = resolve(rho_steps, "RHO_MAX_STEPS")
    retries = resolve(retries, "RHO_RETRIES")

    if n > bound:
        power = perfect_power(n)
        if not power or power[0] > bound:
            raise FactorBoundExceeded(f"{n} exceeds the factorization bound {bound}")
        root, k = power
        inner = factorize(root, bound, trial_limit, rho_steps, retries)
        return PrimeExponentMap(
            {p: e * k for p, e in inner.exponents.items()}, 0, Ring.Z
        )

    result = {}
    pending = []
    for p, e in factorint(n, limit=trial_limit, use_rho=False, use_pm1=False).items():
        pending.append((p, e))
    while pending:
        p, e = pending.pop()
        if p == 1:
            continue
        if isprime(p):
            result[p] = result.get(p, 0) + e
            continue
        power = perfect_power(p)
        if power:
            pending.append((power[0], e * power[1]))
            continue
        divisor = _split(p, rho_steps, retries)
        if divisor is None:
            raise FactorBoundExceeded(f"cofactor {p} of {n} resisted Pollard rho")
        logger.debug("rho split %s = %s * %s", p, divisor, p // divisor)
        pending.append((divisor, e))
        pending.append((p // divisor, e))
    return PrimeExponentMap(result, 0, Ring.Z)


def exponent_vector(q, **limits):
    """
    Signed prime exponents of a nonzero rational.

    Elements of the quadratic fields are factored over their own ring.

    Raises:
        ZeroInput: If q is zero
    """
    if isinstance(q, QuadraticNumber):
        return gaussian_exponent_vector(q, **limits)
    q = Fraction(q)
    if q == 0:
        raise ZeroInput("exponent vector of zero")
    exponents = dict(factorize(abs(q.numerator), **limits).exponents)
    for p, e in factorize(q.denominator, **limits).exponents.items():
        exponents[p] = exponents.get(p, 0) - e
    return PrimeExponentMap(exponents, 0 if q > 0 else 1, Ring.Q)


# Quadratic rings


def _round_fraction(value):
    """Nearest integer, halves rounded up."""
    return floor(value + Fraction(1, 2))


def ring_divmod(a, b):
    """Euclidean division in Z[i] / Z[w] by rounding the exact quotient."""
    quotient = a / b
    q = QuadraticNumber(_round_fraction(quotient.x), _round_fraction(quotient.y), a.d)
    return q, a - q * b


def ring_gcd(a, b):
    while not b.is_zero():
        _, r = ring_divmod(a, b)
        a, b = b, r
    return a


def divides(p, a):
    """True when a / p is an algebraic integer of the ring."""
    return (a / p).is_integral()


def associate_with_unit(alpha):
    """
    Return (gamma, k) with alpha == zeta^k * gamma and gamma canonical.

    Canonical means x > 0 and y >= 0 in the basis (1, tau), i.e. the
    argument lies in [0, pi/2) for Z[i] and [0, pi/3) for Z[w].
    """
    if alpha.is_zero():
        raise ZeroInput("zero has no canonical associate")
    zeta = unit_generator(alpha.d)
    w = alpha.ring.unit_order
    inverse = zeta.inverse()
    candidate = alpha
    for k in range(w):
        if candidate.x > 0 and candidate.y >= 0:
            return candidate, k
        candidate = candidate * inverse
    raise UnsupportedElement(f"no canonical associate for {alpha}")


def canonical_associate(alpha):
    return associate_with_unit(alpha)[0]


def primes_above(p, ring):
    """
    Canonical prime representatives of Z[i] / Z[w] dividing the rational prime p.

    Sorted by (norm, x, y).
    """
    d = ring.d
    if d is None:
        raise WrongRing(f"{ring.value} has no quadratic primes")
    if d == -1:
        if p == 2:
            found = [QuadraticNumber(1, 1, d)]
        elif p % 4 == 1:
            a = sqrt_mod(-1, p)
            pi = ring_gcd(QuadraticNumber(p, 0, d), QuadraticNumber(a, 1, d))
            found = [pi, pi.conjugate()]
        else:
            found = [QuadraticNumber(p, 0, d)]
    else:
        if p == 3:
            found = [QuadraticNumber(1, 1, d)]
        elif p % 3 == 1:
            # sqrt(-3) = 2*tau - 1
            a = sqrt_mod(-3, p)
            pi = ring_gcd(QuadraticNumber(p, 0, d), QuadraticNumber(a - 1, 2, d))
            found = [pi, pi.conjugate()]
        else:
            found = [QuadraticNumber(p, 0, d)]
    return sorted({canonical_associate(f) for f in found}, key=_prime_key)


def gaussian_factorize(alpha, **limits):
    """
    Factor a nonzero algebraic integer of Z[i] or Z[w].

    Returns:
        PrimeExponentMap over canonical primes, unit index relative to
        zeta = i (d=-1) or zeta = tau (d=-3)

    Raises:
        ZeroInput: If alpha is zero
        WrongRing: If alpha is not an integer of a quadratic ring
        FactorBoundExceeded: If the norm cannot be factored
    """
    if not isinstance(alpha, QuadraticNumber):
        raise WrongRing(f"{alpha} is not an element of Z[i] or Z[w]")
    if alpha.is_zero():
        raise ZeroInput("cannot factor zero")
    if not alpha.is_integral():
        raise WrongRing(f"{alpha} is not an algebraic integer of {alpha.ring.value}")
    norm = int(alpha.norm())
    remaining = alpha
    exponents = {}
    for p in sorted(factorize(norm, **limits).exponents):
        for pi in primes_above(p, alpha.ring):
            count = 0
            while divides(pi, remaining):
                remaining = remaining / pi
                count += 1
            if count:
                exponents[pi] = count
    k = None
    zeta = unit_generator(alpha.d)
    for j in range(alpha.ring.unit_order):
        if remaining == zeta**j:
            k = j
            break
    if k is None:
        raise UnsupportedElement(f"incomplete factorization of {alpha}")
    return PrimeExponentMap(exponents, k, alpha.ring)


def gaussian_exponent_vector(alpha, **limits):
    """Exponents of a nonzero element of Q(i) / Q(w), denominators cleared."""
    if alpha.is_zero():
        raise ZeroInput("exponent vector of zero")
    denominator = alpha.x.denominator * alpha.y.denominator // gcd(
        alpha.x.denominator, alpha.y.denominator
    )
    numerator = gaussian_factorize(alpha * denominator, **limits)
    if denominator == 1:
        return numerator
    below = gaussian_factorize(QuadraticNumber(denominator, 0, alpha.d), **limits)
    exponents = dict(numerator.exponents)
    for p, e in below.exponents.items():
        exponents[p] = exponents.get(p, 0) - e
    return PrimeExponentMap(
        exponents, numerator.unit_index - below.unit_index, alpha.ring
    )


@dataclass(frozen=True)
class WeilHeight:
    """Absolute Weil height H, kept exactly as H^2."""

    squared: Fraction

    @property
    def value(self) -> Optional[Fraction]:
        """H itself when it is rational, else None."""
        num, den = self.squared.numerator, self.squared.denominator
        rn, rd = isqrt(num), isqrt(den)
        if rn * rn == num and rd * rd == den:
            return Fraction(rn, rd)
        return None

    def __str__(self):
        value = self.value
        return str(value) if value is not None else f"sqrt({self.squared})"


def weil_height(alpha):
    """
    Absolute Weil height of a nonzero rational or quadratic integer.

    max(|p|, |q|) for p/q in lowest terms; max(1, |alpha|) for a nonrational
    integer of Z[i] / Z[w].

    Raises:
        ZeroInput: If alpha is zero
        UnsupportedElement: For nonintegral quadratic elements
    """
    if isinstance(alpha, QuadraticNumber):
        if alpha.is_zero():
            raise ZeroInput("height of zero")
        if alpha.is_rational():
            alpha = alpha.x
        elif not alpha.is_integral():
            raise UnsupportedElement(f"{alpha} is not an algebraic integer")
        else:
            return WeilHeight(max(Fraction(1), alpha.norm()))
    q = Fraction(alpha)
    if q == 0:
        raise ZeroInput("height of zero")
    h = max(abs(q.numerator), q.denominator)
    return WeilHeight(Fraction(h * h))
