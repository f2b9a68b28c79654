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
Dense lattice sums and the Kronecker step behind them.

This module provides:
- kronecker_q: smallest q with eps/4 < {q r} < eps/2 and {q s} < eps^2/(20 M)
- approx_lattice_sum: a + b*alpha + c*beta within eps of a target
- approx_biquad: a + b*sqrt2 + (c + d*sqrt2)*i within eps of a target

Fractional parts are tracked as fixed-point integer enclosures; the q with
a small {q s} are visited by first returns, whose gaps take at most three
values.
"""

import itertools
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, floor
from typing import Optional, Tuple

from mpmath import iv

from .computation_logger import computation_logger
from .conf import resolve
from .constants import RealConstant, independent_with_one, lattice_pair, parse_constant
from .exact import QuadraticNumber, format_number
from .exceptions import (
    InvalidParams,
    PreconditionViolation,
    SearchBudgetExceeded,
    WitnessVerificationError,
)
from .intervals import (
    ComplexInterval,
    bounds,
    ceiling_reached,
    certified_floor,
    exact,
    interval_to_decimals,
    precision_ladder,
    sqrt,
    to_decimal,
    working_precision,
)

logger = logging.getLogger(__name__)

# Denominator used for rational upper bounds of Re(alpha), Im(alpha)
UPPER_BOUND_SCALE = 2**20


class _Undecided(Exception):
    """A comparison could not be settled at the current precision."""


@dataclass(frozen=True)
class KroneckerCertificate:
    """q with certified fractional parts of q*r and q*s."""

    q: int
    floor_r: int
    floor_s: int
    frac_r: Tuple[Fraction, Fraction]
    frac_s: Tuple[Fraction, Fraction]
    bits: int

    def as_dict(self, digits=None):
        return {
            "q": self.q,
            "floor_qr": self.floor_r,
            "floor_qs": self.floor_s,
            "frac_qr": list(interval_to_decimals(self.frac_r, digits)),
            "frac_qs": list(interval_to_decimals(self.frac_s, digits)),
            "bits": self.bits,
        }


@dataclass(frozen=True)
class LatticeSumResult:
    """(a, b, c) with a + b*alpha + c*beta within eps of the target."""

    pair: str
    target: object
    shift: Tuple[int, int]
    eps: Fraction
    coefficients: Tuple[int, int, int]
    method: str
    distance2_upper: Fraction
    certificate: Optional[KroneckerCertificate] = None
    steps: dict = field(default_factory=dict)

    def as_dict(self, digits=None):
        data = {
            "pair": self.pair,
            "coefficients": list(self.coefficients),
            "method": self.method,
            "distance_upper": _sqrt_upper_text(self.distance2_upper, digits),
        }
        if self.certificate is not None:
            data["certificate"] = self.certificate.as_dict(digits)
            data["steps"] = dict(self.steps)
        return data


@dataclass(frozen=True)
class BiquadResult:
    """a + b*sqrt2 + (c + d*sqrt2)*i."""

    target: object
    eps: Fraction
    coefficients: Tuple[int, int, int, int]
    distance2_upper: Fraction

    def as_dict(self, digits=None):
        return {
            "coefficients": list(self.coefficients),
            "distance_upper": _sqrt_upper_text(self.distance2_upper, digits),
        }


def _sqrt_upper_text(value, digits=None):
    """Decimal upper bound of sqrt(value) for an exact rational value."""
    if value == 0:
        return "0"
    digits = resolve(digits, "DECIMAL_DIGITS")
    with working_precision(int(digits * 3.33) + 32):
        _, hi = bounds(iv.sqrt(exact(value)))
    return to_decimal(hi, digits, rounding="ceiling")


def _as_constant(value):
    return value if isinstance(value, RealConstant) else parse_constant(value)


# Fixed-point fractional parts


def _fixed(constant, bits):
    with working_precision(bits + 32):
        lo, hi = bounds(constant.evaluate())
    scale = 1 << bits
    return floor(lo * scale), ceil(hi * scale)


def _fraction_part(q, fixed, bits):
    """(floor, low, high) with q*x in [floor + low/2^bits, floor + high/2^bits]."""
    a_lo, a_hi = q * fixed[0], q * fixed[1]
    k = a_lo >> bits
    return k, a_lo - (k << bits), a_hi - (k << bits)


def _below(q, fixed, bits, threshold):
    """Certified {q x} < threshold."""
    _, lo, hi = _fraction_part(q, fixed, bits)
    one = 1 << bits
    if hi >= one:
        raise _Undecided
    if hi < threshold * one:
        return True
    if lo >= threshold * one:
        return False
    raise _Undecided


def _above(q, fixed, bits, threshold):
    """Certified {q x} > 1 - threshold."""
    _, lo, hi = _fraction_part(q, fixed, bits)
    one = 1 << bits
    if hi >= one:
        raise _Undecided
    if lo > (1 - threshold) * one:
        return True
    if hi <= (1 - threshold) * one:
        return False
    raise _Undecided


def _between(q, fixed, bits, lower, upper):
    """Certified lower < {q x} < upper."""
    _, lo, hi = _fraction_part(q, fixed, bits)
    one = 1 << bits
    if hi >= one:
        if lo >= upper * one and hi - one <= lower * one:
            return False
        raise _Undecided
    if lo > lower * one and hi < upper * one:
        return True
    if hi <= lower * one or lo >= upper * one:
        return False
    raise _Undecided


def _certificate(q, fr, fs, bits):
    one = 1 << bits
    kr, r_lo, r_hi = _fraction_part(q, fr, bits)
    ks, s_lo, s_hi = _fraction_part(q, fs, bits)
    return KroneckerCertificate(
        q,
        kr,
        ks,
        (Fraction(r_lo, one), Fraction(r_hi, one)),
        (Fraction(s_lo, one), Fraction(s_hi, one)),
        bits,
    )


def _return_steps(fs, bits, threshold, q_limit):
    """Smallest g with {g s} < T and smallest g with {g s} > 1 - T."""
    small = large = None
    g = 0
    while small is None or large is None:
        g += 1
        if g > q_limit:
            raise SearchBudgetExceeded(f"no return below q = {q_limit}")
        if small is None and _below(g, fs, bits, threshold):
            small = g
        if large is None and _above(g, fs, bits, threshold):
            large = g
    return sorted({small, large, small + large})


def _kronecker_walk(r, s, lower, upper, threshold, bits, q_limit):
    fr, fs = _fixed(r, bits), _fixed(s, bits)
    steps = _return_steps(fs, bits, threshold, q_limit)
    q = 0
    while True:
        for step in steps:
            if _below(q + step, fs, bits, threshold):
                q += step
                break
        else:
            raise WitnessVerificationError("first-return walk left the target interval")
        if q > q_limit:
            raise SearchBudgetExceeded(f"no admissible q up to {q_limit}")
        if _between(q, fr, bits, lower, upper):
            return _certificate(q, fr, fs, bits)


def kronecker_thresholds(eps, a=1, b=1):
    eps = Fraction(eps)
    return eps / 4, eps / 2, eps * eps / (20 * max(Fraction(a), Fraction(b)))


def kronecker_q(r, s, eps, a=1, b=1, q_limit=None, ceiling=None):
    """
    Smallest q >= 1 with eps/4 < {q r} < eps/2 and {q s} < eps^2 / (20 max(a, b)).

    The q with {q s} below the threshold are visited in increasing order,
    so every smaller q is certified to fail.

    Args:
        r, s: Catalog names or RealConstant expressions with 1, r, s
            independent over Q
        eps: Rational in (0, 1)
        a, b: Positive rationals
        q_limit: MULTDEP_KRONECKER_Q_LIMIT

    Raises:
        InvalidParams: For eps outside (0, 1) or dependent 1, r, s
        SearchBudgetExceeded: If q would exceed the limit
        PrecisionCeilingReached: If a comparison stays undecided
    """
    r, s = _as_constant(r), _as_constant(s)
    eps = Fraction(eps)
    if not 0 < eps < 1:
        raise InvalidParams("eps must lie in (0, 1)")
    if Fraction(a) <= 0 or Fraction(b) <= 0:
        raise InvalidParams("a and b must be positive")
    if not independent_with_one(r, s):
        raise InvalidParams(f"1, {r}, {s} are not independent over Q")
    q_limit = resolve(q_limit, "KRONECKER_Q_LIMIT")
    lower, upper, threshold = kronecker_thresholds(eps, a, b)
    for bits in precision_ladder(ceiling=ceiling):
        try:
            certificate = _kronecker_walk(r, s, lower, upper, threshold, bits, q_limit)
        except _Undecided:
            computation_logger.log_precision("kronecker_q", bits * 2, "fractional part undecided")
            continue
        logger.debug("kronecker q=%s at %s bits", certificate.q, bits)
        return certificate
    raise ceiling_reached("kronecker_q", ceiling)


def verify_kronecker(certificate, r, s, eps, a=1, b=1):
    """Re-check a certificate at twice its precision."""
    r, s = _as_constant(r), _as_constant(s)
    lower, upper, threshold = kronecker_thresholds(eps, a, b)
    with working_precision(2 * certificate.bits):
        fr = certificate.q * r.evaluate() - certificate.floor_r
        fs = certificate.q * s.evaluate() - certificate.floor_s
        r_lo, r_hi = bounds(fr)
        s_lo, s_hi = bounds(fs)
    return lower < r_lo and r_hi < upper and 0 <= s_lo and s_hi < threshold


# Lattice sums


def _target_parts(z):
    if isinstance(z, QuadraticNumber):
        if z.d != -1:
            raise InvalidParams("lattice-sum targets are Gaussian rationals")
        return z.x, z.y
    return Fraction(z), Fraction(0)


def _residual(pair, coefficients, x, y):
    a, b, c = coefficients
    value = pair.alpha().scale(b) + pair.beta().scale(c) + ComplexInterval(a - x, -y)
    return value.abs2()


def _certify(pair, coefficients, x, y, eps, ceiling=None):
    """Upper bound of |a + b alpha + c beta - z|^2 below eps^2, else None."""
    for bits in precision_ladder(ceiling=ceiling):
        with working_precision(bits):
            lo, hi = bounds(_residual(pair, coefficients, x, y))
        if hi < eps * eps:
            return hi
        if lo >= eps * eps:
            return None
    raise ceiling_reached("approx_lattice_sum", ceiling)


def _shell(radius):
    for b, c in itertools.product(range(-radius, radius + 1), repeat=2):
        if max(abs(b), abs(c)) == radius:
            yield b, c


def _direct_search(pair, x, y, eps, bound, ceiling=None):
    """Smallest sup-norm (b, c), with a the nearest integer, within eps."""
    for radius in range(bound + 1):
        for b, c in _shell(radius):
            with working_precision(64):
                shifted = pair.alpha().scale(b) + pair.beta().scale(c)
                lo, hi = bounds(shifted.re)
            a = floor(x - (lo + hi) / 2 + Fraction(1, 2))
            upper = _certify(pair, (a, b, c), x, y, eps, ceiling)
            if upper is not None:
                return (a, b, c), upper
    return None, None


def _normalize_alpha(pair):
    """sigma, n with alpha' = sigma*alpha + n in the open first quadrant."""
    with working_precision(64):
        alpha = pair.alpha()
        sigma = 1 if bounds(alpha.im)[0] > 0 else -1
        n = certified_floor(-sigma * alpha.re)
    if n is None:
        raise PreconditionViolation("Re(alpha) is too close to an integer")
    return sigma, n + 1


def _construct(pair, x, y, eps, q_limit=None, ceiling=None):
    """
    The Kronecker construction for a target with 1 <= x < 2 and y >= 0.

    Returns coefficients over (1, alpha', beta), the certificate and the
    recorded steps.
    """
    sigma, n = _normalize_alpha(pair)
    r = pair.r - pair.s.scale(sigma * n)
    s = pair.s.scale(sigma)
    with working_precision(64):
        alpha = pair.alpha().scale(sigma) + ComplexInterval(n)
        a_upper = ceil(bounds(alpha.re)[1] * UPPER_BOUND_SCALE)
        b_upper = ceil(bounds(alpha.im)[1] * UPPER_BOUND_SCALE)
    a_bound = Fraction(a_upper, UPPER_BOUND_SCALE)
    b_bound = Fraction(b_upper, UPPER_BOUND_SCALE)
    certificate = kronecker_q(r, s, eps, a_bound, b_bound, q_limit, ceiling)
    q = certificate.q

    for bits in precision_ladder(start=max(certificate.bits, 64), ceiling=ceiling):
        with working_precision(bits):
            alpha = pair.alpha().scale(sigma) + ComplexInterval(n)
            frac_r = q * r.evaluate() - certificate.floor_r
            frac_s = q * s.evaluate() - certificate.floor_s
            lam = frac_r + frac_s * alpha.re
            q1 = certified_floor(exact(y) / (frac_s * alpha.im))
            if q1 is None:
                continue
            shifted = q1 * lam
            k1 = certified_floor(shifted)
            if k1 is None:
                continue
            q2 = certified_floor((exact(x) - (shifted - k1)) / lam)
            if q2 is None:
                continue
        break
    else:
        raise ceiling_reached("approx_lattice_sum", ceiling)

    total = q1 + q2
    coefficients = (
        -total * certificate.floor_r - k1,
        -total * certificate.floor_s,
        total * q,
    )
    steps = {"sigma": sigma, "n": n, "q1": q1, "q2": q2, "floor_q1_lambda": k1}
    # Back from alpha' = sigma*alpha + n to alpha
    a1, b1, c1 = coefficients
    return (a1 + b1 * n, b1 * sigma, c1), certificate, steps


def approx_lattice_sum(
    z,
    eps,
    pair="rho",
    shift=(0, 0),
    method="auto",
    direct_bound=None,
    q_limit=None,
    ceiling=None,
):
    """
    Integers (a, b, c) with |a + b*alpha + c*beta - target| < eps, certified.

    The target is z + u*alpha + v*beta for shift = (u, v), so catalog
    elements themselves can be approximated exactly.

    Args:
        z: Gaussian rational (or rational) part of the target
        eps: Positive rational
        pair: Catalog pair name ("rho" or "sigma")
        method: "auto" (bounded direct search, then the construction),
            "direct" or "kronecker"
        direct_bound: Largest |b|, |c| of the direct search
            (MULTDEP_LATTICE_DIRECT_BOUND)

    Raises:
        SearchBudgetExceeded: If the direct search fails in "direct" mode or
            q exceeds its limit
        PrecisionCeilingReached: If a certification stays undecided
    """
    catalog = lattice_pair(pair)
    eps = Fraction(eps)
    if eps <= 0:
        raise InvalidParams("eps must be positive")
    if method not in ("auto", "direct", "kronecker"):
        raise InvalidParams(f"unknown method {method!r}")
    x, y = _target_parts(z)
    u, v = (int(t) for t in shift)

    def finish(coefficients, method_used, upper, certificate=None, steps=None):
        a, b, c = coefficients
        result = LatticeSumResult(
            catalog.name,
            z,
            (u, v),
            eps,
            (a, b + u, c + v),
            method_used,
            upper,
            certificate,
            steps or {},
        )
        computation_logger.log_probe(
            "approx_lattice_sum", format_number(z), to_decimal(upper, 12), eps
        )
        return result

    if x == 0 and y == 0:
        return finish((0, 0, 0), "exact", Fraction(0))

    if method in ("auto", "direct"):
        bound = resolve(direct_bound, "LATTICE_DIRECT_BOUND")
        coefficients, upper = _direct_search(catalog, x, y, eps, bound, ceiling)
        if coefficients is not None:
            return finish(coefficients, "direct", upper)
        if method == "direct":
            raise SearchBudgetExceeded(f"no element within eps for |b|, |c| <= {bound}")

    # Move the target into 1 <= x < 2, y >= 0
    tau = -1 if y < 0 else 1
    k = floor(tau * x) - 1
    window_x, window_y = tau * x - k, tau * y
    construction_eps = min(eps, Fraction(1, 2))
    coefficients, certificate, steps = _construct(
        catalog, window_x, window_y, construction_eps, q_limit, ceiling
    )
    a, b, c = coefficients
    coefficients = (tau * (a + k), tau * b, tau * c)
    steps.update({"tau": tau, "k": k})
    upper = _certify(catalog, coefficients, x, y, eps, ceiling)
    if upper is None:
        computation_logger.log_error("approx_lattice_sum", format_number(z), "construction missed")
        raise WitnessVerificationError("the construction missed the target")
    return finish(coefficients, "kronecker", upper, certificate, steps)


# Biquadratic integers a + b*sqrt2 + (c + d*sqrt2)*i


def _sqrt2_denominators():
    p, q = 1, 1
    while True:
        yield q
        p, q = p + 2 * q, p + q


def _signed_order(limit):
    yield 0
    for d in range(1, limit + 1):
        yield d
        yield -d


def _match(target, eps, limit, ceiling=None):
    """
    First d in the order 0, 1, -1, 2, ... with c = round(target - d*sqrt2)
    and |c + d*sqrt2 - target| < eps; returns (c, d, squared error bound).
    """
    for d in _signed_order(limit):
        for bits in precision_ladder(ceiling=ceiling):
            with working_precision(bits):
                lo, hi = bounds(exact(target) - d * sqrt(2))
                c = floor((lo + hi) / 2 + Fraction(1, 2))
                error = bounds(exact(c) + d * sqrt(2) - exact(target))
            e_lo, e_hi = error
            worst = max(abs(e_lo), abs(e_hi))
            if worst < eps:
                return c, d, worst * worst
            if e_lo >= eps or e_hi <= -eps:
                break
        else:
            raise ceiling_reached("approx_biquad", ceiling)
    raise SearchBudgetExceeded(f"no match within |d| <= {limit}")


def approx_biquad(z, eps, ceiling=None):
    """
    An integer of Q(sqrt2, i) within eps of the Gaussian rational z.

    The imaginary part is matched first by c + d*sqrt2, then the real part
    by a + b*sqrt2, each within eps/2.
    """
    eps = Fraction(eps)
    if eps <= 0:
        raise InvalidParams("eps must be positive")
    x, y = _target_parts(z)
    half = eps / 2
    denominators = _sqrt2_denominators()
    previous = next(denominators)
    for current in denominators:
        if current >= 2 / half:
            break
        previous = current
    limit = current + previous
    c, d, imag2 = _match(y, half, limit, ceiling)
    a, b, real2 = _match(x, half, limit, ceiling)
    result = BiquadResult(z, eps, (a, b, c, d), real2 + imag2)
    computation_logger.log_probe(
        "approx_biquad", format_number(z), to_decimal(result.distance2_upper, 12), eps
    )
    return result
