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
Constructive density: dependent vectors close to any target.

This module provides:
- approx_real_vector: powers of one rational alpha slightly below -1
- approx_complex_pair: powers of a Gaussian rational t close to
  (1 + 1/m^2) exp(2 pi i/m), with separate branches for zero targets
- replay_trace: re-run a stored trace and compare the output byte for byte

Outputs are PowerVectors, so dependence is certified by exponent
arithmetic and huge coordinates are never expanded.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor
from typing import Optional, Tuple

from mpmath import iv

from .computation_logger import computation_logger
from .conf import get_setting, resolve
from .dependence import PowerVector, verify_witness
from .exact import (
    QuadraticNumber,
    Ring,
    coerce_vector,
    format_number,
    is_root_of_unity,
    parse_number,
    parse_rational,
    parse_vector,
)
from .exceptions import (
    InvalidParams,
    PrecisionCeilingReached,
    PreconditionViolation,
    ReplayMismatch,
    WitnessVerificationError,
)
from .intervals import (
    ComplexInterval,
    bounds,
    ceiling_reached,
    certified_floor,
    exact,
    log,
    pi,
    precision_ladder,
    to_decimal,
    unit_circle,
    working_precision,
)

logger = logging.getLogger(__name__)

# Coordinates are expanded exactly only up to this exponent size
EXPAND_LIMIT = 256

BRANCHES = ("main", "zero-small", "zero-large", "roots-of-unity", "both-zero")


def _expandable(exponents):
    return max(abs(e) for e in exponents) <= EXPAND_LIMIT


@dataclass(frozen=True)
class RealApproxTrace:
    """alpha in (-1 - delta, -1 - delta/2) and the exponents used."""

    delta: Fraction
    alpha: Fraction
    exponents: Tuple[int, ...]
    eps: Fraction

    @property
    def vector(self):
        return PowerVector(self.alpha, self.exponents)

    def as_dict(self):
        vector = self.vector
        data = {
            "delta": str(self.delta),
            "alpha": str(self.alpha),
            "exponents": list(self.exponents),
            "witness": vector.witness().as_list(),
        }
        if _expandable(self.exponents):
            data["vector"] = [format_number(v) for v in vector.values()]
        return data


@dataclass(frozen=True)
class ComplexApproxTrace:
    """The pair (t^A1, t^A2) and the branch that produced it."""

    branch: str
    base: object
    exponents: Tuple[int, int]
    eps: Fraction
    distance2_upper: Tuple[Fraction, Fraction]
    m: Optional[int] = None
    a: Tuple[int, ...] = ()
    r: Tuple[int, ...] = ()
    b: Tuple[int, ...] = ()

    @property
    def vector(self):
        return PowerVector(self.base, self.exponents)

    def as_dict(self, digits=None):
        vector = self.vector
        data = {
            "branch": self.branch,
            "t": format_number(self.base),
            "exponents": list(self.exponents),
            "witness": vector.witness().as_list(),
        }
        if self.m is not None:
            data.update({"m": self.m, "a": list(self.a), "r": list(self.r), "b": list(self.b)})
        if _expandable(self.exponents):
            data["vector"] = [format_number(v) for v in vector.values()]
        data["distance2_upper"] = [
            to_decimal(d, digits, rounding="ceiling") for d in self.distance2_upper
        ]
        return data


def _check_eps(eps):
    eps = Fraction(eps)
    if eps <= 0:
        raise InvalidParams("eps must be positive")
    return eps


def _verify_power_vector(vector):
    if not get_setting("CHECK_WITNESSES"):
        return
    witness = vector.witness()
    if not vector.satisfies(witness):
        raise WitnessVerificationError("power vector witness does not vanish")
    if _expandable(vector.exponents) and not verify_witness(vector.values(), witness):
        raise WitnessVerificationError("power vector witness fails on the values")


def _certified_distance2(base, exponent, target, eps, ceiling=None):
    """
    Rational upper bound of |base^exponent - target|^2 below eps^2.

    Small exponents are evaluated exactly, large ones with intervals.
    Returns None when the distance is not below eps.
    """
    if abs(exponent) <= EXPAND_LIMIT:
        diff = base**exponent - target
        d2 = diff.norm() if isinstance(diff, QuadraticNumber) else Fraction(diff) ** 2
        return d2 if d2 < eps * eps else None
    start = 64 + 2 * abs(exponent).bit_length()
    for bits in precision_ladder(start=start, ceiling=ceiling):
        with working_precision(bits):
            power = ComplexInterval.from_quadratic(base) ** exponent
            lo, hi = bounds((power - ComplexInterval.from_quadratic(target)).abs2())
        if hi < eps * eps:
            return hi
        if lo >= eps * eps:
            return None
    raise ceiling_reached("distance check", ceiling)


# Real targets


def good_alpha(eps, largest):
    """
    delta = min(1/2, eps/(2(1 + M))) and a rational alpha in
    (-1 - delta, -1 - delta/2) with denominator ceil(4/delta).
    """
    delta = min(Fraction(1, 2), eps / (2 * (1 + largest)))
    den = ceil(4 / delta)
    k = floor(delta * den / 2) + 1
    return delta, -Fraction(den + k, den)


def _power_floor(magnitude, base, ceiling=None):
    """f with base^f <= magnitude < base^(f+1), for base > 1."""
    with working_precision(64):
        lo, _ = bounds(log(magnitude) / log(base))
    f = floor(lo)
    if abs(f) < EXPAND_LIMIT:
        # Exact correction, also covers exact powers sitting on an endpoint
        while base**f > magnitude:
            f -= 1
        while base ** (f + 1) <= magnitude:
            f += 1
        return f
    for bits in precision_ladder(start=64 + 2 * f.bit_length(), ceiling=ceiling):
        with working_precision(bits):
            guess = certified_floor(log(magnitude) / log(base))
        if guess is not None:
            return guess
    raise ceiling_reached("approx_real_vector", ceiling)


def _negative_power_below(base, eps, ceiling=None):
    """Smallest K >= 1 with base^(-K) < eps, for base > 1."""
    return max(1, _power_floor(1 / eps, base, ceiling) + 1)


def approx_real_vector(x, eps, ceiling=None):
    """
    A dependent rational vector within eps of x in every coordinate.

    Every coordinate is a power of one alpha: alpha^f or alpha^(f+1) with
    |alpha|^f <= |x_j| < |alpha|^(f+1), the parity picking the sign of x_j.
    Zero coordinates get alpha^(-K) with |alpha|^(-K) < eps.

    Args:
        x: Rational target vector, at least two coordinates
        eps: Positive rational
        ceiling: MULTDEP_PRECISION_CEILING_BITS

    Returns:
        RealApproxTrace

    Raises:
        PreconditionViolation: For fewer than two coordinates
        WitnessVerificationError: If a coordinate misses the target
    """
    x = coerce_vector(x, Ring.Q)
    eps = _check_eps(eps)
    if len(x) < 2:
        raise PreconditionViolation("need at least two coordinates")
    delta, alpha = good_alpha(eps, max(abs(t) for t in x))
    base = -alpha
    exponents = []
    for t in x:
        if t == 0:
            exponents.append(-_negative_power_below(base, eps, ceiling))
            continue
        f = _power_floor(abs(t), base, ceiling)
        even = f % 2 == 0
        exponents.append(f if even == (t > 0) else f + 1)
    trace = RealApproxTrace(delta, alpha, tuple(exponents), eps)
    for e, t in zip(trace.exponents, x):
        if _certified_distance2(alpha, e, t, eps, ceiling) is None:
            raise WitnessVerificationError(f"alpha^{e} is not within {eps} of {t}")
    _verify_power_vector(trace.vector)
    logger.debug("approx_real_vector: alpha=%s exponents=%s", alpha, trace.exponents)
    return trace


# Complex targets


def _gaussian(value):
    return QuadraticNumber.of(value, -1)


_DIAGONAL_TURNS = {
    (1, 1): Fraction(1, 8),
    (-1, 1): Fraction(3, 8),
    (-1, -1): Fraction(5, 8),
    (1, -1): Fraction(7, 8),
}


def _exact_turn(z):
    """arg(z) / 2pi for targets on the axes or diagonals, else None."""
    x, y = z.x, z.y
    if y == 0:
        return Fraction(0) if x > 0 else Fraction(1, 2)
    if x == 0:
        return Fraction(1, 4) if y > 0 else Fraction(3, 4)
    if abs(x) == abs(y):
        return _DIAGONAL_TURNS[(1 if x > 0 else -1, 1 if y > 0 else -1)]
    return None


def _turn_floor(z, m, bits):
    """floor(m * theta) for z = |z| exp(2 pi i theta), 0 <= theta < 1."""
    turn = _exact_turn(z)
    if turn is not None:
        return floor(m * turn)
    with working_precision(bits):
        angle = iv.atan2(exact(z.y), exact(z.x)) / (2 * pi())
        lo, hi = bounds(angle)
        if hi < 0:
            angle = angle + 1
        elif lo < 0:
            return None
        return certified_floor(angle * m)


def _digits(z, m, bits):
    """(a, r, b) for one coordinate, or None when undecided at ``bits``."""
    rho = Fraction(m * m + 1, m * m)
    with working_precision(bits):
        a = certified_floor(log(z.norm()) / (2 * log(rho)))
    turn = _turn_floor(z, m, bits)
    if a is None or turn is None:
        return None
    r = a % m
    return a, r, turn - r


def _omega_power(m, e):
    """Interval for omega_m^e = (1 + 1/m^2)^e exp(2 pi i e/m)."""
    modulus = iv.exp(e * log(Fraction(m * m + 1, m * m)))
    return unit_circle(e % m, m).scale(modulus)


def _dyadic(value, bits):
    lo, hi = bounds(value)
    scale = 1 << bits
    return Fraction(floor((lo + hi) / 2 * scale + Fraction(1, 2)), scale)


def _round_omega(m, exponents, ceiling=None):
    """A dyadic Gaussian t with |t^A - omega_m^A| < 1/m for each exponent A."""
    start = 32 + 2 * max(abs(e) for e in exponents).bit_length() + 2 * m.bit_length()
    for bits in precision_ladder(start=start, ceiling=ceiling):
        with working_precision(bits + 64):
            omega = _omega_power(m, 1)
            t = QuadraticNumber(_dyadic(omega.re, bits), _dyadic(omega.im, bits), -1)
            close = all(
                bounds((ComplexInterval.from_quadratic(t) ** e - _omega_power(m, e)).abs2())[1]
                < Fraction(1, m * m)
                for e in exponents
            )
        if close:
            return t
        computation_logger.log_precision("approx_complex_pair", bits * 2, f"rounding omega_{m}")
    raise ceiling_reached("approx_complex_pair", ceiling)


def _main_construction(z1, z2, eps, max_m, ceiling=None):
    m = 1
    while m <= max_m:
        bits = 64 + 4 * m.bit_length()
        digits = [_digits(z, m, bits) for z in (z1, z2)]
        if None in digits:
            logger.debug("digits undecided at m=%s", m)
            m *= 2
            continue
        exponents = tuple(a + b for a, _, b in digits)
        t = _round_omega(m, exponents, ceiling)
        distances = tuple(
            _certified_distance2(t, e, z, eps, ceiling) for e, z in zip(exponents, (z1, z2))
        )
        if None not in distances:
            a, r, b = zip(*digits)
            return ComplexApproxTrace("main", t, exponents, eps, distances, m, a, r, b)
        m *= 2
    raise PrecisionCeilingReached(f"no m <= {max_m} brings the pair within {eps}")


def _power_below(s, e, eps, ceiling=None):
    """Certified |s|^e < eps for a Gaussian s and an integer e."""
    for bits in precision_ladder(ceiling=ceiling):
        with working_precision(bits):
            lo, hi = bounds(e * log(s.norm()) / 2 - log(eps))
        if hi < 0:
            return True
        if lo >= 0:
            return False
    raise ceiling_reached("approx_complex_pair", ceiling)


def _zero_branch(z, eps, swap, ceiling=None):
    """Targets (0, z) with z != 0; ``swap`` gives (z, 0) instead."""
    if z.norm() < 1:
        s = z * (1 - min(eps, Fraction(1)) / 2)
        m = 1
        while s.norm() ** m >= eps * eps:
            m += 1
        branch, exponents = "zero-small", (m, 1)
    else:
        m = 1
        while z.norm() >= (eps * m) ** 2 or not _power_below(
            z * (1 + Fraction(1, m)), -m * m, eps, ceiling
        ):
            m += 1
        s = z * (1 + Fraction(1, m))
        branch, exponents = "zero-large", (-m * m, 1)
    targets = (_gaussian(0), z)
    if swap:
        exponents, targets = exponents[::-1], targets[::-1]
    distances = tuple(
        _certified_distance2(s, e, t, eps, ceiling) for e, t in zip(exponents, targets)
    )
    if None in distances:
        raise WitnessVerificationError(f"{branch} pair is not within {eps}")
    return ComplexApproxTrace(branch, s, exponents, eps, distances)


def approx_complex_pair(z1, z2, eps, max_m=None, ceiling=None):
    """
    A dependent pair of Gaussian rationals within eps of (z1, z2).

    For nonzero targets m runs over 1, 2, 4, ... and the pair is
    (t^(a1+b1), t^(a2+b2)) with t a dyadic rounding of
    (1 + 1/m^2) exp(2 pi i/m). The first m whose certified distances are
    below eps is returned.

    Args:
        z1, z2: Gaussian rationals (or rationals)
        eps: Positive rational
        max_m: MULTDEP_COMPLEX_MAX_M

    Returns:
        ComplexApproxTrace

    Raises:
        PrecisionCeilingReached: If m exceeds max_m
    """
    z1, z2 = _gaussian(z1), _gaussian(z2)
    eps = _check_eps(eps)
    if z1.is_zero() and z2.is_zero():
        s = _gaussian(eps / 2)
        trace = ComplexApproxTrace("both-zero", s, (1, 1), eps, (s.norm(), s.norm()))
    elif z1.is_zero() or z2.is_zero():
        z = z2 if z1.is_zero() else z1
        trace = _zero_branch(z, eps, swap=z2.is_zero(), ceiling=ceiling)
    elif is_root_of_unity(z1) and is_root_of_unity(z2):
        i = QuadraticNumber(0, 1, -1)
        exponents = tuple(next(k for k in range(4) if i**k == z) for z in (z1, z2))
        trace = ComplexApproxTrace("roots-of-unity", i, exponents, eps, (Fraction(0), Fraction(0)))
    else:
        trace = _main_construction(z1, z2, eps, resolve(max_m, "COMPLEX_MAX_M"), ceiling)
    _verify_power_vector(trace.vector)
    computation_logger.log_probe(
        "approx_complex_pair",
        f"({format_number(z1)}, {format_number(z2)})",
        to_decimal(max(trace.distance2_upper), 12, rounding="ceiling"),
        eps,
    )
    return trace


# Trace replay


def _run_real(params):
    x = parse_vector(params["x"], Ring.Q)
    return approx_real_vector(x, parse_rational(params["eps"])).as_dict()


def _run_complex(params):
    z1, z2 = (parse_number(z, Ring.ZI) for z in params["z"])
    return approx_complex_pair(z1, z2, parse_rational(params["eps"])).as_dict()


def _run_kronecker(params):
    from .lattice import kronecker_q

    return kronecker_q(
        params["r"],
        params["s"],
        parse_rational(params["eps"]),
        parse_rational(params.get("a", "1")),
        parse_rational(params.get("b", "1")),
    ).as_dict()


def _run_lattice_sum(params):
    from .lattice import approx_lattice_sum

    return approx_lattice_sum(
        parse_number(params["z"], Ring.ZI),
        parse_rational(params["eps"]),
        pair=params.get("pair", "rho"),
        shift=tuple(int(v) for v in params.get("shift", (0, 0))),
        method=params.get("method", "auto"),
    ).as_dict()


def _run_biquad(params):
    from .lattice import approx_biquad

    return approx_biquad(parse_number(params["z"], Ring.ZI), parse_rational(params["eps"])).as_dict()


REPLAYABLE = {
    "approx-real": _run_real,
    "approx-complex": _run_complex,
    "kronecker": _run_kronecker,
    "lattice-sum": _run_lattice_sum,
    "biquad": _run_biquad,
}


def make_trace(operation, params, result):
    """The trace object written by --trace: operation, string params, result."""
    return {"operation": operation, "params": params, "result": result}


def replay_trace(trace):
    """
    Re-run a stored trace.

    Raises:
        InvalidParams: For an unknown operation or a malformed trace
        ReplayMismatch: Unless the new result serializes identically
    """
    from .serializers import dumps

    try:
        operation, params, expected = trace["operation"], trace["params"], trace["result"]
    except (KeyError, TypeError) as exc:
        raise InvalidParams("a trace needs operation, params and result") from exc
    if operation not in REPLAYABLE:
        raise InvalidParams(f"cannot replay {operation!r}")
    result = REPLAYABLE[operation](params)
    if dumps(result) != dumps(expected):
        computation_logger.log_error("replay", operation, "result differs")
        raise ReplayMismatch(f"replaying {operation} gave a different result")
    return result
