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
Covering-radius probes.

This module provides:
- nearest_dependent: exact nearest dependent vector to a target point
- rho_probe / mu2_probe: probes at the lower-bound witness points over Z
  and over Z[i] / Z[w]
- empty_box: exhaustive check of a box around prime-power coordinates
- stewart_approx: approximation of a complex number by 2^a 3^b alpha^c
- smooth_probe: nearest {2,3}-smooth vector, the upper-bound side

All distances are exact squared rationals. Ties go to the
lexicographically smallest vector.
"""

import itertools
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, floor, isqrt
from typing import Optional, Tuple

import mpmath
from sympy import factorint, prime

from .census import positive_integers_dependent, power_classes, primitive_bases
from .computation_logger import computation_logger
from .conf import check_budget, resolve
from .dependence import is_dependent
from .exact import (
    QuadraticNumber,
    Ring,
    coerce_vector,
    distance2,
    format_number,
    norm2,
    sort_key,
    units,
    vector_distance2,
)
from .exceptions import (
    ArgumentIsRootOfUnity,
    InvalidParams,
    PreconditionViolation,
    SearchBudgetExceeded,
    WitnessVerificationError,
)
from .intervals import (
    bounds,
    ceiling_reached,
    decimal_precision,
    exact,
    precision_ladder,
    sqrt,
    to_decimal,
    working_precision,
)

logger = logging.getLogger(__name__)

DEFAULT_MU2_PARAMS = (Fraction(2, 5), Fraction(9, 20), Fraction(1, 2), Fraction(11, 20))
STEWART_CATALOG = ("2+i", "3+i", "2+w")
SMOOTH_EXPONENT = Fraction(1, 40452)


@dataclass(frozen=True)
class ProbeResult:
    """Nearest dependent vector found for a probe point."""

    probe: Tuple
    nearest: Tuple
    dist2: Fraction
    search_bound: Fraction
    bound: Optional[Fraction] = None
    volume_bound: Optional[str] = None
    reference: Optional[str] = None

    def satisfies_bound(self):
        return self.bound is None or self.dist2 >= self.bound * self.bound

    def as_dict(self, digits=None, details=False):
        data = {
            "probe": [format_number(v) for v in self.probe],
            "nearest": [format_number(v) for v in self.nearest],
            "dist2": str(self.dist2),
        }
        if self.bound is not None:
            data["bound"] = _rational_text(self.bound, digits)
        if self.reference:
            data["reference"] = self.reference
        if details:
            data["search_bound"] = str(self.search_bound)
            if self.volume_bound:
                data["volume_bound"] = self.volume_bound
        return data


@dataclass(frozen=True)
class EmptyBoxCertificate:
    n: int
    H: int
    center: Tuple[int, ...]
    halfwidth: int
    checked: int
    dependent_count: int
    counterexample: Optional[Tuple[int, ...]] = None
    volume_bound: str = ""

    @property
    def status(self):
        return "Empty" if self.counterexample is None else "Counterexample"

    def as_dict(self):
        return {
            "n": self.n,
            "H": self.H,
            "center": list(self.center),
            "halfwidth": self.halfwidth,
            "status": self.status,
            "checked": self.checked,
            "dependent": self.dependent_count,
            "counterexample": list(self.counterexample) if self.counterexample else None,
            "volume_bound": self.volume_bound,
        }


@dataclass(frozen=True)
class StewartResult:
    z: object
    alpha3: object
    exponents: Tuple[int, int, int]
    t: object = field(repr=False)
    dist2: Fraction
    checked: int

    def as_dict(self, digits=None):
        with decimal_precision(resolve(digits, "DECIMAL_DIGITS") + 5):
            distance = mpmath.sqrt(mpmath.mpf(self.dist2.numerator) / self.dist2.denominator)
        return {
            "z": format_number(self.z),
            "alpha3": format_number(self.alpha3),
            "exponents": list(self.exponents),
            "t": format_number(self.t),
            "dist2": str(self.dist2),
            "distance": mpmath.nstr(distance, resolve(digits, "DECIMAL_DIGITS")),
            "checked": self.checked,
        }


def _rational_text(value, digits=None):
    if value.denominator < 10**6:
        return str(value)
    return to_decimal(value, digits, rounding="floor")


def volume_bound(n, H):
    """Symbolic lower bound of the volume argument; c3(n) is not explicit."""
    return f"c3({n})*{H}^(1/{n})"


# Candidate generation


def _nearest(candidates, target):
    """Candidates at minimal exact distance from target."""
    best, found = None, []
    for c in candidates:
        d = distance2(target, c)
        if best is None or d < best:
            best, found = d, [c]
        elif d == best:
            found.append(c)
    return found


def _integer_window(t, radius2, bound):
    """Nonzero integers v with (t - v)^2 <= radius2 and |v| <= bound."""
    r = isqrt(ceil(radius2)) + 1
    lo, hi = max(-bound, floor(t) - r), min(bound, floor(t) + r + 1)
    return [v for v in range(lo, hi + 1) if v and (t - v) ** 2 <= radius2]


def _ring_window(z, ring, radius2, norm_bound):
    """Nonzero ring integers v with |z - v|^2 <= radius2 and N(v) <= norm_bound."""
    r = isqrt(ceil(radius2)) + 1
    x0, y0 = floor(z.x), floor(z.y)
    found = []
    for i in range(-2 * r - 2, 2 * r + 3):
        for j in range(-2 * r - 2, 2 * r + 3):
            v = QuadraticNumber(x0 + i, y0 + j, ring.d)
            if v.is_zero() or v.norm() > norm_bound:
                continue
            if (z - v).norm() <= radius2:
                found.append(v)
    return found


def _nearest_nonzero(t, ring, bound):
    """Nearest nonzero ring integers to t inside the search bound."""
    if ring.is_quadratic:
        return _nearest(_ring_window(t, ring, Fraction(4), bound * bound), t)
    t = Fraction(t)
    clipped = min(max(t, -bound), bound)
    candidates = {floor(clipped), floor(clipped) + 1, -1, 1, bound, -bound}
    return _nearest(sorted(v for v in candidates if v and abs(v) <= bound), t)


def _better(candidate, best):
    return best is None or candidate < best


def _key(dist2, vector):
    return (dist2, tuple(sort_key(v) for v in vector))


# Nearest dependent vector


def nearest_dependent(x, ring=Ring.Z, search_bound=None, budget=None):
    """
    Exact nearest multiplicatively dependent vector to x.

    Args:
        x: Target point with exact coordinates (rationals over Z, Gaussian or
            Eisenstein rationals over Z[i] / Z[w])
        ring: Ring of the candidate vectors
        search_bound: Largest |v_j| considered; at least 2 * max |x_j|
        budget: Work budget (MULTDEP_WORK_BUDGET)

    Returns:
        ProbeResult with the minimizer and its exact squared distance

    Raises:
        PreconditionViolation: If the search bound is below 2 * max |x_j|
        BudgetExceeded: If the candidate space exceeds the work budget
    """
    if ring == Ring.Q:
        ring = Ring.Z
    x = coerce_vector(x, ring)
    n = len(x)
    if n < 2:
        raise PreconditionViolation("need at least two coordinates")
    largest = max(norm2(v) for v in x)
    if search_bound is None:
        search_bound = max(2, 2 * isqrt(ceil(largest)) + 2)
    search_bound = Fraction(search_bound)
    if search_bound * search_bound < 4 * largest:
        raise PreconditionViolation(
            f"search bound {search_bound} is below 2*max|x_j|"
        )
    bound = floor(search_bound)
    if n == 2:
        v, d = _nearest_pair(x, ring, bound, budget)
    else:
        v, d = _branch_and_bound(x, ring, bound, budget)
    result = ProbeResult(x, v, d, search_bound)
    computation_logger.log_probe("nearest_dependent", result.as_dict()["probe"], d)
    return result


def _pair_candidates_Z(x, bound, budget):
    check_budget("nearest_dependent", bound * max(1, bound.bit_length()), budget)
    table = primitive_bases(bound)
    units_Z = [-1, 1]
    for j in range(2):
        others = _nearest_nonzero(x[1 - j], Ring.Z, bound)
        for u in _nearest(units_Z, x[j]):
            for o in others:
                yield (u, o) if j == 0 else (o, u)
    powers = {}
    for value, (base, _) in table.items():
        powers.setdefault(base, []).extend((-value, value))
    for group in powers.values():
        group.sort()
        for pair in itertools.product(_nearest(group, x[0]), _nearest(group, x[1])):
            yield pair


def _pair_candidates_OK(x, ring, bound, budget):
    norm_bound = bound * bound
    check_budget("nearest_dependent", 4 * norm_bound + 1, budget)
    ring_units = units(ring)
    _, table = power_classes(ring, norm_bound)
    for j in range(2):
        others = _nearest_nonzero(x[1 - j], ring, bound)
        for u in _nearest(ring_units, x[j]):
            for o in others:
                yield (u, o) if j == 0 else (o, u)
    groups = {}
    for power, (base, _) in table.items():
        groups.setdefault(base, []).extend(u * power for u in ring_units)
    for group in groups.values():
        for pair in itertools.product(_nearest(group, x[0]), _nearest(group, x[1])):
            yield pair


def _nearest_pair(x, ring, bound, budget):
    if ring.is_quadratic:
        candidates = _pair_candidates_OK(x, ring, bound, budget)
    else:
        candidates = _pair_candidates_Z(x, bound, budget)
    best, best_v = None, None
    for v in candidates:
        key = _key(vector_distance2(x, v), v)
        if _better(key, best):
            best, best_v = key, tuple(v)
    return best_v, best[0]


def _incumbents(x, ring, bound):
    """Dependent seeds: one unit coordinate, or two equal coordinates."""
    n = len(x)
    nearest = [_nearest_nonzero(t, ring, bound)[0] for t in x]
    ring_units = units(ring)
    for j in range(n):
        v = list(nearest)
        v[j] = _nearest(ring_units, x[j])[0]
        yield tuple(v)
    for i, j in itertools.combinations(range(n), 2):
        middle = (x[i] + x[j]) / 2
        v = list(nearest)
        v[i] = v[j] = _nearest_nonzero(middle, ring, bound)[0]
        yield tuple(v)


def _branch_and_bound(x, ring, bound, budget):
    """
    Ball search for n >= 3.

    Coordinates are fixed one at a time; a branch is cut as soon as its
    partial squared distance exceeds the incumbent. Leaves are decided by
    the exponent-matrix rank test.
    """
    budget = resolve(budget, "WORK_BUDGET")
    best = None
    for v in _incumbents(x, ring, bound):
        key = _key(vector_distance2(x, v), v)
        if _better(key, best):
            best, best_v = key, v
    radius2 = best[0]

    def window(t):
        if ring.is_quadratic:
            values = _ring_window(t, ring, radius2, bound * bound)
        else:
            values = _integer_window(t, radius2, bound)
        return sorted(values, key=lambda v: (distance2(t, v), sort_key(v)))

    windows = [window(t) for t in x]
    nodes = 0

    def descend(prefix, partial):
        nonlocal best, best_v, nodes
        nodes += 1
        if nodes > budget:
            raise SearchBudgetExceeded(f"ball search exceeded {budget} nodes")
        j = len(prefix)
        if j == len(x):
            key = _key(partial, prefix)
            if _better(key, best) and is_dependent(prefix, ring)[0]:
                best, best_v = key, prefix
            return
        for v in windows[j]:
            d = partial + distance2(x[j], v)
            if d > best[0]:
                break
            descend(prefix + (v,), d)

    descend((), Fraction(0))
    logger.debug("ball search visited %s nodes", nodes)
    return best_v, best[0]


# Lower-bound witness probes


def rho_probe(H, search_bound=None, budget=None):
    """
    Probe the covering radius over Z^2 at x = (H/2, 3H/4).

    No dependent vector lies closer than H/12; the result is checked
    against that bound exactly.

    Args:
        H: Positive integer divisible by 12
        search_bound: Defaults to 2 * max|x_j| = 3H/2

    Raises:
        PreconditionViolation: If H is not a positive multiple of 12
    """
    if int(H) != H or H < 12 or H % 12:
        raise PreconditionViolation("rho_probe needs a positive multiple of 12")
    H = int(H)
    x = (Fraction(H, 2), Fraction(3 * H, 4))
    search_bound = Fraction(3 * H, 2) if search_bound is None else search_bound
    found = nearest_dependent(x, Ring.Z, search_bound, budget)
    result = ProbeResult(
        found.probe,
        found.nearest,
        found.dist2,
        found.search_bound,
        bound=Fraction(H, 12),
        volume_bound=volume_bound(2, H),
    )
    _check_bound("rho_probe", result)
    return result


def _check_bound(operation, result):
    computation_logger.log_probe(
        operation, result.as_dict()["probe"], result.dist2, result.bound
    )
    if not result.satisfies_bound():
        computation_logger.log_error(operation, result.as_dict()["probe"], "bound violated")
        raise WitnessVerificationError(
            f"{operation}: distance below the proven bound {result.bound}"
        )


def validate_mu2_params(params):
    """
    Check 0 < c < a < d < b < 2^(1/2) c exactly (via b^2 < 2 c^2).

    Raises:
        InvalidParams: If the chain fails
    """
    c, a, d, b = (Fraction(p) for p in params)
    if not 0 < c < a < d < b:
        raise InvalidParams("parameters must satisfy 0 < c < a < d < b")
    if not b * b < 2 * c * c:
        raise InvalidParams("parameters must satisfy b < 2^(1/2) c")
    return c, a, d, b


def _sqrt2_gap_lower(c, b, ceiling=None):
    """Certified rational lower bound of 2^(1/2) c - b (positive by the chain)."""
    for bits in precision_ladder(ceiling=ceiling):
        with working_precision(bits):
            lo, _ = bounds(sqrt(2) * exact(c) - exact(b))
        if lo > 0:
            return lo
        computation_logger.log_precision("mu2_probe", bits * 2, "sqrt2 gap undecided")
    raise ceiling_reached("mu2_probe", ceiling)


def mu2_bound(params, H, ceiling=None):
    """Exact rational lower bound min(b-d, d-a, a-c, 2^(1/2) c - b) * H."""
    c, a, d, b = validate_mu2_params(params)
    return min(b - d, d - a, a - c, _sqrt2_gap_lower(c, b, ceiling)) * H


def mu2_probe(
    ring=Ring.ZI, H=10, params=None, search_bound=None, budget=None, ceiling=None
):
    """
    Probe the covering radius over O_K^2 at z = (aH, bH).

    Args:
        ring: Ring.ZI or Ring.ZW
        H: Positive integer
        params: (c, a, d, b), defaults to (2/5, 9/20, 1/2, 11/20)
        search_bound: Largest modulus considered, defaults to max(2H, 2bH)
        ceiling: MULTDEP_PRECISION_CEILING_BITS for the certified bound

    Raises:
        InvalidParams: If the parameter chain fails
    """
    if not ring.is_quadratic:
        raise InvalidParams("mu2_probe works over Zi or Zw")
    params = DEFAULT_MU2_PARAMS if params is None else params
    c, a, d, b = validate_mu2_params(params)
    if int(H) != H or H < 1:
        raise PreconditionViolation("H must be a positive integer")
    z = (QuadraticNumber(a * H, 0, ring.d), QuadraticNumber(b * H, 0, ring.d))
    if search_bound is None:
        search_bound = max(2 * H, ceil(2 * b * H))
    found = nearest_dependent(z, ring, search_bound, budget)
    result = ProbeResult(
        found.probe,
        found.nearest,
        found.dist2,
        found.search_bound,
        bound=mu2_bound((c, a, d, b), H, ceiling),
    )
    _check_bound("mu2_probe", result)
    return result


# Empty box


def first_primes(n):
    return [prime(j) for j in range(1, n + 1)]


def largest_power_at_most(p, limit):
    q = 1
    while q * p <= limit:
        q *= p
    return q


def empty_box(n, H, halfwidth, budget=None):
    """
    Check that no dependent vector lies in the box of the given halfwidth
    around (q_1, ..., q_n), q_j the largest power of the j-th prime <= H/2.

    Every point is tested; the first dependent point in lexicographic order
    is kept as counterexample and all dependent points are counted.

    Raises:
        PreconditionViolation: If n is not in 3..5, H < 2 p_n, or the box
            reaches non-positive coordinates
        BudgetExceeded: If (2*halfwidth + 1)^n exceeds the work budget
    """
    if n not in (3, 4, 5):
        raise PreconditionViolation("empty_box needs n in 3..5")
    if halfwidth < 0 or int(halfwidth) != halfwidth:
        raise PreconditionViolation("halfwidth must be a non-negative integer")
    primes = first_primes(n)
    if H < 2 * primes[-1]:
        raise PreconditionViolation(f"H must be at least {2 * primes[-1]}")
    center = tuple(largest_power_at_most(p, Fraction(H, 2)) for p in primes)
    if halfwidth >= min(center):
        raise PreconditionViolation("the box must stay inside the positive orthant")
    check_budget("empty_box", n * (2 * halfwidth + 1) ** n, budget)
    ranges = [range(q - halfwidth, q + halfwidth + 1) for q in center]
    memo = {v: factorint(v) for r in ranges for v in r}
    checked, dependent, counterexample = 0, 0, None
    for point in itertools.product(*ranges):
        checked += 1
        if positive_integers_dependent(tuple(sorted(point)), memo):
            dependent += 1
            if counterexample is None:
                counterexample = point
    if counterexample is not None and not is_dependent(counterexample)[0]:
        raise WitnessVerificationError(f"{counterexample} is not dependent")
    certificate = EmptyBoxCertificate(
        n, H, center, halfwidth, checked, dependent, counterexample, volume_bound(n, H)
    )
    computation_logger.log_certificate(n, H, halfwidth, certificate.status, checked)
    return certificate


# Stewart's set


def _argument_is_root_of_unity(alpha):
    ratio = alpha / alpha.conjugate()
    return ratio ** alpha.ring.unit_order == 1


def stewart_approx(z, alpha3, exponent_box, budget=None, prune=True):
    """
    Best approximation of z by t = 2^h1 * 3^h2 * alpha3^h3 inside the box.

    Candidates with |t| outside [|z|/4, 4|z|] are scanned only when the
    window's best distance is at least 3|z|/4, so pruning never changes the
    result. Ties go to the smallest (h1, h2, h3).

    Args:
        z: Target, rational or in the field of alpha3
        alpha3: Nonreal integer of Z[i] or Z[w] with |alpha3| > 1
        exponent_box: (B1, B2, B3), exponents run over 0..B_i
        prune: Use the modulus window

    Raises:
        ArgumentIsRootOfUnity: If alpha3/|alpha3| is a root of unity
        PreconditionViolation: If |z| < 3 or alpha3 is real or too small
    """
    if not isinstance(alpha3, QuadraticNumber) or alpha3.is_rational():
        raise PreconditionViolation("alpha3 must be a nonreal quadratic integer")
    if alpha3.norm() <= 1:
        raise PreconditionViolation("alpha3 must have modulus > 1")
    if _argument_is_root_of_unity(alpha3):
        raise ArgumentIsRootOfUnity(
            f"{format_number(alpha3)} has an argument that is a rational multiple of pi"
        )
    z = QuadraticNumber.of(z, alpha3.d)
    target = z.norm()
    if target < 9:
        raise PreconditionViolation("stewart_approx needs |z| >= 3")
    B1, B2, B3 = (int(b) for b in exponent_box)
    if min(B1, B2, B3) < 0:
        raise PreconditionViolation("exponent bounds must be non-negative")
    check_budget("stewart_approx", (B1 + 1) * (B2 + 1) * (B3 + 1), budget)

    alpha_norm = alpha3.norm()
    powers = [QuadraticNumber(1, 0, alpha3.d)]
    for _ in range(B3):
        powers.append(powers[-1] * alpha3)

    def scan(window):
        best, checked = None, 0
        for h in itertools.product(range(B1 + 1), range(B2 + 1), range(B3 + 1)):
            norm = Fraction(4) ** h[0] * Fraction(9) ** h[1] * alpha_norm ** h[2]
            if window and not (target / 16 <= norm <= 16 * target):
                continue
            checked += 1
            t = powers[h[2]] * (2 ** h[0] * 3 ** h[1])
            key = ((z - t).norm(), h)
            if best is None or key < best[0]:
                best = (key, t)
        return best, checked

    best, checked = scan(prune)
    if prune and (best is None or best[0][0] >= 9 * target / 16):
        logger.debug("stewart window inconclusive, scanning the full box")
        best, extra = scan(False)
        checked += extra
    (dist2, h), t = best
    return StewartResult(z, alpha3, h, t, dist2, checked)


# Smooth vectors


def smooth_numbers(limit):
    """Positive {2,3}-smooth integers <= limit, sorted."""
    found = []
    p2 = 1
    while p2 <= limit:
        p3 = p2
        while p3 <= limit:
            found.append(p3)
            p3 *= 3
        p2 *= 2
    return sorted(found)


def smooth_reference(H, exponent=SMOOTH_EXPONENT, digits=None):
    """H * (log H)^(-exponent) as a decimal string (report only)."""
    digits = resolve(digits, "DECIMAL_DIGITS")
    H = Fraction(H)
    with decimal_precision(digits + 10):
        h = mpmath.mpf(H.numerator) / H.denominator
        e = mpmath.mpf(exponent.numerator) / exponent.denominator
        return mpmath.nstr(h * mpmath.log(h) ** (-e), digits)


def smooth_probe(x, budget=None):
    """
    Nearest vector of signed {2,3}-smooth integers to x (n >= 3).

    Such a vector has an exponent matrix of rank at most 2, so it is always
    dependent; its distance is an upper bound for the distance to the
    nearest dependent vector.
    """
    x = coerce_vector(x, Ring.Q)
    if len(x) < 3:
        raise PreconditionViolation("smooth_probe needs n >= 3")
    limit = 2 * max(ceil(abs(t)) for t in x) + 2
    check_budget("smooth_probe", len(x) * limit.bit_length() ** 2, budget)
    smooth = smooth_numbers(limit)
    signed = sorted([-s for s in smooth] + smooth)
    v = tuple(min(_nearest(signed, t)) for t in x)
    H = max(max(abs(t) for t in x), Fraction(3))
    result = ProbeResult(
        x,
        v,
        vector_distance2(x, v),
        Fraction(limit),
        reference=smooth_reference(H),
    )
    computation_logger.log_probe("smooth_probe", result.as_dict()["probe"], result.dist2)
    return result
