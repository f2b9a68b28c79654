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
Census of multiplicatively dependent vectors of bounded height.

This module provides:
- count_Mn_Z: exact count of dependent integer vectors with 0 < |v_j| <= H
- count_M2_OK: exact count of dependent pairs in Z[i] / Z[w] of height <= H
- leading_term: the asymptotic main term the counts are compared with

Counts for n = 2 use the structural classification of dependent pairs
(a unit coordinate, or two powers of one primitive base); n >= 3 uses
memoized factorizations of 1..H and rank tests.
"""

import itertools
import logging
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import factorial, isqrt

import mpmath
from sympy import factorint

from .computation_logger import computation_logger
from .conf import check_budget, resolve
from .dependence import rank
from .exact import QuadraticNumber, Ring
from .exceptions import BudgetExceeded, PreconditionViolation, UnsupportedField
from .intervals import decimal_precision, to_decimal

logger = logging.getLogger(__name__)

# (w, D) for the supported imaginary quadratic fields
FIELD_DATA = {Ring.ZI: (4, -4), Ring.ZW: (6, -3)}


@dataclass(frozen=True)
class CensusReport:
    """Exact count against the leading term."""

    ring: Ring
    n: int
    bound: Fraction
    count: int
    leading: object
    ratio: object
    elapsed: float

    def as_dict(self, digits=None, timing=False):
        data = {
            "ring": self.ring.value,
            "n": self.n,
            "H": str(self.bound),
            "count": self.count,
            "leading": render_value(self.leading, digits),
            "ratio": render_value(self.ratio, digits),
        }
        if timing:
            data["elapsed"] = f"{self.elapsed:.3f}"
        return data


def render_value(value, digits=None):
    if isinstance(value, Fraction):
        return str(value) if value.denominator == 1 else to_decimal(value, digits)
    return mpmath.nstr(value, resolve(digits, "DECIMAL_DIGITS"))


def leading_term(n, H, field=Ring.Z, digits=None):
    """
    Main term of the census.

    n(n+1)(2H)^(n-1) over Z (exact); n(n+1)/2 * w * (2 pi H^2 / sqrt|D|)^(n-1)
    over an imaginary quadratic field, evaluated with ``digits`` digits.

    Args:
        n: Dimension, at least 2
        H: Height bound
        field: Ring.Z, Ring.ZI, Ring.ZW or a (w, D) pair

    Raises:
        UnsupportedField: For any other field
    """
    if n < 2 or H <= 0:
        raise PreconditionViolation("leading term needs n >= 2 and H > 0")
    H = Fraction(H)
    if field == Ring.Z:
        return n * (n + 1) * (2 * H) ** (n - 1)
    if isinstance(field, Ring):
        if field not in FIELD_DATA:
            raise UnsupportedField(f"no leading term for {field.value}")
        w, D = FIELD_DATA[field]
    else:
        w, D = field
        if (w, D) not in FIELD_DATA.values():
            raise UnsupportedField(f"unsupported field data (w, D) = ({w}, {D})")
    digits = resolve(digits, "DECIMAL_DIGITS")
    with decimal_precision(digits + 10):
        H2 = mpmath.mpf(H.numerator) ** 2 / mpmath.mpf(H.denominator) ** 2
        base = 2 * mpmath.pi * H2 / mpmath.sqrt(abs(D))
        return mpmath.mpf(n * (n + 1)) / 2 * w * base ** (n - 1)


def _ratio(count, leading):
    if isinstance(leading, Fraction):
        return Fraction(count) / leading
    return mpmath.mpf(count) / leading


# n = 2 over Z


def primitive_bases(H):
    """
    Map every integer 2..H to (primitive base, exponent).

    A primitive base is an integer >= 2 that is not a perfect power.
    """
    table = {}
    for a in range(2, H + 1):
        if a in table:
            continue
        power, e = a, 1
        while power <= H:
            table[power] = (a, e)
            power *= a
            e += 1
    return table


def _count_pairs_Z(H):
    table = primitive_bases(H)
    exponents = Counter(base for base, _ in table.values())
    return 8 * H - 4 + 4 * sum(e * e for e in exponents.values())


def _pair_dependent_Z(a, b, table):
    if abs(a) == 1 or abs(b) == 1:
        return True
    return table[abs(a)][0] == table[abs(b)][0]


# n >= 3 over Z


def _exponent_memo(H):
    return {k: factorint(k) for k in range(1, H + 1)}


def positive_integers_dependent(values, memo):
    """Dependence of a tuple of positive integers; signs never matter over Q."""
    if 1 in values or len(set(values)) < len(values):
        return True
    primes = sorted(set().union(*(memo[v] for v in values)))
    if len(primes) < len(values):
        return True
    rows = [[memo[v].get(p, 0) for v in values] for p in primes]
    return rank(rows, len(values)) < len(values)


def _multiplicity(values):
    counts = Counter(values)
    result = factorial(len(values))
    for c in counts.values():
        result //= factorial(c)
    return result


# Factorizations of 1..H, built once per pool worker
_worker_memo = {}


def _init_worker(H):
    _worker_memo.clear()
    _worker_memo[H] = _exponent_memo(H)


def _count_partition(n, H, lo, hi, memo=None):
    """Count signed dependent vectors whose smallest |v_j| lies in [lo, hi]."""
    memo = memo or _worker_memo.get(H) or _exponent_memo(H)
    total = 0
    for first in range(lo, hi + 1):
        for rest in itertools.combinations_with_replacement(range(first, H + 1), n - 1):
            values = (first,) + rest
            if positive_integers_dependent(values, memo):
                total += _multiplicity(values)
    return total * 2**n


def _partitions(H, parts):
    parts = max(1, min(parts, H))
    step = -(-H // parts)
    return [(lo, min(H, lo + step - 1)) for lo in range(1, H + 1, step)]


def count_Mn_Z(n, H, emit=None, workers=None, budget=None):
    """
    Exact number of dependent vectors in Z^n with 0 < |v_j| <= H.

    Args:
        n: Dimension, 2..4
        H: Positive integer bound
        emit: Optional callable receiving every dependent vector, in
            lexicographic order
        workers: Process count for n >= 3 partitions (None = sequential)
        budget: Work budget (MULTDEP_WORK_BUDGET)

    Returns:
        CensusReport

    Raises:
        BudgetExceeded: If n * (2H)^n exceeds the budget
    """
    if n not in (2, 3, 4) or int(H) != H or H < 1:
        raise PreconditionViolation("census needs n in 2..4 and a positive integer H")
    H = int(H)
    started = time.perf_counter()
    check_budget("count_Mn_Z", n * (2 * H) ** n if (emit or n > 2) else n * H, budget)
    memo = None
    if n == 2:
        count = _count_pairs_Z(H)
    else:
        if workers and workers > 1:
            with ProcessPoolExecutor(
                max_workers=workers, initializer=_init_worker, initargs=(H,)
            ) as pool:
                futures = [
                    pool.submit(_count_partition, n, H, lo, hi)
                    for lo, hi in _partitions(H, workers * 4)
                ]
                count = sum(f.result() for f in futures)
        else:
            memo = _exponent_memo(H)
            count = _count_partition(n, H, 1, H, memo)
    if emit is not None:
        _emit_Z(n, H, emit, memo)
    leading = leading_term(n, H)
    elapsed = time.perf_counter() - started
    computation_logger.log_census("Z", n, H, count, elapsed)
    return CensusReport(
        Ring.Z, n, Fraction(H), count, leading, _ratio(count, leading), elapsed
    )


def _emit_Z(n, H, emit, memo=None):
    values = [v for v in range(-H, H + 1) if v]
    if n == 2:
        table = primitive_bases(H)
        for a in values:
            for b in values:
                if _pair_dependent_Z(a, b, table):
                    emit((a, b))
        return
    memo = memo or _exponent_memo(H)
    cache = {}
    for vector in itertools.product(values, repeat=n):
        key = tuple(sorted(abs(v) for v in vector))
        if key not in cache:
            cache[key] = positive_integers_dependent(key, memo)
        if cache[key]:
            emit(vector)


# n = 2 over Z[i] / Z[w]


def canonical_elements(ring, norm_bound):
    """
    Canonical (first-sector) nonzero ring integers with norm <= norm_bound,
    ordered by (norm, x, y).
    """
    d = ring.d
    found = []
    limit = isqrt(int(norm_bound)) + 1
    for x in range(1, 2 * limit + 1):
        for y in range(0, 2 * limit + 1):
            value = QuadraticNumber(x, y, d)
            norm = value.norm()
            if norm <= norm_bound:
                found.append(value)
            elif y > 0 and norm > norm_bound:
                break
    return sorted(found, key=lambda v: (v.norm(), v.x, v.y))


def power_classes(ring, norm_bound):
    """
    Map canonical non-unit elements to (primitive base, exponent).

    Bases are processed in increasing norm so that every perfect power is
    reached from its primitive root.
    """
    from .arith import canonical_associate

    elements = canonical_elements(ring, norm_bound)
    table = {}
    for gamma in elements:
        if gamma.norm() == 1 or gamma in table:
            continue
        power, e = gamma, 1
        while power.norm() <= norm_bound:
            table[canonical_associate(power)] = (gamma, e)
            power = power * gamma
            e += 1
    return elements, table


def count_M2_OK(H, ring=Ring.ZI, emit=None, budget=None, max_height=None):
    """
    Exact number of dependent pairs of nonzero integers of Z[i] / Z[w] with
    Weil height <= H, i.e. max(1, |alpha|) <= H.

    Pairs of roots of unity (height 1) are included. No nonzero integer has
    height below 1, so the count is 0 for H < 1.

    Args:
        H: Positive rational bound
        ring: Ring.ZI or Ring.ZW
        emit: Optional callable receiving every dependent pair
        budget: Work budget (MULTDEP_WORK_BUDGET)
        max_height: Largest accepted H (MULTDEP_OK_CENSUS_MAX_H)

    Raises:
        BudgetExceeded: If H is above the configured bound or the work
            estimate exceeds the budget
    """
    if ring not in FIELD_DATA:
        raise UnsupportedField(f"count_M2_OK needs Zi or Zw, got {ring.value}")
    H = Fraction(H)
    if H <= 0:
        raise PreconditionViolation("H must be positive")
    max_height = resolve(max_height, "OK_CENSUS_MAX_H")
    if H > max_height:
        raise BudgetExceeded(f"H = {H} is above the configured bound {max_height}")
    started = time.perf_counter()
    norm_bound = H * H
    w = ring.unit_order
    check_budget("count_M2_OK", int(norm_bound) * 4 + 1, budget)
    elements, table = power_classes(ring, norm_bound)
    total = w * len(elements)
    exponents = Counter(base for base, _ in table.values())
    count = 0
    if total:
        powers = sum((w * e) ** 2 for e in exponents.values())
        count = total * total - (total - w) ** 2 + powers
    if emit is not None:
        check_budget("count_M2_OK emission", total * total, budget)
        _emit_OK(ring, elements, table, emit)
    leading = leading_term(2, H, ring)
    elapsed = time.perf_counter() - started
    computation_logger.log_census(ring.value, 2, H, count, elapsed)
    return CensusReport(ring, 2, H, count, leading, _ratio(count, leading), elapsed)


def _emit_OK(ring, elements, table, emit):
    from .arith import canonical_associate
    from .exact import units

    everything = sorted(
        (u * e for e in elements for u in units(ring)), key=lambda v: (v.x, v.y)
    )

    def klass(value):
        if value.norm() == 1:
            return None
        return table[canonical_associate(value)][0]

    classes = [klass(v) for v in everything]
    for a, ca in zip(everything, classes):
        for b, cb in zip(everything, classes):
            if ca is None or cb is None or ca == cb:
                emit((a, b))
