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
Brute-force oracles the fast paths are checked against.
"""

import itertools
from fractions import Fraction

from sympy import factorint

from multdep.exact import QuadraticNumber


def gaussian(x, y=0):
    return QuadraticNumber(Fraction(x), Fraction(y), -1)


def eisenstein(x, y=0):
    return QuadraticNumber(Fraction(x), Fraction(y), -3)


def brute_force_dependent(values, radius=8):
    """True when v^k = 1 for some nonzero k with sup-norm <= radius."""
    values = [Fraction(v) if isinstance(v, int) else v for v in values]
    for k in itertools.product(range(-radius, radius + 1), repeat=len(values)):
        if not any(k):
            continue
        product = Fraction(1)
        for v, e in zip(values, k):
            if e:
                product = product * v**e
        if product == 1:
            return True
    return False


def _pair_dependent(a, b):
    """Integer pair test by exponent proportionality."""
    if abs(a) == 1 or abs(b) == 1:
        return True
    fa, fb = factorint(abs(a)), factorint(abs(b))
    if set(fa) != set(fb):
        return False
    p = next(iter(fa))
    return all(fa[q] * fb[p] == fb[q] * fa[p] for q in fa)


def naive_census_pairs(H):
    """Double loop over all nonzero integer pairs with |a|, |b| <= H."""
    values = [v for v in range(-H, H + 1) if v]
    return sum(1 for a in values for b in values if _pair_dependent(a, b))


def nearest_dependent_pair(x, radius):
    """Exhaustive nearest dependent integer pair inside [-radius, radius]^2."""
    values = [v for v in range(-radius, radius + 1) if v]
    best = None
    for a in values:
        for b in values:
            if not _pair_dependent(a, b):
                continue
            d = (x[0] - a) ** 2 + (x[1] - b) ** 2
            if best is None or d < best[0]:
                best = (d, (a, b))
    return best


def rank_dependent(point):
    """Rank test on the exponent matrix of a tuple of positive integers."""
    from sympy import Matrix

    if 1 in point:
        return True
    factors = [factorint(v) for v in point]
    primes = sorted(set().union(*factors))
    if len(primes) < len(point):
        return True
    rows = [[f.get(p, 0) for f in factors] for p in primes]
    return Matrix(rows).rank() < len(point)


def sieve_smooth(primes, limit):
    """Integers <= limit whose prime factors all lie in ``primes``."""
    found = []
    for k in range(1, limit + 1):
        rest = k
        for p in primes:
            while rest % p == 0:
                rest //= p
        if rest == 1:
            found.append(k)
    return found


def lattice_sum_radius(x, y, eps, radix=2, bound=50):
    """
    Smallest max(|b|, |c|) <= bound with a + b*alpha + c*alpha^2 within eps of
    x + y*i, where alpha = radix^(1/3) exp(2 pi i/3) and a is the integer
    nearest to x - Re(b*alpha + c*alpha^2). None when there is none.
    """
    import mpmath

    with mpmath.workdps(40):
        alpha = mpmath.cbrt(radix) * mpmath.expjpi(mpmath.mpf(2) / 3)
        beta = alpha**2
        target = mpmath.mpc(
            mpmath.mpf(x.numerator) / x.denominator,
            mpmath.mpf(y.numerator) / y.denominator,
        )
        limit = mpmath.mpf(eps.numerator) / eps.denominator
        for radius in range(bound + 1):
            for b, c in itertools.product(range(-radius, radius + 1), repeat=2):
                if max(abs(b), abs(c)) != radius:
                    continue
                shifted = b * alpha + c * beta
                a = mpmath.floor(target.real - shifted.real + mpmath.mpf(1) / 2)
                if abs(a + shifted - target) < limit:
                    return radius
    return None
