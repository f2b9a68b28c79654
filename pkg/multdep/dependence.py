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
Multiplicative dependence: exponent matrices, integer kernels and witnesses.

A vector v is multiplicatively dependent when v^k = 1 for some nonzero
integer vector k. This module provides:
- ExponentMatrix construction from exact coordinates
- integer_kernel: LLL-reduced basis of the integer kernel
- is_dependent / minimal_witness: decision and shortest witness
- mult2_decompose: alpha = eta1 * gamma^l, beta = eta2 * gamma^m
- PowerVector: vectors of powers of one base, certified without expansion
"""

import itertools
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Tuple

from sympy.polys.domains import ZZ
from sympy.polys.matrices import DomainMatrix

from .arith import associate_with_unit, exponent_vector, weil_height
from .conf import check_budget, get_setting, resolve
from .exact import (
    QuadraticNumber,
    coerce_vector,
    format_number,
    is_root_of_unity,
    is_zero,
    ring_of,
)
from .exceptions import (
    NotDependent,
    PreconditionViolation,
    RootOfUnityInput,
    WitnessVerificationError,
    ZeroCoordinate,
)

logger = logging.getLogger(__name__)

# Exhaustive shell search is used up to this dimension
EXHAUSTIVE_WITNESS_DIMENSION = 4


@dataclass(frozen=True)
class ExponentMatrix:
    """Prime exponents (rows) of each coordinate (columns) plus unit indices."""

    primes: Tuple
    columns: Tuple[Tuple[int, ...], ...]
    units: Tuple[int, ...]
    unit_order: int

    @property
    def n(self):
        return len(self.columns)

    def rows(self):
        """Row-major integer matrix, one row per prime."""
        return [[col[i] for col in self.columns] for i in range(len(self.primes))]


@dataclass(frozen=True)
class RelationWitness:
    """Integer vector k with v^k = 1."""

    exponents: Tuple[int, ...]
    unit_multiple: bool = False

    @property
    def sup_norm(self):
        return max(abs(k) for k in self.exponents)

    def as_list(self):
        return list(self.exponents)


@dataclass(frozen=True)
class Mult2Decomposition:
    """alpha^h = eta1 * gamma^l and beta^h = eta2 * gamma^m."""

    gamma: object
    l: int
    m: int
    eta1: object
    eta2: object
    h: int = 1

    def recombine(self):
        return (self.eta1 * self.gamma**self.l, self.eta2 * self.gamma**self.m)

    def as_dict(self):
        return {
            "gamma": format_number(self.gamma),
            "l": self.l,
            "m": self.m,
            "eta1": format_number(self.eta1),
            "eta2": format_number(self.eta2),
            "h": self.h,
        }


def canonical_sign(vector):
    """Flip the vector so that its first nonzero entry is positive."""
    for entry in vector:
        if entry:
            return tuple(vector) if entry > 0 else tuple(-e for e in vector)
    return tuple(vector)


def primitive(vector):
    g = reduce(gcd, vector, 0)
    if g <= 1:
        return tuple(vector)
    return tuple(e // g for e in vector)


def _validate(values, ring=None):
    if len(values) < 1:
        raise PreconditionViolation("empty vector")
    ring = ring_of(values) if ring is None else ring
    values = coerce_vector(values, ring)
    for j, v in enumerate(values):
        if is_zero(v):
            raise ZeroCoordinate(f"coordinate {j + 1} is zero")
    return values, ring


def exponent_matrix(values, ring=None, **limits):
    """
    Build the exponent matrix of a vector of nonzero exact numbers.

    Raises:
        ZeroCoordinate: If a coordinate is zero
        MixedRings: If the coordinates live in different quadratic fields
    """
    values, ring = _validate(tuple(values), ring)
    maps = [exponent_vector(v, **limits) for v in values]
    primes = set()
    for m in maps:
        primes.update(m.exponents)
    primes = tuple(sorted(primes, key=_row_key))
    columns = tuple(tuple(m.exponents.get(p, 0) for p in primes) for m in maps)
    return ExponentMatrix(
        primes, columns, tuple(m.unit_index for m in maps), ring.unit_order
    )


def _row_key(p):
    if isinstance(p, QuadraticNumber):
        return (p.norm(), p.x, p.y)
    return (Fraction(p), 0, 0)


def _column_reduce(rows, n):
    """
    Unimodular column reduction of [A; I].

    Returns the identity part of the columns whose A part vanished, which
    is a basis of the integer kernel of A.
    """
    # Work on columns: each column is (a_part, id_part)
    cols = [
        ([row[j] for row in rows], [1 if i == j else 0 for i in range(n)])
        for j in range(n)
    ]
    pivot = 0
    for r in range(len(rows)):
        while True:
            live = [c for c in range(pivot, n) if cols[c][0][r] != 0]
            if len(live) <= 1:
                break
            # Euclid step on the smallest entry of the row
            best = min(live, key=lambda c: abs(cols[c][0][r]))
            b_a, b_i = cols[best]
            for c in live:
                if c == best:
                    continue
                q = cols[c][0][r] // b_a[r]
                a_part, i_part = cols[c]
                cols[c] = (
                    [x - q * y for x, y in zip(a_part, b_a)],
                    [x - q * y for x, y in zip(i_part, b_i)],
                )
        live = [c for c in range(pivot, n) if cols[c][0][r] != 0]
        if live:
            c = live[0]
            cols[pivot], cols[c] = cols[c], cols[pivot]
            pivot += 1
        if pivot == n:
            break
    return [cols[c][1] for c in range(pivot, n)]


def lll_reduce(basis):
    """LLL-reduce a list of independent integer vectors (rows)."""
    if len(basis) <= 1:
        return [list(b) for b in basis]
    n = len(basis[0])
    matrix = DomainMatrix([[ZZ(x) for x in b] for b in basis], (len(basis), n), ZZ)
    reduced = matrix.lll()
    return [[int(x) for x in row] for row in reduced.to_Matrix().tolist()]


def integer_kernel(matrix, n=None):
    """
    Integer kernel basis of an exponent matrix.

    Args:
        matrix: ExponentMatrix, or a row-major list of integer rows
        n: Number of columns when ``matrix`` is a bare list

    Returns:
        List of LLL-reduced kernel vectors, first nonzero entry positive;
        empty when the columns are independent
    """
    if isinstance(matrix, ExponentMatrix):
        rows, n = matrix.rows(), matrix.n
    else:
        rows = [list(r) for r in matrix]
        if n is None:
            n = len(rows[0]) if rows else 0
    if n == 0:
        return []
    basis = _column_reduce(rows, n) if rows else [
        [1 if i == j else 0 for i in range(n)] for j in range(n)
    ]
    if not basis:
        return []
    return [list(canonical_sign(b)) for b in lll_reduce(basis)]


def rank(rows, n):
    """Rank over Q of an integer matrix given row-major."""
    if not rows or n == 0:
        return 0
    return DomainMatrix([[ZZ(x) for x in r] for r in rows], (len(rows), n), ZZ).rank()


def unit_character(matrix, k):
    """Unit index of v^k, i.e. sum k_j * u_j modulo w."""
    return sum(kj * uj for kj, uj in zip(k, matrix.units)) % matrix.unit_order


def _fix_unit_character(matrix, k):
    chi = unit_character(matrix, k)
    if chi == 0:
        return tuple(k), False
    factor = matrix.unit_order // gcd(matrix.unit_order, chi)
    return tuple(factor * e for e in k), True


def evaluate_power_product(values, k):
    """Exact value of prod v_j^k_j."""
    result = Fraction(1)
    for v, e in zip(values, k):
        if e:
            result = result * v**e
    return result


def verify_witness(values, witness):
    """
    True when values^witness == 1 by exact evaluation.

    Args:
        values: Vector of nonzero exact numbers
        witness: RelationWitness or integer sequence
    """
    k = witness.exponents if isinstance(witness, RelationWitness) else tuple(witness)
    if len(k) != len(values) or not any(k):
        return False
    return evaluate_power_product(values, k) == 1


def _check(values, witness):
    if get_setting("CHECK_WITNESSES") and not verify_witness(values, witness):
        raise WitnessVerificationError(
            f"witness {witness.as_list()} fails for {[format_number(v) for v in values]}"
        )
    return witness


def is_dependent(values, ring=None, **limits):
    """
    Decide multiplicative dependence of v (n >= 2).

    Returns:
        (dependent, witness) where witness is a RelationWitness or None.
        When the reduced kernel vector leaves a nontrivial root of unity the
        witness is its smallest multiple killing it and is flagged.

    Raises:
        ZeroCoordinate: If any coordinate is zero
        MixedRings: If coordinates come from different quadratic fields
    """
    values = tuple(values)
    if len(values) < 2:
        raise PreconditionViolation("dependence needs at least two coordinates")
    matrix = exponent_matrix(values, ring, **limits)
    kernel = integer_kernel(matrix)
    if not kernel:
        return False, None
    k, flagged = _fix_unit_character(matrix, kernel[0])
    witness = RelationWitness(canonical_sign(k), flagged)
    values, _ = _validate(values, ring)
    return True, _check(values, witness)


def valid_lattice_basis(matrix):
    """
    Basis of {k : E k = 0 and v^k has trivial unit part}.

    Solved as the kernel of [[E, 0], [u, -w]] projected to the first n
    coordinates.
    """
    n, w = matrix.n, matrix.unit_order
    rows = [row + [0] for row in matrix.rows()]
    rows.append(list(matrix.units) + [-w])
    extended = integer_kernel(rows, n + 1)
    projected = [b[:n] for b in extended]
    return [list(canonical_sign(b)) for b in lll_reduce(projected)] if projected else []


def _shell(n, radius):
    """Canonical integer vectors with sup-norm exactly ``radius``."""
    for vector in itertools.product(range(-radius, radius + 1), repeat=n):
        if max(abs(e) for e in vector) != radius:
            continue
        if canonical_sign(vector) != vector:
            continue
        yield vector


def _in_lattice(matrix, k):
    for row in matrix.rows():
        if sum(a * b for a, b in zip(row, k)):
            return False
    return unit_character(matrix, k) == 0


def minimal_witness(values, ring=None, budget=None, **limits):
    """
    Witness of minimal sup-norm.

    For n <= 4 the valid lattice is searched shell by shell up to the
    smallest sup-norm in its LLL basis; ties go to the lexicographically
    greatest canonical vector. Larger n return the best LLL basis vector.

    Raises:
        NotDependent: If v is multiplicatively independent
        BudgetExceeded: If the shell search exceeds the work budget
    """
    values = tuple(values)
    if len(values) < 2:
        raise PreconditionViolation("dependence needs at least two coordinates")
    matrix = exponent_matrix(values, ring, **limits)
    basis = valid_lattice_basis(matrix)
    if not basis:
        raise NotDependent("the vector is multiplicatively independent")
    values, _ = _validate(values, ring)
    best = max(basis, key=lambda b: (-max(abs(e) for e in b), tuple(b)))
    radius_limit = max(abs(e) for e in best)
    n = matrix.n
    if n <= EXHAUSTIVE_WITNESS_DIMENSION:
        budget = resolve(budget, "WORK_BUDGET")
        spent = 0
        for radius in range(1, radius_limit + 1):
            spent += (2 * radius + 1) ** n
            check_budget("minimal_witness", spent, budget)
            found = [k for k in _shell(n, radius) if _in_lattice(matrix, k)]
            if found:
                best = max(found)
                break
    k = tuple(best)
    flagged = tuple(primitive(k)) != k
    return _check(values, RelationWitness(k, flagged))


def mult2_decompose(alpha, beta, **limits):
    """
    Decompose a dependent pair as alpha = eta1*gamma^l, beta = eta2*gamma^m.

    gamma is the primitive base of the pair: both coordinates are powers of
    it up to roots of unity and it is not itself a proper power. l > 0 is the
    gcd of alpha's prime exponents, so l and m need not be coprime: (4, 16)
    gives gamma = 2, l = 2, m = 4. gamma is canonicalized (positive over Q,
    first quadrant associate over Z[i] / Z[w]).

    Raises:
        RootOfUnityInput: If alpha or beta is a root of unity
        NotDependent: If the pair is independent
    """
    for value in (alpha, beta):
        if not is_zero(value) and is_root_of_unity(value):
            raise RootOfUnityInput(f"{format_number(value)} is a root of unity")
    matrix = exponent_matrix((alpha, beta), **limits)
    (alpha, beta), ring = _validate((alpha, beta))
    e_alpha, e_beta = matrix.columns
    if rank(matrix.rows(), 2) > 1:
        raise NotDependent("the pair is multiplicatively independent")
    l = reduce(gcd, e_alpha, 0)
    base = [e // l for e in e_alpha]
    pivot = next(i for i, e in enumerate(base) if e)
    m = e_beta[pivot] // base[pivot]

    if ring.is_quadratic:
        gamma = QuadraticNumber(1, 0, ring.d)
        for p, e in zip(matrix.primes, base):
            gamma = gamma * p**e
        gamma, _ = associate_with_unit(gamma)
    else:
        gamma = Fraction(1)
        for p, e in zip(matrix.primes, base):
            gamma *= Fraction(p) ** e
    eta1 = alpha / gamma**l
    eta2 = beta / gamma**m
    decomposition = Mult2Decomposition(gamma, l, m, eta1, eta2)
    if get_setting("CHECK_WITNESSES") and decomposition.recombine() != (alpha, beta):
        raise WitnessVerificationError("decomposition does not recombine")
    return decomposition


@dataclass(frozen=True)
class PowerVector:
    """
    The vector (base^e_1, ..., base^e_n).

    Any two coordinates are powers of one base, so dependence is certified
    by exponent arithmetic without expanding the coordinates.
    """

    base: object
    exponents: Tuple[int, ...]

    def values(self):
        return tuple(self.base**e for e in self.exponents)

    def value(self, j):
        return self.base ** self.exponents[j]

    def witness(self):
        """Canonical witness supported on at most two coordinates."""
        n = len(self.exponents)
        for j, e in enumerate(self.exponents):
            if e == 0:
                return RelationWitness(tuple(1 if i == j else 0 for i in range(n)))
        e1, e2 = self.exponents[0], self.exponents[1]
        g = gcd(e1, e2)
        k = [0] * n
        k[0], k[1] = e2 // g, -e1 // g
        return RelationWitness(canonical_sign(k))

    def satisfies(self, k):
        """True when sum k_j * e_j == 0, so that v^k = base^0 = 1."""
        k = k.exponents if isinstance(k, RelationWitness) else k
        return any(k) and sum(a * b for a, b in zip(k, self.exponents)) == 0

    def root_of_unity_flags(self):
        return [e == 0 or is_root_of_unity(self.base) for e in self.exponents]


@dataclass(frozen=True)
class WitnessGrowth:
    sup_norm: int
    height_squared: Fraction
    witness: RelationWitness = field(compare=False)


def witness_growth(values, ring=None, **limits):
    """Sup-norm of the minimal witness next to the largest squared height."""
    witness = minimal_witness(values, ring, **limits)
    values, _ = _validate(tuple(values), ring)
    height = max(weil_height(v).squared for v in values)
    return WitnessGrowth(witness.sup_norm, height, witness)
