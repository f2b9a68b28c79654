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
Tests for multdep/dependence.py
"""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from multdep.dependence import (
    PowerVector,
    canonical_sign,
    exponent_matrix,
    integer_kernel,
    is_dependent,
    minimal_witness,
    mult2_decompose,
    primitive,
    verify_witness,
    witness_growth,
)
from multdep.exact import Ring
from multdep.exceptions import (
    BudgetExceeded,
    MixedRings,
    NotDependent,
    PreconditionViolation,
    RootOfUnityInput,
    ZeroCoordinate,
)

from .oracles import brute_force_dependent, eisenstein, gaussian

nonzero = st.integers(min_value=-20, max_value=20).filter(bool)


def fractions(*values):
    return tuple(Fraction(v) for v in values)


class TestHelpers:
    """Tests for canonical_sign and primitive."""

    def test_canonical_sign(self):
        assert canonical_sign((0, -2, 1)) == (0, 2, -1)
        assert canonical_sign((3, -1)) == (3, -1)

    def test_primitive(self):
        assert primitive((4, -6, 0)) == (2, -3, 0)
        assert primitive((1, 2)) == (1, 2)


class TestIntegerKernel:
    """Tests for exponent_matrix and integer_kernel."""

    def test_four_and_eight(self):
        assert integer_kernel(exponent_matrix(fractions(4, 8))) == [[3, -2]]

    def test_two_and_three(self):
        assert integer_kernel(exponent_matrix(fractions(2, 3))) == []

    def test_six_ten_fifteen(self):
        assert integer_kernel(exponent_matrix(fractions(6, 10, 15))) == []

    def test_bare_rows(self):
        assert integer_kernel([[1, 1, 0], [0, 1, 1]]) == [[1, -1, 1]]

    def test_unit_indices(self):
        matrix = exponent_matrix(fractions(-2, 3))
        assert matrix.units == (1, 0)
        assert matrix.unit_order == 2


class TestIsDependent:
    """Tests for is_dependent."""

    def test_two_four(self):
        dependent, witness = is_dependent(fractions(2, 4))
        assert dependent
        assert witness.exponents == (2, -1)
        assert not witness.unit_multiple

    def test_one_is_a_root_of_unity(self):
        dependent, witness = is_dependent(fractions(1, 7))
        assert dependent
        assert witness.exponents == (1, 0)

    def test_sign_needs_doubling(self):
        dependent, witness = is_dependent(fractions(2, -2))
        assert dependent
        assert witness.exponents == (2, -2)
        assert witness.unit_multiple
        assert verify_witness(fractions(2, -2), witness)

    def test_independent(self):
        assert is_dependent(fractions(2, 3)) == (False, None)

    def test_gaussian_pair(self):
        dependent, witness = is_dependent((gaussian(0, 2), gaussian(-4)))
        assert dependent
        assert verify_witness((gaussian(0, 2), gaussian(-4)), witness)

    def test_gaussian_primes_are_independent(self):
        assert not is_dependent((gaussian(2, 1), gaussian(1, 2)))[0]

    def test_eisenstein_unit(self):
        assert is_dependent((eisenstein(0, 1), eisenstein(2, 1)))[0]

    def test_zero_coordinate(self):
        with pytest.raises(ZeroCoordinate):
            is_dependent(fractions(0, 5))

    def test_single_coordinate(self):
        with pytest.raises(PreconditionViolation):
            is_dependent(fractions(5))

    def test_mixed_rings(self):
        with pytest.raises(MixedRings):
            is_dependent((gaussian(0, 1), eisenstein(0, 1)))

    @settings(max_examples=60, deadline=None)
    @given(st.lists(nonzero, min_size=2, max_size=3))
    def test_agrees_with_brute_force(self, values):
        values = tuple(Fraction(v) for v in values)
        dependent, witness = is_dependent(values)
        assert dependent == brute_force_dependent(values, radius=8)
        if dependent:
            assert verify_witness(values, witness)


class TestMinimalWitness:
    """Tests for minimal_witness."""

    def test_four_eight(self):
        assert minimal_witness(fractions(4, 8)).exponents == (3, -2)

    def test_tie_break(self):
        assert minimal_witness(fractions(2, 2, 4)).exponents == (1, 1, -1)

    def test_nine_twenty_seven(self):
        assert minimal_witness(fractions(9, 27)).exponents == (3, -2)

    def test_sign_character(self):
        witness = minimal_witness(fractions(-2, 2))
        assert witness.exponents == (2, -2)
        assert witness.sup_norm == 2

    def test_independent(self):
        with pytest.raises(NotDependent):
            minimal_witness(fractions(2, 3))

    def test_budget(self):
        with pytest.raises(BudgetExceeded):
            minimal_witness(fractions(2**7, 2**9, 3, 5), budget=10)

    @settings(max_examples=40, deadline=None)
    @given(st.lists(nonzero, min_size=2, max_size=3))
    def test_no_shorter_relation(self, values):
        values = tuple(Fraction(v) for v in values)
        if not is_dependent(values)[0]:
            return
        witness = minimal_witness(values)
        assert verify_witness(values, witness)
        if witness.sup_norm > 1:
            assert not brute_force_dependent(values, radius=witness.sup_norm - 1)


class TestMult2Decompose:
    """Tests for mult2_decompose."""

    def test_four_eight(self):
        result = mult2_decompose(Fraction(4), Fraction(8))
        assert (result.gamma, result.l, result.m) == (2, 2, 3)
        assert result.eta1 == 1 and result.eta2 == 1

    def test_gaussian(self):
        result = mult2_decompose(gaussian(0, 2), gaussian(-4))
        assert result.gamma == gaussian(1, 1)
        assert (result.l, result.m) == (2, 4)
        assert result.eta1 == 1 and result.eta2 == 1

    def test_primitive_base_not_coprime(self):
        result = mult2_decompose(Fraction(4), Fraction(16))
        assert (result.gamma, result.l, result.m) == (2, 2, 4)
        assert result.recombine() == (4, 16)

    def test_fractions(self):
        result = mult2_decompose(Fraction(8, 27), Fraction(4, 9))
        assert result.gamma == Fraction(2, 3)
        assert (result.l, result.m) == (3, 2)

    def test_negative_base(self):
        result = mult2_decompose(Fraction(-8), Fraction(4))
        assert (result.gamma, result.l, result.m) == (2, 3, 2)
        assert result.eta1 == -1
        assert result.recombine() == (-8, 4)

    def test_as_dict(self):
        data = mult2_decompose(Fraction(4), Fraction(8)).as_dict()
        assert data == {"gamma": "2", "l": 2, "m": 3, "eta1": "1", "eta2": "1", "h": 1}

    def test_root_of_unity(self):
        with pytest.raises(RootOfUnityInput):
            mult2_decompose(gaussian(0, 1), gaussian(2))

    def test_independent(self):
        with pytest.raises(NotDependent):
            mult2_decompose(Fraction(2), Fraction(3))


class TestPowerVector:
    """Tests for PowerVector."""

    def test_witness_from_exponents(self):
        vector = PowerVector(Fraction(-3, 2), (4, 6, 1))
        witness = vector.witness()
        assert witness.exponents == (3, -2, 0)
        assert vector.satisfies(witness)
        assert verify_witness(vector.values(), witness)

    def test_zero_exponent(self):
        vector = PowerVector(Fraction(5), (3, 0))
        assert vector.witness().exponents == (0, 1)

    def test_huge_exponents_stay_symbolic(self):
        vector = PowerVector(Fraction(-403, 400), (10**12, -(10**12) - 1))
        assert vector.satisfies(vector.witness())

    def test_rejects_non_relation(self):
        assert not PowerVector(Fraction(2), (1, 2)).satisfies((1, 1))
        assert not PowerVector(Fraction(2), (1, 2)).satisfies((0, 0))


class TestWitnessGrowth:
    """Tests for witness_growth."""

    def test_four_eight(self):
        growth = witness_growth(fractions(4, 8))
        assert growth.sup_norm == 3
        assert growth.height_squared == 64
        assert growth.witness.exponents == (3, -2)

    def test_gaussian_ring(self):
        growth = witness_growth((gaussian(0, 2), gaussian(-4)), Ring.ZI)
        assert growth.sup_norm == 2
        assert growth.height_squared == 16
