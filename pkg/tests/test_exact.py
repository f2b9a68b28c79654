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
Tests for multdep/exact.py
"""

from fractions import Fraction

import pytest

from multdep.exact import (
    QuadraticNumber,
    Ring,
    coerce_vector,
    format_number,
    is_root_of_unity,
    norm2,
    parse_number,
    parse_rational,
    ring_of,
    unit_index,
    units,
)
from multdep.exceptions import MixedRings, ParseError, ZeroInput

from .oracles import eisenstein, gaussian


class TestParseRational:
    """Tests for parse_rational."""

    def test_fraction(self):
        assert parse_rational("-8/9") == Fraction(-8, 9)

    def test_decimal_is_exact(self):
        assert parse_rational("0.25") == Fraction(1, 4)

    def test_integer(self):
        assert parse_rational("12") == 12

    def test_rejects_garbage(self):
        with pytest.raises(ParseError):
            parse_rational("two")

    def test_rejects_zero_denominator(self):
        with pytest.raises(ParseError):
            parse_rational("1/0")


class TestParseNumber:
    """Tests for parse_number."""

    def test_gaussian_literal(self):
        assert parse_number("3/2-i", Ring.ZI) == gaussian(Fraction(3, 2), -1)

    def test_pure_imaginary(self):
        assert parse_number("2i", Ring.ZI) == gaussian(0, 2)
        assert parse_number("-i", Ring.ZI) == gaussian(0, -1)

    def test_negative_real_part(self):
        assert parse_number("-1-2i", Ring.ZI) == gaussian(-1, -2)

    def test_eisenstein_literal(self):
        assert parse_number("2+w", Ring.ZW) == eisenstein(2, 1)

    def test_rational_ring(self):
        assert parse_number("5", Ring.Q) == 5

    def test_empty(self):
        with pytest.raises(ParseError):
            parse_number("", Ring.Q)


class TestFormatNumber:
    """Tests for format_number."""

    def test_gaussian(self):
        assert format_number(gaussian(1, -2)) == "1-2i"
        assert format_number(gaussian(0, 1)) == "i"
        assert format_number(gaussian(0, -1)) == "-i"
        assert format_number(gaussian(Fraction(1, 2), Fraction(3, 4))) == "1/2+3/4i"

    def test_rational_embedded(self):
        assert format_number(gaussian(7)) == "7"

    def test_fraction(self):
        assert format_number(Fraction(-8, 9)) == "-8/9"

    def test_parse_inverts_format(self):
        for value in (gaussian(3, -4), gaussian(0, 5), gaussian(-1, 1)):
            assert parse_number(format_number(value), Ring.ZI) == value


class TestQuadraticArithmetic:
    """Tests for QuadraticNumber arithmetic."""

    def test_i_squared(self):
        i = gaussian(0, 1)
        assert i * i == -1

    def test_tau_relation(self):
        tau = eisenstein(0, 1)
        # tau^2 = tau - 1
        assert tau * tau == tau - 1

    def test_tau_is_sixth_root_of_unity(self):
        assert eisenstein(0, 1) ** 6 == 1
        assert eisenstein(0, 1) ** 3 == -1

    def test_norm(self):
        assert gaussian(3, 4).norm() == 25
        assert eisenstein(2, 1).norm() == 7

    def test_division(self):
        assert gaussian(3, 4) / gaussian(2, 1) == gaussian(2, 1)

    def test_negative_power(self):
        assert gaussian(1, 1) ** -2 == gaussian(0, Fraction(-1, 2))

    def test_division_by_zero(self):
        with pytest.raises(ZeroInput):
            gaussian(1, 1) / gaussian(0, 0)

    def test_mixed_fields(self):
        with pytest.raises(MixedRings):
            gaussian(1, 1) + eisenstein(1, 1)

    def test_rational_equality_and_hash(self):
        assert gaussian(3) == 3
        assert hash(gaussian(3)) == hash(Fraction(3))


class TestUnits:
    """Tests for units, unit_index and is_root_of_unity."""

    def test_gaussian_units(self):
        assert units(Ring.ZI) == [1, gaussian(0, 1), -1, gaussian(0, -1)]

    def test_eisenstein_has_six(self):
        assert len(set(units(Ring.ZW))) == 6

    def test_unit_index(self):
        assert unit_index(gaussian(0, -1), Ring.ZI) == 3
        assert unit_index(gaussian(1, 1), Ring.ZI) is None

    def test_roots_of_unity(self):
        assert is_root_of_unity(Fraction(-1))
        assert is_root_of_unity(gaussian(0, 1))
        assert not is_root_of_unity(Fraction(2))
        assert not is_root_of_unity(gaussian(1, 1))


class TestRings:
    """Tests for ring_of, coerce_vector and norm2."""

    def test_ring_of_gaussian(self):
        assert ring_of([Fraction(2), gaussian(1, 1)]) == Ring.ZI

    def test_ring_of_rationals(self):
        assert ring_of([Fraction(2), Fraction(3)]) == Ring.Q

    def test_ring_of_mixed(self):
        with pytest.raises(MixedRings):
            ring_of([gaussian(0, 1), eisenstein(0, 1)])

    def test_coerce_to_rationals(self):
        assert coerce_vector([gaussian(2), 3], Ring.Q) == (Fraction(2), Fraction(3))

    def test_coerce_rejects_nonreal(self):
        with pytest.raises(MixedRings):
            coerce_vector([gaussian(0, 1)], Ring.Q)

    def test_norm2(self):
        assert norm2(Fraction(-3, 2)) == Fraction(9, 4)
        assert norm2(gaussian(1, 2)) == 5
