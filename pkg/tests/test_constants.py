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
Tests for multdep/constants.py
"""

from fractions import Fraction

import pytest

from multdep.constants import (
    LATTICE_PAIRS,
    REAL_CATALOG,
    RealConstant,
    independent_with_one,
    lattice_pair,
    parse_constant,
)
from multdep.exceptions import UnsupportedConstant
from multdep.intervals import bounds, working_precision


class TestRealConstant:
    """Tests for RealConstant and parse_constant."""

    def test_catalog_entries_evaluate(self):
        with working_precision(128):
            for name in REAL_CATALOG:
                lo, hi = bounds(RealConstant.named(name).evaluate())
                assert 0 < lo <= hi < 3

    def test_negated_name(self):
        constant = parse_constant("-cbrt2")
        assert constant.terms == {"cbrt2": Fraction(-1)}

    def test_linear_combination(self):
        constant = RealConstant.named("sqrt2").scale(3) + 1
        assert str(constant) == "1 + 3*sqrt2"
        with working_precision(128):
            lo, hi = bounds(constant.evaluate())
        assert Fraction(5242, 1000) < lo <= hi < Fraction(5243, 1000)

    def test_cancelled_terms_are_dropped(self):
        constant = RealConstant.named("sqrt3") - RealConstant.named("sqrt3")
        assert constant.is_rational()
        assert str(constant) == "0"

    def test_unknown_name(self):
        with pytest.raises(UnsupportedConstant):
            parse_constant("pi")

    def test_unknown_term(self):
        with pytest.raises(UnsupportedConstant):
            RealConstant({"e": Fraction(1)})


class TestIndependence:
    """Tests for independent_with_one."""

    def test_distinct_entries(self):
        assert independent_with_one(parse_constant("sqrt2"), parse_constant("sqrt3"))

    def test_same_entry(self):
        assert not independent_with_one(parse_constant("sqrt2"), parse_constant("sqrt2"))

    def test_rational_shift_does_not_help(self):
        shifted = parse_constant("sqrt2") + 1
        assert not independent_with_one(shifted, parse_constant("sqrt2").scale(2))

    def test_rational_constant(self):
        assert not independent_with_one(RealConstant(offset=Fraction(1, 2)), parse_constant("sqrt2"))


class TestLatticePairs:
    """Tests for lattice_pair."""

    @pytest.mark.parametrize("name", sorted(LATTICE_PAIRS))
    def test_beta_is_alpha_squared(self, name):
        pair = lattice_pair(name)
        with working_precision(128):
            alpha, beta = pair.alpha(), pair.beta()
            square = alpha * alpha
            for part in ("re", "im"):
                lo, hi = bounds(getattr(beta, part) - getattr(square, part))
                assert abs(lo) < Fraction(1, 2**100)
                assert abs(hi) < Fraction(1, 2**100)

    def test_default_is_rho(self):
        assert lattice_pair().name == "rho"

    def test_unknown(self):
        with pytest.raises(UnsupportedConstant):
            lattice_pair("tau")
