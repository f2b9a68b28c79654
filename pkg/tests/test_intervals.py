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
Tests for multdep/intervals.py
"""

import threading
import time
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

import mpmath
import pytest
from mpmath import iv

from multdep.exceptions import PrecisionCeilingReached
from multdep.intervals import (
    ComplexInterval,
    bounds,
    ceiling_reached,
    certified_floor,
    compare,
    cube_root,
    decimal_precision,
    exact,
    interval_to_decimals,
    log,
    midpoint_decimal,
    precision_ladder,
    sqrt,
    to_decimal,
    unit_circle,
    working_precision,
)

from .oracles import gaussian


class TestWorkingPrecision:
    """Tests for working_precision and precision_ladder."""

    def test_restores_precision(self):
        saved = iv.prec
        with working_precision(300):
            assert iv.prec == 300
        assert iv.prec == saved

    def test_restores_after_error(self):
        saved = iv.prec
        with pytest.raises(RuntimeError):
            with working_precision(200):
                raise RuntimeError("boom")
        assert iv.prec == saved

    def test_threads_wait_for_each_other(self):
        entered = threading.Event()
        seen = []

        def hold():
            with working_precision(200):
                entered.set()
                for _ in range(20):
                    seen.append(iv.prec)
                    time.sleep(0.005)

        def intrude():
            entered.wait()
            with working_precision(80):
                return iv.prec

        saved = iv.prec
        with ThreadPoolExecutor(max_workers=2) as pool:
            held = pool.submit(hold)
            other = pool.submit(intrude)
            held.result()
            assert other.result() == 80
        assert set(seen) == {200}
        assert iv.prec == saved

    def test_decimal_precision(self):
        saved = mpmath.mp.dps
        with decimal_precision(40):
            assert mpmath.mp.dps == 40
            with working_precision(100):
                assert iv.prec == 100
        assert mpmath.mp.dps == saved

    def test_ladder_doubles(self):
        assert list(precision_ladder(64, 512)) == [64, 128, 256, 512]

    def test_ceiling_error(self):
        error = ceiling_reached("linear_form", 128)
        assert isinstance(error, PrecisionCeilingReached)
        assert "128" in str(error)


class TestBounds:
    """Tests for exact, bounds, compare and certified_floor."""

    def test_exact_rational_is_enclosed(self):
        with working_precision(64):
            lo, hi = bounds(exact(Fraction(1, 3)))
        assert lo <= Fraction(1, 3) <= hi

    def test_integer_is_exact(self):
        assert bounds(exact(7)) == (Fraction(7), Fraction(7))

    def test_sqrt2_enclosure(self):
        with working_precision(128):
            lo, hi = bounds(sqrt(2))
        assert lo * lo < 2 < hi * hi
        assert hi - lo < Fraction(1, 2**100)

    def test_compare(self):
        with working_precision(64):
            assert compare(sqrt(2), Fraction(7, 5)) == 1
            assert compare(sqrt(2), Fraction(3, 2)) == -1

    def test_certified_floor(self):
        with working_precision(64):
            assert certified_floor(log(1000)) == 6

    def test_cube_root(self):
        with working_precision(128):
            lo, hi = bounds(cube_root(2))
        assert lo**3 < 2 < hi**3


class TestComplexInterval:
    """Tests for ComplexInterval."""

    def test_from_gaussian(self):
        z = ComplexInterval.from_quadratic(gaussian(3, -4))
        assert bounds(z.re) == (3, 3)
        assert bounds(z.im) == (-4, -4)

    def test_abs2(self):
        z = ComplexInterval.from_quadratic(gaussian(3, 4))
        assert bounds(z.abs2()) == (25, 25)

    def test_power_matches_exact(self):
        with working_precision(128):
            z = ComplexInterval.from_quadratic(gaussian(1, 1)) ** 8
        assert bounds(z.re) == (16, 16)
        assert bounds(z.im) == (0, 0)

    def test_negative_power(self):
        with working_precision(128):
            z = ComplexInterval.from_quadratic(gaussian(0, 2)) ** -1
            lo, hi = bounds(z.im)
        assert lo <= Fraction(-1, 2) <= hi

    def test_unit_circle_quarter_turn(self):
        with working_precision(128):
            z = unit_circle(1, 4)
            re_lo, re_hi = bounds(z.re)
            im_lo, im_hi = bounds(z.im)
        assert re_lo <= 0 <= re_hi
        assert im_lo <= 1 <= im_hi
        assert re_hi - re_lo < Fraction(1, 2**100)


class TestDecimals:
    """Tests for to_decimal, interval_to_decimals and midpoint_decimal."""

    def test_nearest(self):
        assert to_decimal(Fraction(2, 3), 5) == "0.66667"

    def test_directed(self):
        assert to_decimal(Fraction(2, 3), 5, rounding="floor") == "0.66666"
        assert to_decimal(Fraction(2, 3), 5, rounding="ceiling") == "0.66667"
        assert to_decimal(Fraction(-2, 3), 5, rounding="floor") == "-0.66667"

    def test_integers_keep_trailing_zeros(self):
        assert to_decimal(Fraction(1200), 3) == "1200"

    def test_zero(self):
        assert to_decimal(Fraction(0)) == "0"

    def test_small_values_use_exponent(self):
        assert to_decimal(Fraction(1, 10**9), 3) == "1e-9"

    def test_carry_into_next_digit(self):
        assert to_decimal(Fraction(9999, 1000), 3) == "10"

    def test_outward_rounding(self):
        lo, hi = interval_to_decimals((Fraction(1, 3), Fraction(2, 3)), 3)
        assert lo == "0.333"
        assert hi == "0.667"

    def test_midpoint(self):
        assert midpoint_decimal((Fraction(1), Fraction(2)), 5) == "1.5"
