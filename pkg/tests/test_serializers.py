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
Tests for multdep/serializers.py
"""

from fractions import Fraction

import mpmath

from multdep.exact import Ring
from multdep.serializers import csv_text, dumps, loads, vector_line

from .oracles import gaussian


class TestDumps:
    """Tests for dumps and loads."""

    def test_compact_single_line(self):
        text = dumps({"dependent": True, "witness": [2, -1]})
        assert text == '{"dependent":true,"witness":[2,-1]}'

    def test_exact_values_as_strings(self):
        text = dumps({"dist2": Fraction(1, 2), "z": gaussian(1, -2)})
        assert text == '{"dist2":"1/2","z":"1-2i"}'

    def test_enum_and_mpf(self):
        data = loads(dumps({"ring": Ring.ZI, "x": mpmath.mpf(1) / 4}))
        assert data["ring"] == Ring.ZI.value
        assert data["x"] == "0.25"

    def test_key_order_preserved(self):
        assert dumps({"b": 1, "a": 2}) == '{"b":1,"a":2}'


class TestCsvText:
    """Tests for csv_text and vector_line."""

    def test_header_and_rows(self):
        text = csv_text(["j", "m", "gap"], [[1, 1, 1], [2, Fraction(3, 2), 1]])
        assert text == "j,m,gap\n1,1,1\n2,3/2,1\n"

    def test_vector_line(self):
        assert vector_line((Fraction(-2), Fraction(4))) == "-2,4"
