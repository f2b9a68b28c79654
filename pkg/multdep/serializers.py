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
Output encodings: single-line JSON with exact values as strings, and CSV.
"""

import csv
import io
import json
from enum import Enum
from fractions import Fraction

import mpmath
from django.core.serializers.json import DjangoJSONEncoder

from .exact import QuadraticNumber, format_number


class ExactJSONEncoder(DjangoJSONEncoder):
    """Encode Fractions and quadratic numbers as their canonical strings."""

    def default(self, o):
        if isinstance(o, (Fraction, QuadraticNumber)):
            return format_number(o)
        if isinstance(o, mpmath.mpf):
            return mpmath.nstr(o, 30)
        if isinstance(o, Enum):
            return o.value
        return super().default(o)


def dumps(payload):
    """Compact, key-order preserving JSON on one line."""
    return json.dumps(payload, cls=ExactJSONEncoder, separators=(",", ":"), ensure_ascii=False)


def loads(text):
    return json.loads(text)


def csv_text(header, rows):
    """CSV with a header line and "\\n" line endings."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([format_number(v) if isinstance(v, (Fraction, QuadraticNumber)) else v for v in row])
    return buffer.getvalue()


def vector_line(vector):
    """One streamed vector: comma-separated canonical coordinates."""
    return ",".join(format_number(v) for v in vector)
