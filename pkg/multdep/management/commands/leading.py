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
Print the main term of the census.

Usage:
    python manage.py leading --n 3 --H 100
    python manage.py leading --ring Zw --H 50
"""

from multdep.census import leading_term, render_value
from multdep.exact import Ring

from ._base import OperationCommand


class Command(OperationCommand):
    help = "Leading term of the dependent-vector count"
    operation = "leading"
    default_ring = Ring.Z.value

    def add_operation_arguments(self, parser):
        parser.add_argument("--n", type=int, default=2, help="Dimension (default: 2)")
        parser.add_argument("--H", required=True, help="Height bound")

    def perform(self, *args, **options):
        ring = self.ring(options)
        bound = self.rational(options["H"])
        value = leading_term(options["n"], bound, ring)
        self.write_json(
            {
                "ring": ring.value,
                "n": options["n"],
                "H": str(bound),
                "leading": render_value(value),
            }
        )
