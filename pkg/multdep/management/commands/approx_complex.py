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
Dependent pair of Gaussian rationals within eps of a complex target.

Usage:
    python manage.py approx_complex 3+2i 1/2-i --eps 1/10
    python manage.py approx_complex 0 1/2 --eps 1/10 --trace pair.json
"""

from multdep.density import approx_complex_pair
from multdep.exact import Ring, format_number

from ._base import OperationCommand


class Command(OperationCommand):
    help = "Approximate a complex pair by a multiplicatively dependent one"
    operation = "approx-complex"
    default_ring = Ring.ZI.value

    def add_operation_arguments(self, parser):
        parser.add_argument("z1", help="Gaussian rational, e.g. 3/2-i")
        parser.add_argument("z2")
        parser.add_argument("--eps", required=True, help="Positive rational")
        parser.add_argument("--max-m", type=int, help="Default: MULTDEP_COMPLEX_MAX_M")
        parser.add_argument("--trace", help="Write a replayable trace to this file")

    def perform(self, *args, **options):
        z1 = self.number(options["z1"], options)
        z2 = self.number(options["z2"], options)
        eps = self.rational(options["eps"])
        result = approx_complex_pair(
            z1, z2, eps, max_m=options["max_m"], ceiling=options["max_precision"]
        ).as_dict()
        self.write_trace(
            options["trace"],
            {"z": [format_number(z1), format_number(z2)], "eps": str(eps)},
            result,
        )
        self.write_json(result)
