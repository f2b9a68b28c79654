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
Integer of Q(sqrt2, i) within eps of a Gaussian rational.

Usage:
    python manage.py biquad 7/2 --eps 1/10
"""

from multdep.exact import Ring, format_number
from multdep.lattice import approx_biquad

from ._base import OperationCommand


class Command(OperationCommand):
    help = "Approximate z by a + b*sqrt2 + (c + d*sqrt2)*i"
    operation = "biquad"
    default_ring = Ring.ZI.value

    def add_operation_arguments(self, parser):
        parser.add_argument("z", help="Gaussian rational target")
        parser.add_argument("--eps", required=True, help="Positive rational")
        parser.add_argument("--trace", help="Write a replayable trace to this file")

    def perform(self, *args, **options):
        z = self.number(options["z"], options)
        eps = self.rational(options["eps"])
        result = approx_biquad(z, eps, ceiling=options["max_precision"]).as_dict()
        self.write_trace(options["trace"], {"z": format_number(z), "eps": str(eps)}, result)
        self.write_json(result)
