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
Dependent rational vector within eps of a real target.

Usage:
    python manage.py approx_real 2 4 --eps 1/10
    python manage.py approx_real -1 -1 0 --eps 1/2 --trace real.json
"""

from multdep.density import approx_real_vector
from multdep.exact import format_number

from ._base import OperationCommand


class Command(OperationCommand):
    help = "Approximate a real vector by a multiplicatively dependent one"
    operation = "approx-real"

    def add_operation_arguments(self, parser):
        parser.add_argument("x", nargs="+", help="Rational target coordinates")
        parser.add_argument("--eps", required=True, help="Positive rational")
        parser.add_argument("--trace", help="Write a replayable trace to this file")

    def perform(self, *args, **options):
        x = self.vector(options["x"], options)
        eps = self.rational(options["eps"])
        result = approx_real_vector(x, eps, ceiling=options["max_precision"]).as_dict()
        self.write_trace(
            options["trace"], {"x": [format_number(t) for t in x], "eps": str(eps)}, result
        )
        self.write_json(result)
