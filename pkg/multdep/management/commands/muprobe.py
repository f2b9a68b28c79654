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
Covering-radius probe over O_K^2 at (aH, bH).

Usage:
    python manage.py muprobe --H 10
    python manage.py muprobe --ring Zw --H 20 --params 2/5 9/20 1/2 11/20
"""

from multdep.covering import DEFAULT_MU2_PARAMS, mu2_probe
from multdep.exact import Ring

from ._base import OperationCommand


class Command(OperationCommand):
    help = "Probe the covering radius of dependent pairs over Zi or Zw"
    operation = "muprobe"
    default_ring = Ring.ZI.value

    def add_operation_arguments(self, parser):
        parser.add_argument("--H", default="10", help="Positive integer (default: 10)")
        parser.add_argument(
            "--params",
            nargs=4,
            metavar=("C", "A", "D", "B"),
            default=[str(p) for p in DEFAULT_MU2_PARAMS],
            help="Rationals with 0 < c < a < d < b < sqrt(2) c",
        )
        parser.add_argument("--search-bound", help="Default: max(2H, 2bH)")
        parser.add_argument(
            "--details", action="store_true", help="Also print the search bound"
        )

    def perform(self, *args, **options):
        bound = options["search_bound"]
        result = mu2_probe(
            self.ring(options),
            self.integer(options["H"], "H"),
            tuple(self.rational(p) for p in options["params"]),
            self.rational(bound) if bound is not None else None,
            budget=options["budget"],
            ceiling=options["max_precision"],
        )
        self.write_json(result.as_dict(details=options["details"]))
