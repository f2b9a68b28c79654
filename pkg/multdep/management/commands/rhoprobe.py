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
Covering-radius probe over Z^2 at (H/2, 3H/4).

Usage:
    python manage.py rhoprobe --H 24
"""

from multdep.covering import rho_probe
from multdep.exact import Ring

from ._base import OperationCommand


class Command(OperationCommand):
    help = "Probe the covering radius of dependent pairs of integers"
    operation = "rhoprobe"
    default_ring = Ring.Z.value

    def add_operation_arguments(self, parser):
        parser.add_argument("--H", required=True, help="Positive multiple of 12")
        parser.add_argument("--search-bound", help="Default: 3H/2")
        parser.add_argument(
            "--details",
            action="store_true",
            help="Also print the search bound and the volume lower bound",
        )

    def perform(self, *args, **options):
        bound = options["search_bound"]
        result = rho_probe(
            self.integer(options["H"], "H"),
            self.rational(bound) if bound is not None else None,
            budget=options["budget"],
        )
        self.write_json(result.as_dict(details=options["details"]))
