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
Find the exact nearest dependent vector to a point.

Usage:
    python manage.py nearest --ring Z 12 18
    python manage.py nearest --ring Zi 5/2+i 7/2 --search-bound 10
"""

from multdep.covering import nearest_dependent
from multdep.exact import Ring

from ._base import OperationCommand


class Command(OperationCommand):
    help = "Nearest multiplicatively dependent vector"
    operation = "nearest"
    default_ring = Ring.Z.value

    def add_operation_arguments(self, parser):
        parser.add_argument("point", nargs="+", help="Coordinates of the probe point")
        parser.add_argument(
            "--search-bound",
            help="Largest coordinate modulus considered (default: twice the largest target)",
        )
        parser.add_argument(
            "--details", action="store_true", help="Also print the search bound"
        )

    def perform(self, *args, **options):
        ring = self.ring(options)
        point = self.vector(options["point"], options)
        bound = options["search_bound"]
        result = nearest_dependent(
            point,
            ring,
            self.rational(bound) if bound is not None else None,
            budget=options["budget"],
        )
        self.write_json(result.as_dict(details=options["details"]))
