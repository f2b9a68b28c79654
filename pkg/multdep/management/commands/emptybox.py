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
Certify that a box around a vector of prime powers holds no dependent vector.

Usage:
    python manage.py emptybox --n 3 --H 1000 --halfwidth 5
"""

from multdep.covering import empty_box
from multdep.exact import Ring

from ._base import OperationCommand


class Command(OperationCommand):
    help = "Empty-box certificate around (p_1^e_1, ..., p_n^e_n)"
    operation = "emptybox"
    default_ring = Ring.Z.value

    def add_operation_arguments(self, parser):
        parser.add_argument("--n", type=int, default=3, help="Dimension, 3..5 (default: 3)")
        parser.add_argument("--H", required=True, help="Height bound")
        parser.add_argument("--halfwidth", required=True, help="Half side of the box")

    def perform(self, *args, **options):
        certificate = empty_box(
            options["n"],
            self.integer(options["H"], "H"),
            self.integer(options["halfwidth"], "halfwidth"),
            budget=options["budget"],
        )
        self.write_json(certificate.as_dict())
