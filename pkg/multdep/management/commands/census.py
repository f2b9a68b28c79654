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
Count dependent vectors up to a height bound.

Usage:
    python manage.py census --H 100
    python manage.py census --n 3 --H 20 --workers 4
    python manage.py census --ring Zi --H 10
    python manage.py census --H 3 --emit --format csv
"""

from multdep.census import count_M2_OK, count_Mn_Z
from multdep.exact import Ring
from multdep.exceptions import PreconditionViolation, UnsupportedField
from multdep.serializers import vector_line

from ._base import OperationCommand


class Command(OperationCommand):
    help = "Exact census of multiplicatively dependent vectors"
    operation = "census"
    default_ring = Ring.Z.value

    def add_operation_arguments(self, parser):
        parser.add_argument("--n", type=int, default=2, help="Dimension (default: 2)")
        parser.add_argument("--H", required=True, help="Height bound")
        parser.add_argument(
            "--emit", action="store_true", help="Stream every dependent vector"
        )
        parser.add_argument(
            "--workers", type=int, help="Worker processes for n >= 3 over Z"
        )
        parser.add_argument(
            "--timing", action="store_true", help="Include the elapsed time"
        )

    def perform(self, *args, **options):
        ring = self.ring(options)
        if ring == Ring.Q:
            raise UnsupportedField("the census runs over Z, Zi or Zw")
        n = options["n"]
        if ring != Ring.Z and n != 2:
            raise PreconditionViolation("the census over Zi and Zw is for pairs only")
        bound = self.rational(options["H"])
        emit = self.emit_vector if options["emit"] else None

        if ring == Ring.Z:
            report = count_Mn_Z(
                n, bound, emit=emit, workers=options["workers"], budget=options["budget"]
            )
        else:
            report = count_M2_OK(bound, ring, emit=emit, budget=options["budget"])

        data = report.as_dict(timing=options["timing"])
        if options["format"] == "csv" and not options["emit"]:
            self.write_csv(list(data), [list(data.values())])
        else:
            # streamed vectors end with the summary line
            self.write_json(data)

    def emit_vector(self, vector):
        """Write one dependent vector as a comma-separated line."""
        self.stdout.write(vector_line(vector))
