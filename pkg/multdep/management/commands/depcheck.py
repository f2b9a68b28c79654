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
Decide whether a vector is multiplicatively dependent.

Usage:
    python manage.py depcheck --ring Z 2 4
    python manage.py depcheck --ring Zi 1+i 2i
"""

from multdep.dependence import is_dependent

from ._base import OperationCommand


class Command(OperationCommand):
    help = "Decide multiplicative dependence and print a witness"
    operation = "depcheck"

    def add_operation_arguments(self, parser):
        parser.add_argument("values", nargs="+", help="Nonzero coordinates")

    def perform(self, *args, **options):
        values = self.vector(options["values"], options)
        dependent, witness = is_dependent(values, self.ring(options))
        self.write_json(
            {"dependent": dependent, "witness": witness.as_list() if witness else None}
        )
