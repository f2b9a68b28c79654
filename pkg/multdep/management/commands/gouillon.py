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
Linear-forms constant A(p, q) and the derived gap exponent c0.

Usage:
    python manage.py gouillon 2 3
"""

from multdep.smoothgaps import gouillon_A

from ._base import OperationCommand


class Command(OperationCommand):
    help = "Constant A of the two-logarithm lower bound and c0 = 1/ceil(A)"
    operation = "gouillon"

    def add_operation_arguments(self, parser):
        parser.add_argument("p", type=int)
        parser.add_argument("q", type=int)

    def perform(self, *args, **options):
        constant = gouillon_A(options["p"], options["q"], ceiling=options["max_precision"])
        self.write_json(constant.as_dict())
