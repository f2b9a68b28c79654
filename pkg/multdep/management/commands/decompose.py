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
Write a dependent pair as alpha = eta1 * gamma^l, beta = eta2 * gamma^m.

Usage:
    python manage.py decompose 8 -4
    python manage.py decompose --ring Zi 2i -4
"""

from multdep.dependence import mult2_decompose

from ._base import OperationCommand


class Command(OperationCommand):
    help = "Decompose a dependent pair over a common base"
    operation = "decompose"

    def add_operation_arguments(self, parser):
        parser.add_argument("alpha")
        parser.add_argument("beta")

    def perform(self, *args, **options):
        alpha = self.number(options["alpha"], options)
        beta = self.number(options["beta"], options)
        self.write_json(mult2_decompose(alpha, beta).as_dict())
