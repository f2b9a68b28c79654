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
Certified enclosure of |r log q - s log p|.

Usage:
    python manage.py linform 12 19
    python manage.py linform 3 5 --p 3 --q 5
"""

from multdep.smoothgaps import linear_form

from ._base import OperationCommand


class Command(OperationCommand):
    help = "Enclosure of the linear form in two logarithms"
    operation = "linform"

    def add_operation_arguments(self, parser):
        parser.add_argument("r", type=int)
        parser.add_argument("s", type=int)
        parser.add_argument("--p", type=int, default=2, help="Default: 2")
        parser.add_argument("--q", type=int, default=3, help="Default: 3")

    def perform(self, *args, **options):
        form = linear_form(
            options["r"],
            options["s"],
            options["p"],
            options["q"],
            ceiling=options["max_precision"],
        )
        self.write_json(form.as_dict())
