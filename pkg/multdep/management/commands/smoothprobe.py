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
Nearest vector of signed {2,3}-smooth integers (always dependent).

Usage:
    python manage.py smoothprobe 100 250 333
"""

from multdep.covering import smooth_probe

from ._base import OperationCommand


class Command(OperationCommand):
    help = "Upper-bound probe by {2,3}-smooth vectors, n >= 3"
    operation = "smoothprobe"

    def add_operation_arguments(self, parser):
        parser.add_argument("point", nargs="+", help="Rational target coordinates")

    def perform(self, *args, **options):
        point = self.vector(options["point"], options)
        self.write_json(smooth_probe(point, budget=options["budget"]).as_dict())
