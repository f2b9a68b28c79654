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
Certified convergents of log p / log q.

Usage:
    python manage.py convergents 2 3 --count 9
"""

from multdep.smoothgaps import cf_convergents

from ._base import OperationCommand


class Command(OperationCommand):
    help = "Continued fraction convergents of log p / log q"
    operation = "convergents"

    def add_operation_arguments(self, parser):
        parser.add_argument("p", type=int)
        parser.add_argument("q", type=int)
        parser.add_argument(
            "--count", type=int, default=10, help="Number of convergents (default: 10)"
        )

    def perform(self, *args, **options):
        convergents = cf_convergents(
            options["p"], options["q"], options["count"], ceiling=options["max_precision"]
        )
        rows = [c.as_dict() for c in convergents]
        if options["format"] == "csv":
            self.write_csv(
                ["j", "r", "s", "error_lo", "error_hi"],
                ([row["j"], row["r"], row["s"], *row["error"]] for row in rows),
            )
        else:
            for row in rows:
                self.write_json(row)
