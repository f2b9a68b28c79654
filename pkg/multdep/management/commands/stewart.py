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
Approximate a complex number by 2^h1 * 3^h2 * alpha3^h3.

Usage:
    python manage.py stewart 7+5i
    python manage.py stewart --ring Zw 40+3w --alpha3 2+w --box 8 8 8
"""

from multdep.covering import STEWART_CATALOG, stewart_approx
from multdep.exact import Ring

from ._base import OperationCommand


class Command(OperationCommand):
    help = "Best 2^h1 3^h2 alpha3^h3 inside an exponent box"
    operation = "stewart"
    default_ring = Ring.ZI.value

    def add_operation_arguments(self, parser):
        parser.add_argument("z", help="Target with |z| >= 3")
        parser.add_argument(
            "--alpha3",
            default=STEWART_CATALOG[0],
            help=f"Nonreal integer, e.g. one of {', '.join(STEWART_CATALOG)} (default: {STEWART_CATALOG[0]})",
        )
        parser.add_argument(
            "--box",
            nargs=3,
            type=int,
            default=[10, 10, 10],
            metavar=("B1", "B2", "B3"),
            help="Largest exponents (default: 10 10 10)",
        )
        parser.add_argument(
            "--no-prune",
            action="store_true",
            help="Scan the whole box instead of the modulus window first",
        )

    def perform(self, *args, **options):
        result = stewart_approx(
            self.number(options["z"], options),
            self.number(options["alpha3"], options),
            tuple(options["box"]),
            budget=options["budget"],
            prune=not options["no_prune"],
        )
        self.write_json(result.as_dict())
