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
Integers (a, b, c) with a + b*alpha + c*beta within eps of a target.

Usage:
    python manage.py lattice_sum 1/3+i/2 --eps 1/10
    python manage.py lattice_sum 2 --eps 1/10 --pair sigma --method kronecker
"""

from multdep.constants import DEFAULT_LATTICE_PAIR, LATTICE_PAIRS
from multdep.exact import Ring, format_number
from multdep.lattice import approx_lattice_sum

from ._base import OperationCommand


class Command(OperationCommand):
    help = "Approximate a complex number by a + b*alpha + c*beta"
    operation = "lattice-sum"
    default_ring = Ring.ZI.value

    def add_operation_arguments(self, parser):
        parser.add_argument("z", help="Gaussian rational part of the target")
        parser.add_argument("--eps", required=True, help="Positive rational")
        parser.add_argument(
            "--pair",
            choices=list(LATTICE_PAIRS),
            default=DEFAULT_LATTICE_PAIR,
            help=f"Catalog pair (default: {DEFAULT_LATTICE_PAIR})",
        )
        parser.add_argument(
            "--shift",
            nargs=2,
            type=int,
            default=[0, 0],
            metavar=("U", "V"),
            help="Target is z + u*alpha + v*beta (default: 0 0)",
        )
        parser.add_argument(
            "--method",
            choices=["auto", "direct", "kronecker"],
            default="auto",
            help="Default: auto (bounded direct search, then the construction)",
        )
        parser.add_argument("--trace", help="Write a replayable trace to this file")

    def perform(self, *args, **options):
        z = self.number(options["z"], options)
        eps = self.rational(options["eps"])
        result = approx_lattice_sum(
            z,
            eps,
            pair=options["pair"],
            shift=tuple(options["shift"]),
            method=options["method"],
            ceiling=options["max_precision"],
        ).as_dict()
        params = {
            "z": format_number(z),
            "eps": str(eps),
            "pair": options["pair"],
            "shift": [str(v) for v in options["shift"]],
            "method": options["method"],
        }
        self.write_trace(options["trace"], params, result)
        self.write_json(result)
