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
Smallest q with eps/4 < {q r} < eps/2 and {q s} small, certified.

Usage:
    python manage.py kronecker sqrt2 sqrt3 --eps 1/2
    python manage.py kronecker -cbrt4 -cbrt2 --eps 1/10 --a 2 --b 3/2
"""

from multdep.constants import REAL_CATALOG
from multdep.lattice import kronecker_q

from ._base import OperationCommand


class Command(OperationCommand):
    help = "Certified Kronecker q for two catalog constants"
    operation = "kronecker"

    def add_operation_arguments(self, parser):
        names = ", ".join(REAL_CATALOG)
        parser.add_argument("r", help=f"Catalog constant, optionally negated: {names}")
        parser.add_argument("s", help="Catalog constant")
        parser.add_argument("--eps", required=True, help="Rational in (0, 1)")
        parser.add_argument("--a", default="1", help="Positive rational (default: 1)")
        parser.add_argument("--b", default="1", help="Positive rational (default: 1)")
        parser.add_argument("--q-limit", type=int, help="Default: MULTDEP_KRONECKER_Q_LIMIT")
        parser.add_argument("--trace", help="Write a replayable trace to this file")

    def perform(self, *args, **options):
        eps = self.rational(options["eps"])
        a, b = self.rational(options["a"]), self.rational(options["b"])
        result = kronecker_q(
            options["r"],
            options["s"],
            eps,
            a,
            b,
            q_limit=options["q_limit"],
            ceiling=options["max_precision"],
        ).as_dict()
        params = {"r": options["r"], "s": options["s"], "eps": str(eps), "a": str(a), "b": str(b)}
        self.write_trace(options["trace"], params, result)
        self.write_json(result)
