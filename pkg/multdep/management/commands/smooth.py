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
List the S-smooth numbers up to a limit.

Usage:
    python manage.py smooth --limit 100
    python manage.py smooth --primes 2 3 5 --limit 1000 --format csv
    python manage.py smooth --limit 1000000 --count
"""

from multdep.smoothgaps import smooth_stream

from ._base import OperationCommand


class Command(OperationCommand):
    help = "Increasing stream of S-smooth numbers"
    operation = "smooth"

    def add_operation_arguments(self, parser):
        parser.add_argument(
            "--primes", nargs="+", type=int, default=[2, 3], help="Default: 2 3"
        )
        parser.add_argument("--limit", required=True, help="Largest value N")
        parser.add_argument(
            "--count", action="store_true", help="Only print how many terms there are"
        )

    def perform(self, *args, **options):
        primes = sorted(set(options["primes"]))
        limit = self.integer(options["limit"], "limit")
        terms = smooth_stream(primes, limit)
        if options["count"]:
            self.write_json(
                {"primes": primes, "limit": limit, "count": sum(1 for _ in terms)}
            )
        elif options["format"] == "csv":
            header = ["j", "m"] + [f"e{p}" for p in primes]
            self.write_csv(header, ([t.index, t.value, *t.exponents] for t in terms))
        else:
            for t in terms:
                self.write_json({"j": t.index, "m": t.value, "exponents": list(t.exponents)})
