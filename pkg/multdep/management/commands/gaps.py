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
Gap table of consecutive S-smooth numbers.

CSV (default) gives one row per gap for plotting; JSON gives the summary
over the records with m_j >= N^(1/2).

Usage:
    python manage.py gaps --limit 1000000
    python manage.py gaps --limit 1000000 --theta 1 --format json --fit
"""

import mpmath

from multdep.smoothgaps import fit_gap_exponents, gap_table

from ._base import OperationCommand


class Command(OperationCommand):
    help = "Gaps between consecutive smooth numbers"
    operation = "gaps"
    default_format = "csv"

    def add_operation_arguments(self, parser):
        parser.add_argument(
            "--primes", nargs="+", type=int, default=[2, 3], help="Default: 2 3"
        )
        parser.add_argument("--limit", required=True, help="Largest value N >= 2")
        parser.add_argument(
            "--theta", default="0", help="Exponent of (log m)^theta (default: 0)"
        )
        parser.add_argument(
            "--fit",
            action="store_true",
            help="Add the fitted exponents log(m/g)/log log m (JSON only)",
        )

    def perform(self, *args, **options):
        records, summary = gap_table(
            options["primes"],
            self.integer(options["limit"], "limit"),
            self.rational(options["theta"]),
        )
        if options["format"] == "csv":
            self.write_csv(["j", "m_j", "gap", "normalized"], (r.as_row() for r in records))
            return
        data = summary.as_dict()
        if options["fit"]:
            _, largest, smallest = fit_gap_exponents(records)
            data["fit"] = {"max": _fit_row(largest), "min": _fit_row(smallest)}
        self.write_json(data)


def _fit_row(fit):
    if fit is None:
        return None
    return {"m": fit.m, "gap": fit.gap, "exponent": mpmath.nstr(fit.exponent, 15)}
