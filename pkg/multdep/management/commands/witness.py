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
Print a relation of minimal sup-norm for a dependent vector.

Usage:
    python manage.py witness --ring Z 2 2 4
    python manage.py witness --ring Z 6 12 18 --growth
"""

from multdep.dependence import minimal_witness, witness_growth

from ._base import OperationCommand


class Command(OperationCommand):
    help = "Minimal sup-norm multiplicative relation"
    operation = "witness"

    def add_operation_arguments(self, parser):
        parser.add_argument("values", nargs="+", help="Nonzero coordinates")
        parser.add_argument(
            "--growth",
            action="store_true",
            help="Also report the largest squared Weil height of the coordinates",
        )

    def perform(self, *args, **options):
        values = self.vector(options["values"], options)
        ring = self.ring(options)
        if options["growth"]:
            growth = witness_growth(values, ring)
            witness = growth.witness
        else:
            growth = None
            witness = minimal_witness(values, ring, budget=options["budget"])
        payload = {
            "witness": witness.as_list(),
            "sup_norm": witness.sup_norm,
            "unit_multiple": witness.unit_multiple,
        }
        if growth is not None:
            payload["height_squared"] = str(growth.height_squared)
        self.write_json(payload)
