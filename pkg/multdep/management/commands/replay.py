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
Re-run a stored trace and check the output is byte-identical.

Usage:
    python manage.py approx_real 2 4 --eps 1/10 --trace real.json
    python manage.py replay real.json
"""

import json
from pathlib import Path

from multdep.density import replay_trace
from multdep.exceptions import ParseError
from multdep.serializers import loads

from ._base import OperationCommand


class Command(OperationCommand):
    help = "Replay a trace written with --trace"
    operation = "replay"

    def add_operation_arguments(self, parser):
        parser.add_argument("path", help="Trace file")

    def perform(self, *args, **options):
        path = Path(options["path"])
        try:
            trace = loads(path.read_text(encoding="utf-8"))
        except OSError as exc:
            raise ParseError(f"cannot read {path}: {exc.strerror}") from exc
        except json.JSONDecodeError as exc:
            raise ParseError(f"{path} is not a JSON trace") from exc
        result = replay_trace(trace)
        self.write_json({"operation": trace["operation"], "replayed": True, "result": result})
