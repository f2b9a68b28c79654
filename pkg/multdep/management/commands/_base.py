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
Shared base class for the toolkit's management commands.

Every command:
- accepts --ring, --format, --budget, --max-precision and --seed
- reports the project version for --version
- writes exact results to stdout, one JSON object per line or CSV
- turns toolkit errors into OperationFailed carrying the JSON error object
  and the exit code (2 for invalid input, 3 for computation limits)
"""

import logging
import re
import sys
from pathlib import Path

from django.core.management.base import BaseCommand, CommandError

from multdep.computation_logger import computation_logger
from multdep.exact import Ring, parse_number, parse_rational, parse_vector
from multdep.exceptions import MultDepError, ParseError
from multdep.serializers import csv_text, dumps
from project.version import get_version

logger = logging.getLogger(__name__)

# Arguments such as -8/9, -1-2i, -i or -cbrt2 are values, not options
NEGATIVE_LITERAL = re.compile(r"^-(\d|\.\d|[iw]$|(sqrt|cbrt|log)\d)")

RING_CHOICES = [ring.value for ring in Ring]


class OperationFailed(CommandError):
    """A toolkit error on its way to the command line."""

    def __init__(self, payload, returncode):
        self.payload = payload
        super().__init__(payload["message"], returncode=returncode)

    @classmethod
    def from_error(cls, error):
        return cls(error.as_dict(), error.exit_code)


class OperationCommand(BaseCommand):
    """Base for commands that map onto exactly one library operation."""

    # Hyphenated name used in traces and log lines
    operation = ""
    default_ring = Ring.Q.value
    default_format = "json"
    requires_system_checks = []

    def get_version(self):
        return get_version()

    def create_parser(self, prog_name, subcommand, **kwargs):
        parser = super().create_parser(prog_name, subcommand, **kwargs)
        parser._negative_number_matcher = NEGATIVE_LITERAL
        return parser

    def add_arguments(self, parser):
        parser.add_argument(
            "--ring",
            choices=RING_CHOICES,
            default=self.default_ring,
            help=f"Ring of the coordinates (default: {self.default_ring})",
        )
        parser.add_argument(
            "--format",
            choices=["json", "csv"],
            default=self.default_format,
            help=f"Output encoding (default: {self.default_format})",
        )
        parser.add_argument(
            "--budget",
            type=int,
            help="Work budget in primitive operations (default: MULTDEP_WORK_BUDGET)",
        )
        parser.add_argument(
            "--max-precision",
            type=int,
            help="Precision ceiling in bits (default: MULTDEP_PRECISION_CEILING_BITS)",
        )
        parser.add_argument(
            "--seed",
            type=int,
            help="Reserved; every operation is deterministic",
        )
        self.add_operation_arguments(parser)

    def add_operation_arguments(self, parser):
        """Hook for the command's own arguments."""

    # Parsing helpers

    def ring(self, options):
        return Ring(options["ring"])

    def number(self, text, options):
        return parse_number(text, self.ring(options))

    def vector(self, texts, options):
        return parse_vector(texts, self.ring(options))

    @staticmethod
    def rational(text):
        return parse_rational(str(text))

    @staticmethod
    def integer(text, name):
        value = parse_rational(str(text))
        if value.denominator != 1:
            raise ParseError(f"{name} must be an integer, got {text}")
        return int(value)

    # Output

    def write_json(self, payload):
        self.stdout.write(dumps(payload))

    def write_csv(self, header, rows):
        self.stdout.write(csv_text(header, rows), ending="")

    def write_trace(self, path, params, result):
        """Store a replayable trace of this run."""
        from multdep.density import make_trace

        if path:
            Path(path).write_text(
                dumps(make_trace(self.operation, params, result)) + "\n", encoding="utf-8"
            )

    # Execution

    def handle(self, *args, **options):
        try:
            self.perform(*args, **options)
        except MultDepError as exc:
            computation_logger.log_error(
                self.operation, exc.__class__.__name__, str(exc)
            )
            logger.debug("%s failed: %s", self.operation, exc)
            failure = OperationFailed.from_error(exc)
            if self._called_from_command_line:
                # manage.py: the JSON error object replaces Django's error line
                self.stderr.write(dumps(failure.payload), style_func=lambda s: s)
                sys.exit(failure.returncode)
            raise failure from exc

    def perform(self, *args, **options):
        raise NotImplementedError

