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
Computation logger for tracking finished runs of the expensive operations.

This module provides centralized logging for:
- Census runs (exact counts against the leading term)
- Covering probes and empty-box certificates
- Precision escalations of certified computations
- Work-budget refusals
- Operation errors
"""

import logging
from pathlib import Path

from django.conf import settings
from django.core.exceptions import ImproperlyConfigured


def _log_dir():
    try:
        base = Path(settings.BASE_DIR)
    except (ImproperlyConfigured, AttributeError):
        base = Path.cwd()
    return base / "logs"


class ComputationLogger:
    """Logger for computations with dedicated log file."""

    def __init__(self):
        self.logger = logging.getLogger("computations")

        # Only set up if not already configured
        if not self.logger.handlers:
            self.logger.setLevel(logging.INFO)

            log_dir = _log_dir()
            log_dir.mkdir(exist_ok=True)

            file_handler = logging.FileHandler(
                log_dir / "computations.log", encoding="utf-8"
            )
            file_handler.setLevel(logging.INFO)

            # Format: timestamp | operation | details
            formatter = logging.Formatter(
                "%(asctime)s | %(levelname)s | %(message)s", datefmt="%Y-%m-%d %H:%M:%S"
            )
            file_handler.setFormatter(formatter)

            self.logger.addHandler(file_handler)

    def log_census(self, ring, n, bound, count, elapsed):
        """Log a finished census run."""
        self.logger.info(
            f"CENSUS | {ring} | n={n} | H={bound} | Count: {count} | {elapsed:.3f}s"
        )

    def log_probe(self, operation, probe, dist2, bound=None):
        """Log a covering probe."""
        msg = f"PROBE | {operation} | x={probe} | dist2={dist2}"
        if bound is not None:
            msg += f" | Bound: {bound}"
        self.logger.info(msg)

    def log_certificate(self, n, bound, halfwidth, status, checked):
        """Log an empty-box certificate."""
        self.logger.info(
            f"EMPTY_BOX | n={n} | H={bound} | halfwidth={halfwidth} "
            f"| Status: {status} | Checked: {checked}"
        )

    def log_precision(self, operation, bits, reason=None):
        """Log a precision escalation."""
        msg = f"PRECISION | {operation} | {bits} bits"
        if reason:
            msg += f" | Reason: {reason}"
        self.logger.info(msg)

    def log_budget_refusal(self, operation, needed, budget):
        """Log a refused computation."""
        self.logger.warning(
            f"BUDGET | {operation} | Needed: {needed} | Budget: {budget}"
        )

    def log_error(self, operation, detail, error_msg):
        """Log an operation error."""
        self.logger.error(f"ERROR | {operation} | {detail} | {error_msg}")


# Singleton instance
computation_logger = ComputationLogger()
