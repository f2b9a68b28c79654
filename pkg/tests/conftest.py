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
Shared test fixtures for the multdep toolkit.
"""

import io
import os
from unittest.mock import MagicMock, patch

import pytest

# Configure Django settings for pytest-django
os.environ.setdefault("DJANGO_SETTINGS_MODULE", "project.settings.development")


@pytest.fixture
def run_cli():
    """Run a subcommand through multdep.cli.run, capturing both streams."""
    from multdep.cli import run

    def invoke(*argv):
        stdout, stderr = io.StringIO(), io.StringIO()
        code = run(list(argv), stdout=stdout, stderr=stderr)
        return code, stdout.getvalue(), stderr.getvalue()

    return invoke


@pytest.fixture
def quiet_logger():
    """Replace the computation logger's underlying logger with a mock."""
    from multdep.computation_logger import computation_logger

    with patch.object(computation_logger, "logger", MagicMock()) as mocked:
        yield mocked
