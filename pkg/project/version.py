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
Version information for the multdep toolkit.
"""

# Version format: MAJOR.MINOR
# - MAJOR: Changes to output formats or exit codes
# - MINOR: New commands, fixes and performance work

VERSION = "1.04"

# Change log entries should be in the format:
# (version, date, description)
CHANGE_LOG = [
    (
        "1.04",
        "2026-10-14",
        "Added trace replay, the sigma lattice pair and the smoothprobe command",
    ),
    (
        "1.03",
        "2026-10-02",
        "Kronecker search walks first returns instead of scanning every q",
    ),
    ("1.02", "2026-09-21", "Census over Z splits into partitions and can use a process pool"),
    ("1.01", "2026-09-08", "Gap tables as CSV, fitted gap exponents"),
    ("1.00", "2026-08-30", "Initial release"),
]


def get_version():
    """Return the current version number."""
    return VERSION


def get_change_log():
    """Return the change log as a list of tuples (version, date, description)."""
    return CHANGE_LOG


def get_latest_changes(count=5):
    """Return the most recent changes from the change log."""
    if count is None:
        return CHANGE_LOG
    return CHANGE_LOG[:count]
