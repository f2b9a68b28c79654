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
Django development settings for the multdep toolkit.

The test-suite runs against these settings.
"""

from . import base as _base_settings

# Import all base settings into this module's namespace so they are available
# both locally and for re-export via __init__.py's 'from .development import *'.
# This replaces 'from .base import *' while preserving the standard Django
# settings inheritance pattern.
globals().update(
    {k: v for k, v in vars(_base_settings).items() if not k.startswith("_")}
)

from .base import LOGGING as BASE_LOGGING

DEBUG = True

# Every witness is re-evaluated exactly in development
MULTDEP_CHECK_WITNESSES = True

# Debug traces from the library go to the log file
LOGGING = {
    **BASE_LOGGING,
    "loggers": {
        **BASE_LOGGING["loggers"],
        "multdep": {
            "handlers": ["console", "file"],
            "level": "DEBUG",
            "propagate": False,
        },
    },
}
