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
Django test environment settings for the multdep toolkit.

Used on shared machines running long census and covering jobs.
"""

import os
from .base import *

SECRET_KEY = os.environ.get("DJANGO_SECRET_KEY", SECRET_KEY)

DEBUG = False

# Long jobs get a larger budget unless the environment says otherwise
MULTDEP_WORK_BUDGET = int(os.environ.get("MULTDEP_WORK_BUDGET", 10**10))
MULTDEP_CHECK_WITNESSES = os.environ.get("MULTDEP_CHECK_WITNESSES", "True") == "True"
