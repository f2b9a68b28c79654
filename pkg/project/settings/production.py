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
Django production settings for the multdep toolkit.
"""

import os
from .base import *

# Get secret key from environment variable - no fallback to ensure proper configuration
SECRET_KEY = os.environ.get("DJANGO_SECRET_KEY")

DEBUG = False

# Only warnings and errors reach the log file in production
LOGGING["loggers"]["multdep"]["level"] = "WARNING"
