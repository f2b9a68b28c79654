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
Django base settings for the multdep toolkit.

These settings are common to all environments.
"""

from pathlib import Path
import os
from dotenv import load_dotenv

load_dotenv()

DEBUG = False

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent.parent

# No request handling takes place; the key only satisfies Django's checks
SECRET_KEY = os.environ.get("SECRET_KEY", "not-secure-secret-key")

# Application definition
INSTALLED_APPS = [
    "django.contrib.contenttypes",
    # Local apps
    "multdep",
]

# The toolkit keeps no state between runs
DATABASES = {}

LANGUAGE_CODE = "en-gb"
TIME_ZONE = "Europe/London"
USE_I18N = False
USE_TZ = True

DEFAULT_AUTO_FIELD = "django.db.models.BigAutoField"

# Make sure the logs directory exists before the file handlers open it
(BASE_DIR / "logs").mkdir(exist_ok=True)

LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "verbose": {
            "format": "{levelname} {asctime} {module} {process:d} {thread:d} {message}",
            "style": "{",
        },
        "simple": {
            "format": "{levelname} {message}",
            "style": "{",
        },
    },
    "handlers": {
        # stdout carries results, so log records go to stderr
        "console": {
            "level": "WARNING",
            "class": "logging.StreamHandler",
            "stream": "ext://sys.stderr",
            "formatter": "simple",
        },
        "file": {
            "level": "INFO",
            "class": "logging.FileHandler",
            "filename": str(BASE_DIR / "logs" / "multdep.log"),
            "formatter": "verbose",
        },
    },
    "loggers": {
        "django": {
            "handlers": ["console", "file"],
            "level": "INFO",
            "propagate": True,
        },
        "project": {
            "handlers": ["console", "file"],
            "level": "DEBUG",
            "propagate": True,
        },
        "multdep": {
            "handlers": ["console", "file"],
            "level": "INFO",
            "propagate": False,
        },
    },
}


def _env_int(name, default):
    value = os.environ.get(name)
    return int(value) if value else default


# Multiplicative dependence toolkit settings

# Integers above this bound are not factored (FactorBoundExceeded)
MULTDEP_FACTOR_BOUND = _env_int("MULTDEP_FACTOR_BOUND", 2**96)
MULTDEP_TRIAL_DIVISION_LIMIT = _env_int("MULTDEP_TRIAL_DIVISION_LIMIT", 10**6)
MULTDEP_RHO_MAX_STEPS = _env_int("MULTDEP_RHO_MAX_STEPS", 2 * 10**6)
MULTDEP_RHO_RETRIES = _env_int("MULTDEP_RHO_RETRIES", 5)

# Estimated primitive operations a single call may spend
MULTDEP_WORK_BUDGET = _env_int("MULTDEP_WORK_BUDGET", 10**9)

# Certified interval arithmetic: start, then double up to the ceiling
MULTDEP_START_PRECISION_BITS = _env_int("MULTDEP_START_PRECISION_BITS", 64)
MULTDEP_PRECISION_CEILING_BITS = _env_int("MULTDEP_PRECISION_CEILING_BITS", 10**5)

MULTDEP_KRONECKER_Q_LIMIT = _env_int("MULTDEP_KRONECKER_Q_LIMIT", 10**9)
MULTDEP_COMPLEX_MAX_M = _env_int("MULTDEP_COMPLEX_MAX_M", 10**4)
MULTDEP_OK_CENSUS_MAX_H = _env_int("MULTDEP_OK_CENSUS_MAX_H", 400)
MULTDEP_LATTICE_DIRECT_BOUND = _env_int("MULTDEP_LATTICE_DIRECT_BOUND", 50)

# Significant digits of decimal renderings
MULTDEP_DECIMAL_DIGITS = _env_int("MULTDEP_DECIMAL_DIGITS", 30)

# Re-evaluate every produced witness exactly before returning it
MULTDEP_CHECK_WITNESSES = os.environ.get("MULTDEP_CHECK_WITNESSES", "False") == "True"
