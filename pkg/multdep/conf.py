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
Access to the MULTDEP_* settings with built-in fallbacks.

The library is usable without a configured Django project; in that case the
defaults below apply.
"""

import logging

from django.conf import settings
from django.core.exceptions import ImproperlyConfigured

from .exceptions import BudgetExceeded

logger = logging.getLogger(__name__)

DEFAULTS = {
    "FACTOR_BOUND": 2**96,
    "TRIAL_DIVISION_LIMIT": 10**6,
    "RHO_MAX_STEPS": 2 * 10**6,
    "RHO_RETRIES": 5,
    "WORK_BUDGET": 10**9,
    "START_PRECISION_BITS": 64,
    "PRECISION_CEILING_BITS": 10**5,
    "KRONECKER_Q_LIMIT": 10**9,
    "COMPLEX_MAX_M": 10**4,
    "OK_CENSUS_MAX_H": 400,
    "LATTICE_DIRECT_BOUND": 50,
    "DECIMAL_DIGITS": 30,
    "CHECK_WITNESSES": False,
}


def get_setting(name):
    """
    Return the value of ``MULTDEP_<name>``.

    Args:
        name: Setting name without the MULTDEP_ prefix

    Returns:
        The configured value, or the built-in default
    """
    default = DEFAULTS[name]
    try:
        return getattr(settings, f"MULTDEP_{name}", default)
    except ImproperlyConfigured:
        return default


def resolve(value, name):
    """Return ``value`` unless it is None, else the configured setting."""
    return get_setting(name) if value is None else value


def check_budget(operation, needed, budget=None):
    """
    Refuse work that would exceed the work budget.

    Args:
        operation: Operation name used in the error message
        needed: Estimated number of primitive operations
        budget: Explicit budget; defaults to MULTDEP_WORK_BUDGET

    Raises:
        BudgetExceeded: If ``needed`` is larger than the budget
    """
    budget = resolve(budget, "WORK_BUDGET")
    if needed > budget:
        # Imported here: the logger module touches settings.BASE_DIR on import
        from .computation_logger import computation_logger

        computation_logger.log_budget_refusal(operation, needed, budget)
        raise BudgetExceeded(
            f"{operation} needs about {needed} operations, budget is {budget}"
        )
    logger.debug("%s within budget: %s <= %s", operation, needed, budget)
