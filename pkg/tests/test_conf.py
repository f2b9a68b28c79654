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
Tests for multdep/conf.py
"""

import pytest
from django.test import override_settings

from multdep.conf import DEFAULTS, check_budget, get_setting, resolve
from multdep.exceptions import BudgetExceeded


class TestGetSetting:
    """Tests for get_setting and resolve."""

    def test_project_value(self):
        assert get_setting("DECIMAL_DIGITS") == 30

    def test_development_checks_witnesses(self):
        assert get_setting("CHECK_WITNESSES") is True

    def test_override(self, settings):
        settings.MULTDEP_WORK_BUDGET = 77
        assert get_setting("WORK_BUDGET") == 77

    def test_default_when_missing(self, settings):
        del settings.MULTDEP_LATTICE_DIRECT_BOUND
        assert get_setting("LATTICE_DIRECT_BOUND") == DEFAULTS["LATTICE_DIRECT_BOUND"]

    def test_resolve_prefers_explicit(self):
        assert resolve(5, "DECIMAL_DIGITS") == 5
        assert resolve(None, "DECIMAL_DIGITS") == 30

    def test_unknown_name(self):
        with pytest.raises(KeyError):
            get_setting("NOT_A_SETTING")


class TestCheckBudget:
    """Tests for check_budget."""

    def test_within_budget(self, quiet_logger):
        check_budget("census", 10, budget=10)
        quiet_logger.warning.assert_not_called()

    def test_refusal_is_logged(self, quiet_logger):
        with pytest.raises(BudgetExceeded) as excinfo:
            check_budget("census", 11, budget=10)
        assert "census" in str(excinfo.value)
        message = quiet_logger.warning.call_args[0][0]
        assert "BUDGET" in message
        assert "Needed: 11" in message

    @override_settings(MULTDEP_WORK_BUDGET=100)
    def test_configured_budget(self, quiet_logger):
        with pytest.raises(BudgetExceeded):
            check_budget("census", 101)
