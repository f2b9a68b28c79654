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
Exception hierarchy for the multiplicative dependence toolkit.

Two families, distinguished by the exit code the CLI reports:
- InputError (exit 2): the request itself is invalid
- ComputationLimit (exit 3): a budget, bound or precision ceiling was reached
"""


class MultDepError(Exception):
    """Base class for all toolkit errors."""

    exit_code = 1

    def as_dict(self):
        """Return the JSON error object written by the CLI."""
        return {"error": self.__class__.__name__, "message": str(self)}


class WitnessVerificationError(MultDepError):
    """A produced witness failed exact re-evaluation."""


class InputError(MultDepError):
    exit_code = 2


class ParseError(InputError):
    pass


class PreconditionViolation(InputError):
    pass


class ZeroInput(InputError):
    pass


class ZeroCoordinate(InputError):
    pass


class MixedRings(InputError):
    pass


class WrongRing(InputError):
    pass


class UnsupportedElement(InputError):
    pass


class NotDependent(InputError):
    pass


class RootOfUnityInput(InputError):
    pass


class ClassNumberUnsupported(InputError):
    pass


class UnsupportedField(InputError):
    pass


class InvalidParams(InputError):
    pass


class ArgumentIsRootOfUnity(InputError):
    pass


class UnsupportedConstant(InputError):
    pass


class ReplayMismatch(InputError):
    pass


class ComputationLimit(MultDepError):
    exit_code = 3


class FactorBoundExceeded(ComputationLimit):
    pass


class BudgetExceeded(ComputationLimit):
    pass


class PrecisionCeilingReached(ComputationLimit):
    pass


class SearchBudgetExceeded(ComputationLimit):
    pass
