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
Scriptable entry point: run(argv) returns the exit code.

Subcommands are the app's management commands; hyphenated names such as
approx-real are accepted. Exit codes:
- 0: success, results on stdout
- 1: internal invariant breach (witness verification)
- 2: invalid input or arguments
- 3: budget, bound or precision ceiling reached
Failures are reported as one JSON object on stderr.
"""

import os
import sys

COMMANDS = (
    "depcheck",
    "witness",
    "decompose",
    "census",
    "leading",
    "nearest",
    "rhoprobe",
    "muprobe",
    "emptybox",
    "stewart",
    "smooth",
    "gaps",
    "convergents",
    "gouillon",
    "linform",
    "approx_real",
    "approx_complex",
    "kronecker",
    "lattice_sum",
    "biquad",
    "replay",
    "smoothprobe",
)

USAGE_EXIT = 2


def _setup():
    os.environ.setdefault("DJANGO_SETTINGS_MODULE", "project.settings.development")
    import django

    django.setup()


def _fail(stderr, error, message, code):
    from .serializers import dumps

    stderr.write(dumps({"error": error, "message": message}) + "\n")
    return code


def command_name(name):
    """Management command module for a subcommand name."""
    return name.replace("-", "_")


def run(argv, stdout=None, stderr=None):
    """
    Dispatch one subcommand.

    Args:
        argv: Subcommand name followed by its arguments
        stdout, stderr: Text streams (default: the process streams)

    Returns:
        Exit code
    """
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    if not argv:
        return _fail(stderr, "UsageError", f"choose one of: {', '.join(COMMANDS)}", USAGE_EXIT)
    name = command_name(argv[0])
    if name not in COMMANDS:
        return _fail(stderr, "UsageError", f"unknown subcommand {argv[0]!r}", USAGE_EXIT)

    _setup()
    from django.core.management import call_command
    from django.core.management.base import CommandError

    from .management.commands._base import OperationFailed
    from .serializers import dumps

    try:
        call_command(name, *argv[1:], stdout=stdout, stderr=stderr)
    except OperationFailed as exc:
        stderr.write(dumps(exc.payload) + "\n")
        return exc.returncode
    except CommandError as exc:
        # Argument parsing failures
        return _fail(stderr, "UsageError", str(exc).removeprefix("Error: "), USAGE_EXIT)
    except SystemExit as exc:
        # --help and --version exit through argparse
        if exc.code is None:
            return 0
        return exc.code if isinstance(exc.code, int) else USAGE_EXIT
    return 0


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
