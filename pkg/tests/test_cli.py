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
Tests for multdep/cli.py and the management commands behind it
"""

import io
import json

import pytest
from django.core.management import call_command

from multdep.cli import COMMANDS, command_name


class TestDispatch:
    """Tests for subcommand dispatch."""

    def test_command_name(self):
        assert command_name("approx-real") == "approx_real"
        assert command_name("census") == "census"

    def test_every_command_is_listed_once(self):
        assert len(COMMANDS) == len(set(COMMANDS))

    def test_no_subcommand(self, run_cli):
        code, out, err = run_cli()
        assert code == 2
        assert json.loads(err)["error"] == "UsageError"
        assert out == ""

    def test_unknown_subcommand(self, run_cli):
        code, _, err = run_cli("frobnicate", "1")
        assert code == 2
        assert "frobnicate" in json.loads(err)["message"]

    def test_missing_argument(self, run_cli):
        code, _, err = run_cli("rhoprobe")
        assert code == 2
        assert json.loads(err)["error"] == "UsageError"

    def test_version(self, run_cli, capsys):
        code, _, _ = run_cli("depcheck", "--version")
        assert code == 0
        assert "1.04" in capsys.readouterr().out


class TestCommands:
    """Tests for command output."""

    def test_depcheck(self, run_cli):
        code, out, _ = run_cli("depcheck", "--ring", "Z", "2", "4")
        assert code == 0
        assert out == '{"dependent":true,"witness":[2,-1]}\n'

    def test_negative_literal(self, run_cli):
        code, out, _ = run_cli("depcheck", "-2", "4")
        assert code == 0
        assert json.loads(out)["dependent"] is True

    def test_gaussian_literals(self, run_cli):
        code, out, _ = run_cli("depcheck", "--ring", "Zi", "2i", "-4")
        assert code == 0
        assert json.loads(out)["dependent"] is True

    def test_rhoprobe(self, run_cli):
        code, out, _ = run_cli("rhoprobe", "--H", "24")
        assert code == 0
        assert out.strip() == (
            '{"probe":["12","18"],"nearest":["15","15"],"dist2":"18","bound":"2"}'
        )

    def test_gouillon(self, run_cli):
        code, out, _ = run_cli("gouillon", "2", "3")
        assert code == 0
        data = json.loads(out)
        assert data["A"].startswith("40451.783")
        assert data["c0"] == "1/40452"

    def test_emptybox(self, run_cli):
        code, out, _ = run_cli("emptybox", "--H", "100", "--halfwidth", "1")
        assert code == 0
        data = json.loads(out)
        assert data["status"] == "Counterexample"
        assert data["counterexample"] == [31, 26, 26]

    def test_gaps_csv(self, run_cli):
        code, out, _ = run_cli("gaps", "--limit", "10")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "j,m_j,gap,normalized"
        assert lines[1] == "1,1,1,1"
        assert lines[2] == "2,2,1,0.5"

    def test_deterministic_output(self, run_cli):
        first = run_cli("census", "--H", "20")
        second = run_cli("census", "--H", "20")
        assert first == second


class TestCensusCommand:
    """Tests for the census command's streamed output."""

    def census(self, *argv):
        out = io.StringIO()
        call_command("census", *argv, stdout=out)
        return out.getvalue().splitlines()

    @pytest.mark.parametrize("fmt", ["json", "csv"])
    def test_stream_ends_with_summary(self, fmt):
        lines = self.census("--H", "2", "--emit", "--format", fmt)
        summary = json.loads(lines[-1])
        assert summary["count"] == 16
        assert len(lines) == 17
        assert lines[0] == "-2,-2"
        assert all(len(line.split(",")) == 2 for line in lines[:-1])

    def test_gaussian_stream(self):
        lines = self.census("--ring", "Zi", "--H", "1", "--emit")
        assert json.loads(lines[-1])["count"] == 16
        assert set(lines[:-1]) >= {"1,i", "-i,-1"}

    def test_csv_without_stream(self):
        lines = self.census("--H", "3", "--format", "csv")
        assert lines[0].startswith("ring,n,H,count")
        assert lines[1].startswith("Z,2,3,28")


class TestFailures:
    """Tests for exit codes and error objects."""

    def test_invalid_input(self, run_cli, quiet_logger):
        code, out, err = run_cli("depcheck", "0", "5")
        assert code == 2
        assert out == ""
        error = json.loads(err)
        assert error["error"] == "ZeroCoordinate"
        quiet_logger.error.assert_called_once()

    def test_budget(self, run_cli, quiet_logger):
        code, _, err = run_cli("census", "--n", "3", "--H", "50", "--budget", "1000")
        assert code == 3
        assert json.loads(err)["error"] == "BudgetExceeded"

    @pytest.mark.parametrize(
        "argv",
        [
            ("muprobe", "--H", "5"),
            ("approx-real", "1000000", "-1000000", "--eps", "1/1000"),
        ],
    )
    def test_precision_ceiling(self, run_cli, quiet_logger, argv):
        code, _, err = run_cli(*argv, "--max-precision", "32")
        assert code == 3
        assert json.loads(err)["error"] == "PrecisionCeilingReached"

    def test_bad_literal(self, run_cli):
        code, _, err = run_cli("depcheck", "2", "x/y")
        assert code == 2
        assert json.loads(err)["error"] == "ParseError"


class TestTraceReplay:
    """Tests for --trace and the replay command."""

    def test_round_trip(self, run_cli, tmp_path):
        path = tmp_path / "trace.json"
        code, out, _ = run_cli("approx-real", "2", "4", "--eps", "1/10", "--trace", str(path))
        assert code == 0
        assert json.loads(out)["alpha"] == "-403/400"
        code, out, _ = run_cli("replay", str(path))
        assert code == 0
        data = json.loads(out)
        assert data["replayed"] is True
        assert data["operation"] == "approx-real"

    def test_tampered_trace(self, run_cli, tmp_path):
        path = tmp_path / "trace.json"
        run_cli("approx-real", "-1", "-1", "--eps", "1/2", "--trace", str(path))
        trace = json.loads(path.read_text(encoding="utf-8"))
        trace["result"]["exponents"] = [3, 3]
        path.write_text(json.dumps(trace), encoding="utf-8")
        code, _, err = run_cli("replay", str(path))
        assert code == 2
        assert json.loads(err)["error"] == "ReplayMismatch"

    def test_missing_trace(self, run_cli, tmp_path):
        code, _, err = run_cli("replay", str(tmp_path / "absent.json"))
        assert code == 2
        assert json.loads(err)["error"] == "ParseError"
