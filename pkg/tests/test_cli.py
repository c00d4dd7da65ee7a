"""Tests for the command-line interface."""

import sys
from pathlib import Path

# Add project root to Python path
sys.path.insert(0, str(Path(__file__).parent.parent))

import json
from unittest.mock import patch

import pytest

from src.campaign.base import Report
from src.campaign.element_io import write_element
from src.factors import make_factor
from src.main import EXIT_DEVIATION, EXIT_OK, EXIT_USAGE, main


def _report(suite: str, met: bool) -> Report:
    return Report(
        suite=suite,
        citation="claim",
        expected="all-pass",
        met=met,
        trials=1,
        failures=0 if met else 1,
        max_residual=0.0,
        seconds=0.0,
        seed=0,
    )


@pytest.fixture
def rows(tmp_path):
    """Element files (0, 1) and (1, 0) of M_{1,2}."""
    space = make_factor("rectangular", (1, 2))
    u, e = tmp_path / "u.json", tmp_path / "e.json"
    write_element(u, space.element([0.0, 1.0]))
    write_element(e, space.element([1.0, 0.0]))
    return str(u), str(e)


class TestFactorsAndTripotents:
    """Tests for the factor listing and tripotent commands."""

    def test_factors(self, capsys):
        """Test that every factor kind is listed."""
        assert main(["factors"]) == EXIT_OK
        out = capsys.readouterr().out
        for kind in ("rectangular", "antisymmetric", "spin", "c5", "h3o"):
            assert kind in out

    def test_generate_then_inspect(self, tmp_path, capsys):
        """Test gen --out followed by check and peirce."""
        path = tmp_path / "u.json"
        assert main(["--seed", "7", "tripotent", "gen", "--factor", "rectangular:2,3", "--out", str(path)]) == EXIT_OK
        data = json.loads(path.read_text(encoding="utf-8"))
        assert data["factor"] == {"kind": "rectangular", "sizes": [2, 3]}
        assert len(data["coords"]) == 6

        assert main(["tripotent", "check", str(path)]) == EXIT_OK
        assert "tripotent: yes" in capsys.readouterr().out
        assert main(["tripotent", "peirce", str(path)]) == EXIT_OK
        assert "Peirce ranks" in capsys.readouterr().out

    def test_generation_is_seeded(self, capsys):
        """Test that the same seed prints the same tripotent."""
        args = ["--seed", "3", "--log-level", "WARNING", "tripotent", "gen", "--factor", "spin:4", "--complete"]
        assert main(args) == EXIT_OK
        first = capsys.readouterr().out
        assert main(args) == EXIT_OK
        assert capsys.readouterr().out == first

    def test_check_rejects_non_tripotent(self, tmp_path, capsys):
        """Test that check exits with 1 on 2 E11."""
        path = tmp_path / "x.json"
        space = make_factor("rectangular", (2, 2))
        write_element(path, space.element([2.0, 0.0, 0.0, 0.0]))
        assert main(["tripotent", "check", str(path)]) == EXIT_DEVIATION
        assert "tripotent: no" in capsys.readouterr().out

    def test_unknown_factor(self):
        """Test that a bad factor spec is a usage error."""
        assert main(["tripotent", "gen", "--factor", "torus:3"]) == EXIT_USAGE


class TestRelationCommand:
    """Tests for the relation command."""

    def test_relation_holds_and_fails(self, rows, capsys):
        """Test <=0 holding (exit 0) and <=2 failing (exit 1) on the rows of M_{1,2}."""
        u, e = rows
        assert main(["relation", "leq0", u, e]) == EXIT_OK
        assert "leq0: holds" in capsys.readouterr().out
        assert main(["relation", "leq2", u, e]) == EXIT_DEVIATION
        assert "leq2: fails" in capsys.readouterr().out

    def test_factor_mismatch(self, rows, tmp_path):
        """Test that elements of different factors are a usage error."""
        u, _ = rows
        other = tmp_path / "spin.json"
        write_element(other, make_factor("spin", (2,)).element([1.0, 0.0]))
        assert main(["relation", "leq", u, str(other)]) == EXIT_USAGE

    def test_unknown_kind(self, rows):
        """Test that argparse rejects unknown relation kinds."""
        u, e = rows
        with pytest.raises(SystemExit) as exc_info:
            main(["relation", "below", u, e])
        assert exc_info.value.code == 2


class TestCampaignCommands:
    """Tests for campaign list/run and report."""

    def test_list(self, capsys):
        """Test that campaign list shows suites with their expectations."""
        assert main(["campaign", "list"]) == EXIT_OK
        out = capsys.readouterr().out
        assert "preorder-counterexamples" in out
        assert "counterexample-expected" in out

    def test_run_passes_overrides(self, tmp_path):
        """Test that seed and trials flags reach the runner and deviations exit with 1."""
        out = tmp_path / "run.json"
        with patch("src.main.run_campaign", return_value=[_report("a", True), _report("b", False)]) as run:
            code = main(["--seed", "5", "--trials", "9", "campaign", "run", "spin-*", "--out", str(out), "--no-progress"])
        assert code == EXIT_DEVIATION
        kwargs = run.call_args.kwargs
        assert kwargs["seed"] == 5
        assert kwargs["trials"] == 9
        assert kwargs["selection"] == ["spin-*"]
        assert kwargs["progress"] is False
        assert len(json.loads(out.read_text(encoding="utf-8"))) == 2

    def test_run_all_met(self, capsys):
        """Test exit 0 and JSON output when every suite is met."""
        with patch("src.main.run_campaign", return_value=[_report("a", True)]):
            assert main(["campaign", "run", "--format", "json"]) == EXIT_OK
        assert '"suite": "a"' in capsys.readouterr().out

    def test_unknown_suite(self):
        """Test that a glob matching nothing is a usage error."""
        assert main(["--trials", "1", "campaign", "run", "no-such-*", "--no-progress"]) == EXIT_USAGE

    def test_bad_trials(self):
        """Test that a non-positive trial budget is a usage error."""
        assert main(["--trials", "0", "campaign", "run"]) == EXIT_USAGE

    def test_report(self, tmp_path, capsys):
        """Test rendering a saved report and rejecting broken or missing files."""
        path = tmp_path / "run.json"
        with patch("src.main.run_campaign", return_value=[_report("a", True)]):
            main(["campaign", "run", "--out", str(path)])
        capsys.readouterr()
        assert main(["report", str(path)]) == EXIT_OK
        assert "1/1 suites met" in capsys.readouterr().out

        broken = tmp_path / "broken.json"
        broken.write_text("not json", encoding="utf-8")
        assert main(["report", str(broken)]) == EXIT_USAGE
        assert main(["report", str(tmp_path / "missing.json")]) == EXIT_USAGE

    def test_bad_config(self, tmp_path):
        """Test that an invalid settings file is reported with exit 2."""
        config = tmp_path / "workbench.yaml"
        config.write_text("tolerance:\n  eq_tol: 2.0\n", encoding="utf-8")
        assert main(["--config", str(config), "factors"]) == EXIT_USAGE
