"""Tests for the verification campaign: registry, runner and reports."""

import sys
from pathlib import Path

# Add project root to Python path
sys.path.insert(0, str(Path(__file__).parent.parent))

import json
from unittest.mock import MagicMock, patch

import pytest

from src.campaign import (
    COUNTEREXAMPLE_EXPECTED,
    Suite,
    SuiteContext,
    SuiteResult,
    campaign_exit_code,
    check_registry,
    load_claims,
    load_reports,
    register_suite,
    registered_suites,
    render_text,
    reports_to_json,
    run_campaign,
    run_suite,
    select_suites,
    write_reports,
)
from src.campaign.suites.common import (
    AXIOM_FACTORS,
    AXIOM_SAMPLES,
    EVEN_RANK_SAMPLES,
    FINITENESS_TRIPOTENTS,
    TRIPOTENT_FACTORS,
)
from src.campaign.suites.engine import finite_dimensional_finiteness, triple_axioms
from src.campaign.suites.matrix import antisym_even_rank
from src.errors import ParseError, RegistryError, UnknownSuite
from src.triples import FinitenessReport
from src.utils.config_loader import SamplingConfig

CHEAP = ["cd-basis-table", "cd-violations", "lattice-complement-laws"]


@pytest.fixture(scope="module")
def suites():
    return check_registry(load_claims())


class TestRegistry:
    """Tests for the suite registry and the claims manifest."""

    def test_manifest_matches_registry(self, suites):
        """Test that every suite has a claim and an agreeing expectation."""
        assert len(suites) == len(registered_suites())
        assert all(suite.citation for suite in suites.values())
        assert suites["preorder-counterexamples"].expected == COUNTEREXAMPLE_EXPECTED
        assert suites["lattice-modular-law"].expected == "all-pass"

    def test_manifest_gaps_are_errors(self):
        """Test that a manifest missing a suite is rejected."""
        claims = load_claims()
        claims.pop("cd-basis-table")
        with pytest.raises(RegistryError):
            check_registry(claims)

    def test_expectation_disagreement(self):
        """Test that the manifest cannot flip a suite's expectation."""
        claims = load_claims()
        claims["cd-violations"]["expected"] = "all-pass"
        with pytest.raises(RegistryError):
            check_registry(claims)

    def test_duplicate_registration(self):
        """Test that a suite id cannot be registered twice."""
        registered_suites()
        with pytest.raises(RegistryError):
            register_suite("cd-identities")(lambda ctx: SuiteResult())

    def test_glob_selection(self, suites):
        """Test glob selection in id order and unknown patterns."""
        selected = select_suites(suites, ["lattice-*", "cd-basis-table"])
        ids = [s.id for s in selected]
        assert ids == sorted(ids)
        assert "cd-basis-table" in ids
        assert all(i.startswith("lattice-") or i == "cd-basis-table" for i in ids)
        with pytest.raises(UnknownSuite):
            select_suites(suites, ["no-such-suite"])


class TestSuiteContext:
    """Tests for per-trial generators and budgets."""

    def test_generators_depend_on_suite_and_trial(self):
        """Test that generators are reproducible and distinct across suites and trials."""
        a = SuiteContext("spin-norm", 1, 10)
        b = SuiteContext("spin-norm", 1, 10)
        c = SuiteContext("spin-relations", 1, 10)
        assert a.rng(3).random() == b.rng(3).random()
        assert a.rng(3).random() != a.rng(4).random()
        assert a.rng(3).random() != c.rng(3).random()

    def test_budget(self):
        """Test that budgets scale the trials and respect the minimum."""
        ctx = SuiteContext("x", 0, 200)
        assert ctx.budget(0.5) == 100
        assert ctx.budget(0.001, 3) == 3


class TestAcceptanceCounts:
    """Tests that full runs reach their sample counts at any trial budget."""

    def test_axiom_samples_per_factor(self):
        """Test that the axiom sweep draws its full count from every factor."""
        with patch("src.campaign.suites.engine.triple_axiom_residuals", return_value={}) as residuals:
            triple_axioms(SuiteContext("triple-axioms", 0, 1))
        assert residuals.call_count == AXIOM_SAMPLES * len(AXIOM_FACTORS)

    def test_finiteness_tripotents_and_trials(self):
        """Test that every factor checks its tripotents with the configured trial count."""
        sampling = SamplingConfig(finiteness_trials=7)
        report = FinitenessReport(holds=True, trials=7)
        with patch("src.campaign.suites.engine.random_tripotent_in"), patch(
            "src.campaign.suites.engine.elements", return_value={}
        ), patch("src.campaign.suites.engine.is_finite_tripotent_sampled", return_value=report) as finiteness:
            result = finite_dimensional_finiteness(SuiteContext("finite-dimensional-finiteness", 0, 1, sampling=sampling))
        assert finiteness.call_count == FINITENESS_TRIPOTENTS * len(TRIPOTENT_FACTORS)
        assert {call.args[1] for call in finiteness.call_args_list} == {7}
        assert result.trials == finiteness.call_count

    def test_even_rank_samples(self):
        """Test that each antisymmetric size gets the full sample count."""
        law = MagicMock(holds=True, max_rank=0, odd_rank_count=0, unitary_found=False)
        with patch("src.campaign.suites.matrix.antisym_even_rank_law", return_value=law) as even_rank:
            antisym_even_rank(SuiteContext("antisym-even-rank", 0, 1))
        assert [call.args[1] for call in even_rank.call_args_list] == [EVEN_RANK_SAMPLES] * 6


class TestRunner:
    """Tests for campaign runs."""

    def test_cheap_suites_meet_expectations(self):
        """Test that a small run passes, counterexample suites included."""
        reports = run_campaign(CHEAP, seed=1, trials=5)
        assert [r.suite for r in reports] == sorted(CHEAP)
        assert all(r.met for r in reports), render_text(reports)
        assert campaign_exit_code(reports) == 0
        violations = next(r for r in reports if r.suite == "cd-violations")
        assert any(w["kind"] == "counterexample" for w in violations.witnesses)

    def test_same_seed_same_report(self):
        """Test that reports are byte-identical for a seed, with or without workers."""
        first = reports_to_json(run_campaign(CHEAP, seed=7, trials=5))
        second = reports_to_json(run_campaign(CHEAP, seed=7, trials=5, workers=3))
        assert first == second
        assert all(entry["seconds"] == 0.0 for entry in json.loads(first))

    def test_empty_selection(self):
        """Test that an empty selection raises UnknownSuite."""
        with pytest.raises(UnknownSuite):
            run_campaign([], seed=0, trials=1)

    def test_raising_suite_is_a_deviation(self):
        """Test that an exception inside a suite becomes a failed report."""

        def boom(ctx):
            raise ZeroDivisionError("division by zero")

        report = run_suite(Suite(id="boom", run=boom), seed=0, trials=1)
        assert not report.met
        assert report.error.startswith("ZeroDivisionError")
        assert campaign_exit_code([report]) == 1

    def test_missing_counterexample_is_a_deviation(self):
        """Test that a counterexample suite without a counterexample is not met."""

        def quiet(ctx):
            result = SuiteResult()
            result.missing_counterexample("nothing")
            return result

        report = run_suite(Suite(id="quiet", run=quiet, expected=COUNTEREXAMPLE_EXPECTED), seed=0, trials=1)
        assert not report.met

    def test_timing_is_opt_in(self):
        """Test that record_timing stores a wall time."""
        suite = Suite(id="noop", run=lambda ctx: SuiteResult())
        assert run_suite(suite, 0, 1).seconds == 0.0
        assert run_suite(suite, 0, 1, record_timing=True).seconds >= 0.0


class TestReports:
    """Tests for JSON reports and text rendering."""

    def test_write_and_load(self, tmp_path):
        """Test that a written report reads back to the same JSON."""
        reports = run_campaign(["cd-basis-table"], seed=3, trials=2)
        path = write_reports(tmp_path / "out" / "run.json", reports)
        assert reports_to_json(load_reports(path)) == reports_to_json(reports)

    def test_render_text_summary(self):
        """Test the summary line of the text table."""
        reports = run_campaign(["cd-basis-table"], seed=3, trials=2)
        assert render_text(reports).endswith("1/1 suites met their expectation")
        assert render_text([]) == "No suites run."

    def test_malformed_files(self, tmp_path):
        """Test that broken report files raise ParseError."""
        bad_json = tmp_path / "bad.json"
        bad_json.write_text("[{", encoding="utf-8")
        with pytest.raises(ParseError):
            load_reports(bad_json)

        not_a_list = tmp_path / "object.json"
        not_a_list.write_text('{"suite": "x"}', encoding="utf-8")
        with pytest.raises(ParseError):
            load_reports(not_a_list)

        missing_field = tmp_path / "missing.json"
        missing_field.write_text('[{"suite": "x"}]', encoding="utf-8")
        with pytest.raises(ParseError):
            load_reports(missing_field)
