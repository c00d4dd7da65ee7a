"""Verification campaign: suite registry, runner, reports and element files."""

from src.campaign.base import ALL_PASS, COUNTEREXAMPLE_EXPECTED, Report, Suite, SuiteContext, SuiteResult
from src.campaign.element_io import dumps_element, loads_element, read_element, write_element
from src.campaign.registry import check_registry, load_claims, register_suite, registered_suites, select_suites
from src.campaign.reporting import load_reports, render_text, reports_to_json, write_reports
from src.campaign.runner import campaign_exit_code, run_campaign, run_suite

__all__ = [
    "ALL_PASS",
    "COUNTEREXAMPLE_EXPECTED",
    "Report",
    "Suite",
    "SuiteContext",
    "SuiteResult",
    "campaign_exit_code",
    "check_registry",
    "dumps_element",
    "load_claims",
    "load_reports",
    "loads_element",
    "read_element",
    "register_suite",
    "registered_suites",
    "render_text",
    "reports_to_json",
    "run_campaign",
    "run_suite",
    "select_suites",
    "write_element",
    "write_reports",
]
