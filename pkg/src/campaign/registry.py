"""Suite registry, checked against the claims manifest."""

from __future__ import annotations

import fnmatch
import logging
from dataclasses import replace
from typing import Callable, Dict, Iterable, List, Optional

from src.campaign.base import ALL_PASS, EXPECTATIONS, Suite, SuiteContext, SuiteResult
from src.errors import RegistryError, UnknownSuite
from src.utils.config_loader import DEFAULT_CLAIMS_PATH, load_yaml_config
from src.utils.logger import get_logger, log_event

logger = get_logger("campaign.registry")

_SUITES: Dict[str, Suite] = {}

SuiteFn = Callable[[SuiteContext], SuiteResult]


def register_suite(suite_id: str, expected: str = ALL_PASS) -> Callable[[SuiteFn], SuiteFn]:
    """Register the decorated function as the suite ``suite_id``."""
    if expected not in EXPECTATIONS:
        raise ValueError(f"Unknown expectation {expected!r}")

    def decorator(func: SuiteFn) -> SuiteFn:
        if suite_id in _SUITES:
            raise RegistryError(f"Suite {suite_id!r} registered twice")
        _SUITES[suite_id] = Suite(id=suite_id, run=func, expected=expected)
        return func

    return decorator


def registered_suites() -> Dict[str, Suite]:
    """Every registered suite, importing the suite modules on first use."""
    import src.campaign.suites  # noqa: F401

    return dict(_SUITES)


def load_claims(path: Optional[str] = None) -> Dict[str, Dict[str, str]]:
    """``suite id -> {claim, expected}`` from the manifest."""
    raw = load_yaml_config(path or DEFAULT_CLAIMS_PATH)
    claims = raw.get("claims", {}) or {}
    if not isinstance(claims, dict):
        raise RegistryError("claims manifest must map suite ids to entries")
    return {str(k): dict(v or {}) for k, v in claims.items()}


def check_registry(claims: Dict[str, Dict[str, str]]) -> Dict[str, Suite]:
    """Attach manifest citations to the suites.

    Raises:
        RegistryError: If a suite is missing from the manifest, a manifest
            entry has no suite, or the expected outcomes disagree.
    """
    suites = registered_suites()
    unlisted = sorted(set(suites) - set(claims))
    missing = sorted(set(claims) - set(suites))
    if unlisted or missing:
        raise RegistryError(f"Registry and manifest differ: unlisted={unlisted} missing={missing}")

    checked: Dict[str, Suite] = {}
    for suite_id, suite in suites.items():
        entry = claims[suite_id]
        expected = entry.get("expected", ALL_PASS)
        if expected != suite.expected:
            raise RegistryError(
                f"Suite {suite_id!r} expects {suite.expected!r}, manifest says {expected!r}"
            )
        checked[suite_id] = replace(suite, citation=str(entry.get("claim", "")).strip())
    log_event(logger, logging.DEBUG, "Registry checked", extra={"suites": len(checked)})
    return checked


def select_suites(suites: Dict[str, Suite], patterns: Iterable[str]) -> List[Suite]:
    """Suites whose ids match any glob, in id order.

    Raises:
        UnknownSuite: If a pattern matches nothing.
    """
    selected: Dict[str, Suite] = {}
    for pattern in patterns:
        matches = fnmatch.filter(suites, pattern)
        if not matches:
            raise UnknownSuite(f"No suite matches {pattern!r}")
        for suite_id in matches:
            selected[suite_id] = suites[suite_id]
    return [selected[k] for k in sorted(selected)]
