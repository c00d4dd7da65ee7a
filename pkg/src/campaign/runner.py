"""Campaign runner: select suites, run them with derived seeds, collect reports."""

from __future__ import annotations

import logging
import time
from concurrent.futures import ThreadPoolExecutor
from typing import Iterable, List, Optional, Sequence

from src.campaign.base import Report, Suite, SuiteContext, SuiteResult
from src.campaign.registry import check_registry, load_claims, select_suites
from src.errors import UnknownSuite
from src.numeric import DEFAULT_TOLERANCE, ToleranceConfig
from src.utils.config_loader import SamplingConfig
from src.utils.logger import get_logger, log_event

logger = get_logger("campaign")


def run_suite(
    suite: Suite,
    seed: int,
    trials: int,
    tol: ToleranceConfig = DEFAULT_TOLERANCE,
    sampling: Optional[SamplingConfig] = None,
    record_timing: bool = False,
) -> Report:
    """Run one suite; an exception inside the suite counts as a deviation."""
    context = SuiteContext(suite.id, seed, trials, tol, sampling or SamplingConfig())
    start = time.perf_counter()
    error: Optional[str] = None
    try:
        result = suite.run(context)
    except Exception as exc:
        logger.exception(f"Suite {suite.id} raised")
        result = SuiteResult()
        result.check(False, witness={"error": type(exc).__name__, "message": str(exc)})
        error = f"{type(exc).__name__}: {exc}"
    seconds = round(time.perf_counter() - start, 6) if record_timing else 0.0

    report = Report(
        suite=suite.id,
        citation=suite.citation,
        expected=suite.expected,
        met=suite.met(result),
        trials=result.trials,
        failures=result.failures,
        max_residual=result.max_residual,
        seconds=seconds,
        seed=seed,
        witnesses=result.witnesses,
        error=error,
    )
    level = logging.INFO if report.met else logging.WARNING
    log_event(
        logger,
        level,
        "Suite met expectation" if report.met else "Suite deviated",
        extra={
            "suite": suite.id,
            "trials": report.trials,
            "failures": report.failures,
            "max_residual": report.max_residual,
            "seed": seed,
        },
    )
    return report


def run_campaign(
    selection: Sequence[str],
    seed: int,
    trials: int,
    tol: ToleranceConfig = DEFAULT_TOLERANCE,
    sampling: Optional[SamplingConfig] = None,
    workers: int = 1,
    record_timing: bool = False,
    claims_path: Optional[str] = None,
    progress: bool = False,
) -> List[Report]:
    """Run every suite matching the glob selection.

    Reports come back in suite-id order; each trial's randomness depends
    only on (seed, suite id, trial index), so ``workers`` never changes
    the result.

    Raises:
        UnknownSuite: If the selection is empty or a glob matches nothing.
        RegistryError: If the registry disagrees with the claims manifest.
    """
    if not selection:
        raise UnknownSuite("Empty suite selection")
    suites = select_suites(check_registry(load_claims(claims_path)), selection)
    log_event(
        logger,
        logging.INFO,
        "Campaign started",
        extra={"suites": len(suites), "seed": seed, "trials": trials, "workers": workers},
    )

    def run(suite: Suite) -> Report:
        return run_suite(suite, seed, trials, tol, sampling, record_timing)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(run, suites))
    else:
        iterator: Iterable[Suite] = suites
        if progress:
            try:
                from tqdm import tqdm

                iterator = tqdm(suites, desc="Campaign")
            except ImportError:
                pass
        reports = [run(suite) for suite in iterator]

    deviations = [r.suite for r in reports if not r.met]
    log_event(
        logger,
        logging.INFO if not deviations else logging.WARNING,
        "Campaign finished",
        extra={"suites": len(reports), "deviations": deviations},
    )
    return reports


def campaign_exit_code(reports: Sequence[Report]) -> int:
    """0 when every suite met its expectation, 1 otherwise."""
    return 0 if all(r.met for r in reports) else 1
