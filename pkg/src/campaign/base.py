"""Data types shared by the campaign runner and its suites."""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional

import numpy as np

from src.numeric import DEFAULT_TOLERANCE, ToleranceConfig
from src.utils.config_loader import SamplingConfig

ALL_PASS = "all-pass"
COUNTEREXAMPLE_EXPECTED = "counterexample-expected"
EXPECTATIONS = (ALL_PASS, COUNTEREXAMPLE_EXPECTED)

# Witness payloads kept per suite
MAX_WITNESSES = 5


def suite_hash(suite_id: str) -> int:
    """Stable 64-bit integer derived from the suite id."""
    return int.from_bytes(hashlib.sha256(suite_id.encode("utf-8")).digest()[:8], "big")


@dataclass(frozen=True)
class SuiteContext:
    """Everything a suite needs to run deterministically.

    Attributes:
        suite_id: Id of the running suite.
        seed: Campaign seed.
        trials: Trial budget; suites scale it to their cost.
        tol: Tolerance policy.
        sampling: Sampling budgets from the settings.
    """

    suite_id: str
    seed: int
    trials: int
    tol: ToleranceConfig = DEFAULT_TOLERANCE
    sampling: SamplingConfig = field(default_factory=SamplingConfig)

    def rng(self, trial: int) -> np.random.Generator:
        """Generator of one trial, a function of (seed, suite id, trial) only."""
        return np.random.default_rng([self.seed, suite_hash(self.suite_id), trial])

    def budget(self, fraction: float, minimum: int = 1) -> int:
        """A share of the trial budget for expensive suites."""
        return max(minimum, int(self.trials * fraction))


@dataclass
class SuiteResult:
    """What a suite observed.

    Attributes:
        trials: Checks performed.
        failures: Checks that contradicted the claim.
        max_residual: Largest residual among checks that should vanish.
        counterexamples: Expected violations that were reproduced.
        witnesses: JSON-ready payloads of failures and counterexamples.
    """

    trials: int = 0
    failures: int = 0
    max_residual: float = 0.0
    counterexamples: int = 0
    witnesses: List[Dict[str, Any]] = field(default_factory=list)

    def check(self, ok: bool, residual: float = 0.0, witness: Optional[Dict[str, Any]] = None) -> bool:
        """Record one check of the claim; returns ``ok``."""
        self.trials += 1
        self.max_residual = max(self.max_residual, float(residual))
        if not ok:
            self.failures += 1
            self._keep({"kind": "failure", **(witness or {})})
        return ok

    def residual(self, name: str, value: float, tol: ToleranceConfig, **context: Any) -> bool:
        """Check that a residual vanishes to eq_tol."""
        return self.check(value <= tol.eq_tol, value, {"check": name, "residual": float(value), **context})

    def counterexample(self, witness: Dict[str, Any]) -> None:
        """Record a reproduced violation of a claim that is supposed to fail."""
        self.trials += 1
        self.counterexamples += 1
        self._keep({"kind": "counterexample", **witness})

    def missing_counterexample(self, name: str) -> None:
        """An expected violation did not show up."""
        self.check(False, 0.0, {"check": name, "reason": "expected violation not found"})

    def _keep(self, witness: Dict[str, Any]) -> None:
        if len(self.witnesses) < MAX_WITNESSES:
            self.witnesses.append(witness)


@dataclass(frozen=True)
class Suite:
    """A named, self-contained verification of one claim.

    Attributes:
        id: Suite id, as listed in the claims manifest.
        run: Callable producing the observations for a context.
        expected: ``all-pass`` or ``counterexample-expected``.
        citation: Plain statement of the claim, filled from the manifest.
    """

    id: str
    run: Callable[[SuiteContext], SuiteResult]
    expected: str = ALL_PASS
    citation: str = ""

    def met(self, result: SuiteResult) -> bool:
        if result.failures:
            return False
        if self.expected == COUNTEREXAMPLE_EXPECTED:
            return result.counterexamples > 0
        return True


@dataclass
class Report:
    """Outcome of one suite in a campaign run."""

    suite: str
    citation: str
    expected: str
    met: bool
    trials: int
    failures: int
    max_residual: float
    seconds: float
    seed: int
    witnesses: List[Dict[str, Any]] = field(default_factory=list)
    error: Optional[str] = None

    def to_dict(self) -> Dict[str, Any]:
        data = {
            "suite": self.suite,
            "citation": self.citation,
            "expected": self.expected,
            "met": self.met,
            "trials": self.trials,
            "failures": self.failures,
            "max_residual": self.max_residual,
            "seconds": self.seconds,
            "seed": self.seed,
            "witnesses": self.witnesses,
        }
        if self.error is not None:
            data["error"] = self.error
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "Report":
        return cls(
            suite=str(data["suite"]),
            citation=str(data.get("citation", "")),
            expected=str(data.get("expected", ALL_PASS)),
            met=bool(data["met"]),
            trials=int(data.get("trials", 0)),
            failures=int(data.get("failures", 0)),
            max_residual=float(data.get("max_residual", 0.0)),
            seconds=float(data.get("seconds", 0.0)),
            seed=int(data.get("seed", 0)),
            witnesses=list(data.get("witnesses", [])),
            error=data.get("error"),
        )
