"""Tolerance policy shared by every numerical verdict."""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Optional

from src.errors import ConfigError


@dataclass(frozen=True)
class ToleranceConfig:
    """Absolute tolerances on unit-normalized data.

    Attributes:
        eq_tol: Equality tolerance for residuals after normalization.
        rank_tol: Singular-value cutoff for numerical rank.
        eig_cluster_tol: Allowed distance of an eigenvalue of L(u,u) from
            the nearest of 0, 1/2 and 1.
    """

    eq_tol: float = 1e-9
    rank_tol: float = 1e-8
    eig_cluster_tol: float = 1e-6

    def __post_init__(self) -> None:
        for name in ("eq_tol", "rank_tol", "eig_cluster_tol"):
            value = getattr(self, name)
            if not value > 0:
                raise ConfigError(f"{name} must be strictly positive, got {value}")
        if not self.eq_tol < 1:
            raise ConfigError(f"eq_tol must be below 1, got {self.eq_tol}")

    def with_overrides(
        self,
        eq_tol: Optional[float] = None,
        rank_tol: Optional[float] = None,
        eig_cluster_tol: Optional[float] = None,
    ) -> "ToleranceConfig":
        """Return a copy with the given fields replaced; None keeps a field."""
        changes = {
            key: value
            for key, value in (
                ("eq_tol", eq_tol),
                ("rank_tol", rank_tol),
                ("eig_cluster_tol", eig_cluster_tol),
            )
            if value is not None
        }
        return replace(self, **changes) if changes else self

    @staticmethod
    def scaled(residual: float, *norms: float) -> float:
        """Divide a residual by max(1, norms...)."""
        return float(residual) / max([1.0, *[float(n) for n in norms]])

    def within(self, residual: float, *norms: float) -> bool:
        """True iff the normalized residual is at most eq_tol."""
        return self.scaled(residual, *norms) <= self.eq_tol


DEFAULT_TOLERANCE = ToleranceConfig()
