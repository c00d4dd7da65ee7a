"""Exception hierarchy for the JB*-triple workbench."""

from __future__ import annotations

from typing import Optional


class WorkbenchError(Exception):
    """Base class for every error raised by the workbench.

    Attributes:
        residual: Offending numerical residual, when the failure was
            decided by a tolerance comparison.
    """

    def __init__(self, message: str, residual: Optional[float] = None) -> None:
        super().__init__(message)
        self.residual = residual


class ConfigError(WorkbenchError, ValueError):
    """Invalid tolerance or configuration value."""


class NotHermitian(WorkbenchError):
    """Matrix symmetry residual exceeds eq_tol."""


class NotSquare(WorkbenchError):
    """Square matrix expected."""


class AmbientMismatch(WorkbenchError):
    """Subspaces or projections live in different ambient spaces."""


class SpaceMismatch(WorkbenchError):
    """Elements belong to different triple spaces."""


class NotTripotent(WorkbenchError):
    """Element fails {u,u,u} = u."""


class PeirceSpectrumError(WorkbenchError):
    """L(u,u) has an eigenvalue away from {0, 1/2, 1} for a tripotent."""


class IterationStall(WorkbenchError):
    """No nonzero tripotent found in a nonzero Peirce-0 space."""


class NoConvergence(WorkbenchError):
    """Odd-power iteration did not reach a tripotent."""


class BadSize(WorkbenchError, ValueError):
    """Invalid factor size or non-closed subtriple basis."""


class InfeasibleRank(WorkbenchError, ValueError):
    """Requested tripotent rank is impossible in the factor."""


class NotProjection(WorkbenchError):
    """Matrix is not a Hermitian idempotent."""


class LevelMismatch(WorkbenchError):
    """Cayley-Dickson elements of different levels."""


class KindMismatch(WorkbenchError):
    """Tripotent type disagrees with the requested kind."""


class ZeroTripotent(WorkbenchError):
    """Nonzero tripotent expected."""


class UnknownSuite(WorkbenchError, KeyError):
    """Suite selection matched nothing."""


class RegistryError(WorkbenchError):
    """Registered suites disagree with the claims manifest."""


class FactorMismatch(WorkbenchError):
    """Serialized element belongs to another factor than expected."""


class ParseError(WorkbenchError, ValueError):
    """Malformed serialized element.

    Attributes:
        position: Character offset (JSON syntax errors) or field path
            (structural errors) of the defect.
    """

    def __init__(self, message: str, position: object = None) -> None:
        super().__init__(f"{message} (at {position})" if position is not None else message)
        self.position = position
