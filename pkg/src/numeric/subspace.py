"""Subspaces with orthonormal bases and their lattice operations."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Tuple

import numpy as np
import scipy.linalg as sla

from src.errors import AmbientMismatch
from src.numeric.linalg import op_norm, svd
from src.numeric.tolerance import DEFAULT_TOLERANCE, ToleranceConfig


@dataclass(frozen=True, eq=False)
class Subspace:
    """Subspace of C^ambient_dim stored by an orthonormal basis.

    Attributes:
        ambient_dim: Dimension of the ambient coordinate space.
        basis: ``ambient_dim x rank`` matrix with orthonormal columns.
    """

    ambient_dim: int
    basis: np.ndarray

    @property
    def rank(self) -> int:
        return int(self.basis.shape[1])

    def projector(self) -> np.ndarray:
        return self.basis @ self.basis.conj().T

    def project(self, x: np.ndarray) -> np.ndarray:
        return self.basis @ (self.basis.conj().T @ x)

    def contains(self, x: np.ndarray, tol: ToleranceConfig = DEFAULT_TOLERANCE) -> bool:
        x = np.asarray(x, dtype=complex)
        return tol.within(float(np.linalg.norm(x - self.project(x))), float(np.linalg.norm(x)))

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, np.zeros((ambient_dim, 0), dtype=complex))

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, np.eye(ambient_dim, dtype=complex))

    @classmethod
    def from_columns(
        cls, columns: np.ndarray, tol: ToleranceConfig = DEFAULT_TOLERANCE
    ) -> "Subspace":
        """Span of the columns, re-orthonormalized; rank by rank_tol."""
        cols = np.asarray(columns, dtype=complex)
        if cols.ndim == 1:
            cols = cols[:, None]
        n = cols.shape[0]
        if cols.shape[1] == 0:
            return cls.zero(n)
        U, s, _ = svd(cols)
        return cls(n, U[:, s > tol.rank_tol])

    @classmethod
    def from_projector(
        cls, P: np.ndarray, tol: ToleranceConfig = DEFAULT_TOLERANCE
    ) -> "Subspace":
        """Range of an (oblique or orthogonal) projector."""
        return cls.from_columns(P, tol)


def _check_ambient(A: Subspace, B: Subspace) -> None:
    if A.ambient_dim != B.ambient_dim:
        raise AmbientMismatch(
            f"Ambient dimensions differ: {A.ambient_dim} vs {B.ambient_dim}"
        )


def inclusion_residual(A: Subspace, B: Subspace) -> Tuple[float, np.ndarray]:
    """Residual ``||(I - P_B) P_A||`` and the unit vector of A furthest from B."""
    _check_ambient(A, B)
    if A.rank == 0:
        return 0.0, np.zeros(A.ambient_dim, dtype=complex)
    outside = A.basis - B.project(A.basis)
    U, s, V = svd(outside)
    witness = A.basis @ V[:, 0]
    return float(s[0]), witness


def subspace_leq(A: Subspace, B: Subspace, tol: ToleranceConfig = DEFAULT_TOLERANCE) -> bool:
    """True iff A is contained in B to eq_tol."""
    residual, _ = inclusion_residual(A, B)
    return residual <= tol.eq_tol


def subspace_equal(A: Subspace, B: Subspace, tol: ToleranceConfig = DEFAULT_TOLERANCE) -> bool:
    return A.rank == B.rank and subspace_leq(A, B, tol) and subspace_leq(B, A, tol)


def subspace_sum(A: Subspace, B: Subspace, tol: ToleranceConfig = DEFAULT_TOLERANCE) -> Subspace:
    """Orthonormal basis of col(A) + col(B)."""
    _check_ambient(A, B)
    return Subspace.from_columns(np.hstack([A.basis, B.basis]), tol)


def subspace_intersection(
    A: Subspace, B: Subspace, tol: ToleranceConfig = DEFAULT_TOLERANCE
) -> Subspace:
    """Orthonormal basis of col(A) ∩ col(B)."""
    _check_ambient(A, B)
    if A.rank == 0 or B.rank == 0:
        return Subspace.zero(A.ambient_dim)
    outside = A.basis - B.project(A.basis)
    _, s, Vh = sla.svd(outside, full_matrices=True)
    singular = np.zeros(A.rank)
    singular[: s.size] = s
    kernel = Vh.conj().T[:, singular <= tol.rank_tol]
    return Subspace.from_columns(A.basis @ kernel, tol)


def orthogonal_complement(A: Subspace) -> Subspace:
    if A.rank == 0:
        return Subspace.full(A.ambient_dim)
    if A.rank == A.ambient_dim:
        return Subspace.zero(A.ambient_dim)
    return Subspace(A.ambient_dim, sla.null_space(A.basis.conj().T))


def projector_distance(A: Subspace, B: Subspace) -> float:
    """Spectral norm of the difference of orthogonal projectors."""
    _check_ambient(A, B)
    return op_norm(A.projector() - B.projector())
