"""The projection lattice of M_n: order, meet, join and orthocomplement."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from src.errors import AmbientMismatch, NotProjection
from src.numeric import (
    DEFAULT_TOLERANCE,
    Subspace,
    ToleranceConfig,
    is_projection,
    op_norm,
    orthogonal_complement,
    projection_leq,
    subspace_intersection,
    subspace_sum,
)


@dataclass(frozen=True, eq=False)
class ProjectionLatticeElement:
    """Hermitian idempotent p of M_n, kept together with its range.

    Attributes:
        p: The projection matrix.
        range: Orthonormal basis of ran(p).
    """

    p: np.ndarray
    range: Subspace

    @property
    def n(self) -> int:
        return int(self.p.shape[0])

    @property
    def rank(self) -> int:
        return self.range.rank

    def distance(self, other: "ProjectionLatticeElement") -> float:
        _check_ambient(self, other)
        return op_norm(self.p - other.p)

    def conjugate(self, U: np.ndarray) -> "ProjectionLatticeElement":
        """U p U* for a unitary U."""
        return from_subspace(Subspace.from_columns(U @ self.range.basis))


def projection(
    p: np.ndarray, tol: ToleranceConfig = DEFAULT_TOLERANCE
) -> ProjectionLatticeElement:
    """Wrap a matrix as a lattice element.

    Raises:
        NotProjection: If p is not a Hermitian idempotent.
    """
    p = np.asarray(p, dtype=complex)
    if p.ndim != 2 or p.shape[0] != p.shape[1] or not is_projection(p, tol):
        raise NotProjection(f"Matrix of shape {p.shape} is not a projection")
    return ProjectionLatticeElement(p, Subspace.from_projector(p, tol))


def from_subspace(space: Subspace) -> ProjectionLatticeElement:
    return ProjectionLatticeElement(space.projector(), space)


def from_vectors(
    vectors: np.ndarray, n: Optional[int] = None, tol: ToleranceConfig = DEFAULT_TOLERANCE
) -> ProjectionLatticeElement:
    """Projection onto the span of the columns of ``vectors``."""
    cols = np.asarray(vectors, dtype=complex)
    if cols.size == 0:
        if n is None:
            raise ValueError("Ambient size needed for an empty family")
        return zero(n)
    return from_subspace(Subspace.from_columns(cols, tol))


def zero(n: int) -> ProjectionLatticeElement:
    return from_subspace(Subspace.zero(n))


def identity(n: int) -> ProjectionLatticeElement:
    return from_subspace(Subspace.full(n))


def _check_ambient(p: ProjectionLatticeElement, q: ProjectionLatticeElement) -> None:
    if p.n != q.n:
        raise AmbientMismatch(f"Projections of M_{p.n} and M_{q.n} mixed")


def join(
    p: ProjectionLatticeElement, q: ProjectionLatticeElement, tol: ToleranceConfig = DEFAULT_TOLERANCE
) -> ProjectionLatticeElement:
    """p ∨ q: projection onto ran(p) + ran(q)."""
    _check_ambient(p, q)
    return from_subspace(subspace_sum(p.range, q.range, tol))


def meet(
    p: ProjectionLatticeElement, q: ProjectionLatticeElement, tol: ToleranceConfig = DEFAULT_TOLERANCE
) -> ProjectionLatticeElement:
    """p ∧ q: projection onto ran(p) ∩ ran(q)."""
    _check_ambient(p, q)
    return from_subspace(subspace_intersection(p.range, q.range, tol))


def complement(p: ProjectionLatticeElement) -> ProjectionLatticeElement:
    """Orthocomplement I - p."""
    return from_subspace(orthogonal_complement(p.range))


def lattice_leq(
    p: ProjectionLatticeElement, q: ProjectionLatticeElement, tol: ToleranceConfig = DEFAULT_TOLERANCE
) -> bool:
    _check_ambient(p, q)
    return projection_leq(p.p, q.p, tol)


def lattice_equal(
    p: ProjectionLatticeElement, q: ProjectionLatticeElement, tol: ToleranceConfig = DEFAULT_TOLERANCE
) -> bool:
    return p.rank == q.rank and tol.within(p.distance(q))
