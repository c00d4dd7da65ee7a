"""Partial-isometry calculus: initial and final projections and their order."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

import numpy as np

from src.errors import NotProjection, NotTripotent, SpaceMismatch
from src.factors.matrix import MatrixFactor
from src.numeric import (
    DEFAULT_TOLERANCE,
    Subspace,
    ToleranceConfig,
    is_projection,
    matrix_rank,
    op_norm,
    projection_leq,
)
from src.triples.space import Element


@dataclass(frozen=True, eq=False)
class PartialIsometry:
    """Matrix u with initial projection u*u and final projection uu*."""

    u: np.ndarray
    p_i: np.ndarray
    p_f: np.ndarray

    @property
    def rank(self) -> int:
        return int(round(float(np.trace(self.p_i).real)))


def partial_isometry(
    u: Union[Element, np.ndarray, PartialIsometry],
    tol: ToleranceConfig = DEFAULT_TOLERANCE,
) -> PartialIsometry:
    """Validate u as a partial isometry.

    Raises:
        NotTripotent: If u*u or uu* is not a projection.
    """
    if isinstance(u, PartialIsometry):
        return u
    if isinstance(u, Element):
        if not isinstance(u.space, MatrixFactor):
            raise SpaceMismatch(f"{u.space.label} is not a matrix factor")
        M = u.space.to_matrix(u)
    else:
        M = np.asarray(u, dtype=complex)
    p_i = M.conj().T @ M
    p_f = M @ M.conj().T
    if not (is_projection(p_i, tol) and is_projection(p_f, tol)):
        raise NotTripotent("Matrix is not a partial isometry")
    return PartialIsometry(M, p_i, p_f)


def _same_shape(a: PartialIsometry, b: PartialIsometry) -> None:
    if a.u.shape != b.u.shape:
        raise SpaceMismatch(f"Shapes differ: {a.u.shape} vs {b.u.shape}")


def vn_leq2(u, v, tol: ToleranceConfig = DEFAULT_TOLERANCE) -> bool:
    """u <=2 v iff p_i(u) <= p_i(v) and p_f(u) <= p_f(v)."""
    a, b = partial_isometry(u, tol), partial_isometry(v, tol)
    _same_shape(a, b)
    return projection_leq(a.p_i, b.p_i, tol) and projection_leq(a.p_f, b.p_f, tol)


@dataclass(frozen=True, eq=False)
class VnOrderVerdict:
    """u <= e with witnesses p = uu*, q = u*u when it holds."""

    holds: bool
    residual: float
    p: Optional[np.ndarray] = None
    q: Optional[np.ndarray] = None

    def __bool__(self) -> bool:
        return self.holds


def vn_order(u, e, tol: ToleranceConfig = DEFAULT_TOLERANCE) -> VnOrderVerdict:
    """u <= e iff u = pe = eq for projections p <= p_f(e), q <= p_i(e)."""
    a, b = partial_isometry(u, tol), partial_isometry(e, tol)
    _same_shape(a, b)
    p, q = a.p_f, a.p_i
    residual = max(
        op_norm(a.u - p @ b.u),
        op_norm(a.u - b.u @ q),
        op_norm(p - b.p_f @ p),
        op_norm(q - b.p_i @ q),
    )
    if residual <= tol.eq_tol:
        return VnOrderVerdict(True, residual, p, q)
    return VnOrderVerdict(False, residual)


@dataclass(frozen=True, eq=False)
class MvnVerdict:
    """p ~ q with a partial isometry w, w*w = p and ww* = q, when it holds."""

    holds: bool
    witness: Optional[np.ndarray] = None

    def __bool__(self) -> bool:
        return self.holds


def mvn_equivalent(p: np.ndarray, q: np.ndarray, tol: ToleranceConfig = DEFAULT_TOLERANCE) -> MvnVerdict:
    """Murray-von Neumann equivalence of projections of M_n, decided by rank.

    Raises:
        NotProjection: If p or q is not a Hermitian idempotent.
    """
    p = np.asarray(p, dtype=complex)
    q = np.asarray(q, dtype=complex)
    for name, x in (("p", p), ("q", q)):
        if not is_projection(x, tol):
            raise NotProjection(f"{name} is not a projection")
    if p.shape != q.shape:
        raise SpaceMismatch(f"Shapes differ: {p.shape} vs {q.shape}")
    P, Q = Subspace.from_projector(p, tol), Subspace.from_projector(q, tol)
    if P.rank != Q.rank:
        return MvnVerdict(False)
    return MvnVerdict(True, Q.basis @ P.basis.conj().T)


def is_complete_matrix_tripotent(u, tol: ToleranceConfig = DEFAULT_TOLERANCE) -> bool:
    """In M_{m,n}: p_i(u) = I or p_f(u) = I."""
    a = partial_isometry(u, tol)
    m, n = a.u.shape
    return matrix_rank(a.p_i, tol) == n or matrix_rank(a.p_f, tol) == m


def vn_le0(u, v, tol: ToleranceConfig = DEFAULT_TOLERANCE) -> bool:
    """In a rectangular factor, u <=0 v iff v is complete or u <=2 v."""
    return is_complete_matrix_tripotent(v, tol) or vn_leq2(u, v, tol)


def is_finite_by_rank(u, tol: ToleranceConfig = DEFAULT_TOLERANCE) -> bool:
    """Initial and final projections have equal finite rank."""
    a = partial_isometry(u, tol)
    return matrix_rank(a.p_i, tol) == matrix_rank(a.p_f, tol)
