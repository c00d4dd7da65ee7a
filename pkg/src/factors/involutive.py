"""Symmetric and antisymmetric factors: transpose laws, constructions, <=0."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np

from src.errors import KindMismatch, NotProjection
from src.factors.matrix import MatrixFactor, antisymmetric_from_pairs, random_tripotent
from src.factors.von_neumann import partial_isometry
from src.numeric import (
    DEFAULT_TOLERANCE,
    Subspace,
    ToleranceConfig,
    is_projection,
    matrix_rank,
    op_norm,
    projection_leq,
    svd,
)
from src.triples.space import Element
from src.triples.tripotents import range_tripotent_approx
from src.utils.logger import get_logger, log_event

logger = get_logger("factors.involutive")


def _factor(u: Element, kind: str) -> MatrixFactor:
    if not isinstance(u.space, MatrixFactor) or u.space.kind != kind:
        raise KindMismatch(f"Expected an element of a {kind} factor, got {u.space.label}")
    return u.space


def transpose_residual(u: Element, tol: ToleranceConfig = DEFAULT_TOLERANCE) -> float:
    """||p_i(u) - p_f(u)^t|| for a tripotent of a symmetric or antisymmetric factor."""
    a = partial_isometry(u, tol)
    return op_norm(a.p_i - a.p_f.T)


def symmetric_construct_tripotent(
    factor: MatrixFactor,
    p: np.ndarray,
    tol: ToleranceConfig = DEFAULT_TOLERANCE,
) -> Element:
    """Symmetric tripotent u = conj(F) F* with u*u = p.

    F is an orthonormal basis of ran(p); u maps each basis vector to its
    conjugate, so p_i(u) = p and p_f(u) = p^t.

    Raises:
        NotProjection: If p is not a Hermitian idempotent.
    """
    _factor(factor.zero(), "symmetric")
    p = np.asarray(p, dtype=complex)
    if p.shape != factor.shape or not is_projection(p, tol):
        raise NotProjection(f"Expected a projection of shape {factor.shape}")
    F = Subspace.from_projector(p, tol).basis
    return factor.from_matrix(F.conj() @ F.conj().T)


def antisym_unitary(factor: MatrixFactor) -> Element:
    """Unitary of an even-size antisymmetric factor: the direct sum of 2x2 blocks.

    Raises:
        KindMismatch: If the factor has odd size (no unitary exists).
    """
    _factor(factor.zero(), "antisymmetric")
    n = factor.shape[0]
    if n % 2:
        raise KindMismatch(f"antisymmetric({n}) has no unitary element")
    M = np.zeros((n, n), dtype=complex)
    for k in range(0, n, 2):
        M[k, k + 1] = 1.0
        M[k + 1, k] = -1.0
    return factor.from_matrix(M)


def antisym_is_complete(u: Element, tol: ToleranceConfig = DEFAULT_TOLERANCE) -> bool:
    """Complete iff I - p_i(u) has rank at most one."""
    _factor(u, "antisymmetric")
    a = partial_isometry(u, tol)
    return matrix_rank(np.eye(a.u.shape[0]) - a.p_i, tol) <= 1


@dataclass(frozen=True, eq=False)
class AntisymLe0Verdict:
    """u <=0 v in an antisymmetric factor, with a separating tripotent.

    Attributes:
        holds: The verdict.
        branch: ``complete`` (I - p_i(v) has rank <= 1), ``inclusion``
            (p_i(u) <= p_i(v)) or ``none``.
        witness: When false, a tripotent w in E0(v) outside E0(u).
    """

    holds: bool
    branch: str
    witness: Optional[Element] = None

    def __bool__(self) -> bool:
        return self.holds


def antisym_le0(u: Element, v: Element, tol: ToleranceConfig = DEFAULT_TOLERANCE) -> AntisymLe0Verdict:
    """u <=0 v iff I - p_i(v) has rank one (or zero) or p_i(u) <= p_i(v).

    On failure the witness is w = r - r^t built from a unit vector f1 of
    ran(I - p_i(v)) not in ran(I - p_i(u)) and a second unit vector f2 of
    ran(I - p_i(v)) orthogonal to f1; then p_i(w) = r1 + r2.

    Raises:
        NotTripotent: If u or v is not a partial isometry.
    """
    factor = _factor(u, "antisymmetric")
    _factor(v, "antisymmetric")
    a, b = partial_isometry(u, tol), partial_isometry(v, tol)
    n = a.u.shape[0]
    free = Subspace.from_projector(np.eye(n) - b.p_i, tol)
    if free.rank <= 1:
        return AntisymLe0Verdict(True, "complete")
    if projection_leq(a.p_i, b.p_i, tol):
        return AntisymLe0Verdict(True, "inclusion")

    _, s, V = svd(a.p_i @ free.basis)
    f1 = free.basis @ V[:, 0]
    rest = free.basis - np.outer(f1, f1.conj() @ free.basis)
    f2 = Subspace.from_columns(rest, tol).basis[:, 0]
    w = factor.from_matrix(antisymmetric_from_pairs(f1[:, None], f2[:, None]))
    return AntisymLe0Verdict(False, "none", w)


@dataclass
class EvenRankReport:
    """Ranks of initial projections of sampled antisymmetric tripotents."""

    n: int
    samples: int = 0
    ranks: List[int] = field(default_factory=list)
    odd_rank_count: int = 0
    unitary_found: bool = False
    unitary: Optional[Element] = None

    @property
    def max_rank(self) -> int:
        return max(self.ranks) if self.ranks else 0

    @property
    def holds(self) -> bool:
        if self.odd_rank_count:
            return False
        return self.unitary_found == (self.n % 2 == 0)


def antisym_even_rank_law(
    factor: MatrixFactor,
    samples: int,
    rng_seed=None,
    tol: ToleranceConfig = DEFAULT_TOLERANCE,
) -> EvenRankReport:
    """Sample antisymmetric tripotents and record the parity of their ranks.

    Half of the samples come from the pair constructor, half from odd-power
    rounding of random antisymmetric matrices, so the parity is observed on
    tripotents that were not built to be even. For even n a unitary is
    exhibited; for odd n none may appear.
    """
    _factor(factor.zero(), "antisymmetric")
    rng = np.random.default_rng(rng_seed)
    n = factor.shape[0]
    report = EvenRankReport(n=n)
    for k in range(samples):
        if k % 2 == 0:
            u = random_tripotent(factor, None, rng)
        else:
            u = range_tripotent_approx(factor.random_element(rng), tol=tol)
        rank = matrix_rank(partial_isometry(u, tol).p_i, tol)
        report.samples += 1
        report.ranks.append(rank)
        if rank % 2:
            report.odd_rank_count += 1
        if rank == n:
            report.unitary_found = True
            report.unitary = u
    if n % 2 == 0 and not report.unitary_found:
        report.unitary = antisym_unitary(factor)
        report.unitary_found = matrix_rank(partial_isometry(report.unitary, tol).p_i, tol) == n
    log_event(
        logger,
        logging.DEBUG,
        "Even rank law sampled",
        extra={"n": n, "max_rank": report.max_rank, "odd": report.odd_rank_count},
    )
    return report
