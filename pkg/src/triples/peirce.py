"""Peirce projections and subspaces of a tripotent."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Tuple

import numpy as np

from src.errors import NotTripotent
from src.numeric import (
    DEFAULT_TOLERANCE,
    Subspace,
    ToleranceConfig,
    cluster_spectrum,
    hermitian_eig,
    op_norm,
)
from src.triples.operators import L_operator, Q_operator, is_tripotent
from src.triples.space import Element


@dataclass(frozen=True, eq=False)
class PeirceFrame:
    """Peirce decomposition E = E2(u) + E1(u) + E0(u).

    Attributes:
        tripotent: The tripotent u.
        P0, P1, P2: Peirce projections as coordinate matrices.
        E0, E1, E2: Peirce subspaces from the eigenvectors of L(u,u).
        eigenvalues: Spectrum of L(u,u), ascending.
        spectrum_residual: Largest eigenvalue distance from {0, 1/2, 1}.
        q_residual: ``||(2L^2 - L) - Q(u)^2||``.
    """

    tripotent: Element
    P0: np.ndarray
    P1: np.ndarray
    P2: np.ndarray
    E0: Subspace
    E1: Subspace
    E2: Subspace
    eigenvalues: np.ndarray
    spectrum_residual: float
    q_residual: float

    @property
    def ranks(self) -> Tuple[int, int, int]:
        """Ranks ordered (E2, E1, E0)."""
        return self.E2.rank, self.E1.rank, self.E0.rank

    def projection(self, j: int) -> np.ndarray:
        return {0: self.P0, 1: self.P1, 2: self.P2}[j]

    def subspace(self, j: int) -> Subspace:
        return {0: self.E0, 1: self.E1, 2: self.E2}[j]

    def project(self, j: int, x: Element) -> Element:
        return Element(x.space, self.projection(j) @ x.coords)

    def identity_residuals(self) -> Dict[str, float]:
        """Partition of unity, mutual annihilation and the Q(u)^2 cross-check."""
        d = self.P0.shape[0]
        projections = (self.P0, self.P1, self.P2)
        annihilation = 0.0
        for j, Pj in enumerate(projections):
            for k, Pk in enumerate(projections):
                target = Pj if j == k else np.zeros_like(Pj)
                annihilation = max(annihilation, op_norm(Pj @ Pk - target))
        rank_gap = abs(sum(self.ranks) - d)
        return {
            "partition": op_norm(self.P0 + self.P1 + self.P2 - np.eye(d)),
            "annihilation": annihilation,
            "q_squared": self.q_residual,
            "rank_sum": float(rank_gap),
        }


def peirce_frame(u: Element, tol: ToleranceConfig = DEFAULT_TOLERANCE) -> PeirceFrame:
    """Peirce frame of a tripotent.

    Raises:
        NotTripotent: If {u,u,u} differs from u.
    """
    check = is_tripotent(u, tol)
    if not check:
        raise NotTripotent(f"Not a tripotent (residual {check.residual:.3e})", residual=check.residual)

    L = L_operator(u, u)
    L2 = L @ L
    identity = np.eye(u.space.dim)
    P2 = 2 * L2 - L
    P1 = 4 * (L - L2)
    P0 = identity - 3 * L + 2 * L2

    eigenvalues, eigenvectors = hermitian_eig(L, tol)
    labels, spectrum_residual = cluster_spectrum(eigenvalues, tol)
    n = u.space.dim
    E = {
        j: Subspace(n, eigenvectors[:, labels == value])
        for j, value in ((0, 0.0), (1, 0.5), (2, 1.0))
    }
    q_residual = op_norm(P2 - Q_operator(u).square())

    return PeirceFrame(
        tripotent=u,
        P0=P0,
        P1=P1,
        P2=P2,
        E0=E[0],
        E1=E[1],
        E2=E[2],
        eigenvalues=eigenvalues,
        spectrum_residual=spectrum_residual,
        q_residual=q_residual,
    )


def peirce_ranks(u: Element, tol: ToleranceConfig = DEFAULT_TOLERANCE) -> Tuple[int, int, int]:
    return peirce_frame(u, tol).ranks
