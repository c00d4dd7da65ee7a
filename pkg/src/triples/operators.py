"""The operators L(a,b) and Q(u) and the tripotent test."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from src.numeric import DEFAULT_TOLERANCE, ToleranceConfig, cluster_spectrum, hermitian_eig
from src.triples.space import Element, ensure_same_space


def L_operator(a: Element, b: Element) -> np.ndarray:
    """Matrix of x -> {a,b,x} in the coordinate basis."""
    ensure_same_space(a, b)
    return np.einsum("jkli,j,k->il", a.space.tensor, a.coords, b.coords.conj())


@dataclass(frozen=True)
class ConjugateLinearOperator:
    """x -> A conj(x), with its real-linear 2d x 2d representation."""

    conj_matrix: np.ndarray

    def apply(self, x: np.ndarray) -> np.ndarray:
        return self.conj_matrix @ np.conj(x)

    @property
    def real_matrix(self) -> np.ndarray:
        Ar, Ai = self.conj_matrix.real, self.conj_matrix.imag
        return np.block([[Ar, Ai], [Ai, -Ar]])

    def square(self) -> np.ndarray:
        """The complex-linear operator x -> A conj(A conj(x))."""
        d = self.conj_matrix.shape[0]
        R = self.real_matrix @ self.real_matrix
        return R[:d, :d] + 1j * R[d:, :d]


def Q_operator(u: Element) -> ConjugateLinearOperator:
    """Conjugate-linear x -> {u,x,u}."""
    return ConjugateLinearOperator(np.einsum("jkli,j,l->ik", u.space.tensor, u.coords, u.coords))


@dataclass(frozen=True)
class TripotentCheck:
    """Outcome of the tripotent test.

    Attributes:
        is_tripotent: Whether {u,u,u} = u to eq_tol.
        residual: Raw ``||{u,u,u} - u||`` in coordinates.
        spectrum_residual: Distance of the spectrum of L(u,u) from
            {0, 1/2, 1}; only computed for tripotents.
    """

    is_tripotent: bool
    residual: float
    spectrum_residual: float = 0.0

    def __bool__(self) -> bool:
        return self.is_tripotent


def is_tripotent(u: Element, tol: ToleranceConfig = DEFAULT_TOLERANCE) -> TripotentCheck:
    """Decide {u,u,u} = u and validate the Peirce spectrum of L(u,u).

    Raises:
        PeirceSpectrumError: If u passes the product test but L(u,u) has an
            eigenvalue further than eig_cluster_tol from {0, 1/2, 1}.
    """
    cube = u.space.triple(u, u, u)
    residual = cube.distance(u)
    if not tol.within(residual, u.norm2, cube.norm2):
        return TripotentCheck(False, residual)
    eigenvalues, _ = hermitian_eig(L_operator(u, u), tol)
    _, spectrum_residual = cluster_spectrum(eigenvalues, tol)
    return TripotentCheck(True, residual, spectrum_residual)
