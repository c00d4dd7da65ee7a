"""Dense complex linear algebra with an explicit tolerance policy."""

from __future__ import annotations

from typing import Tuple

import numpy as np
import scipy.linalg as sla

from src.errors import NotHermitian, NotSquare, PeirceSpectrumError
from src.numeric.tolerance import DEFAULT_TOLERANCE, ToleranceConfig

PEIRCE_EIGENVALUES = np.array([0.0, 0.5, 1.0])


def as_matrix(M: np.ndarray) -> np.ndarray:
    """Return M as a finite 2-D complex array."""
    arr = np.asarray(M, dtype=complex)
    if arr.ndim != 2:
        raise ValueError(f"Expected a 2-D matrix, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("Matrix has non-finite entries")
    return arr


def op_norm(M: np.ndarray) -> float:
    """Spectral norm; 0 for empty matrices."""
    arr = np.asarray(M)
    if arr.size == 0:
        return 0.0
    return float(np.linalg.norm(arr, ord=2))


def hermitian_residual(M: np.ndarray) -> float:
    arr = as_matrix(M)
    return op_norm(arr - arr.conj().T)


def hermitian_eig(
    M: np.ndarray,
    tol: ToleranceConfig = DEFAULT_TOLERANCE,
) -> Tuple[np.ndarray, np.ndarray]:
    """Eigen-decomposition of a Hermitian matrix.

    Args:
        M: Square matrix, Hermitian to eq_tol after normalization.
        tol: Tolerance policy.

    Returns:
        Ascending real eigenvalues and a unitary matrix of eigenvectors.

    Raises:
        NotSquare: If M is not square.
        NotHermitian: If ``M - M*`` is too large.
    """
    arr = as_matrix(M)
    if arr.shape[0] != arr.shape[1]:
        raise NotSquare(f"Expected a square matrix, got shape {arr.shape}")
    residual = hermitian_residual(arr)
    if not tol.within(residual, op_norm(arr)):
        raise NotHermitian(f"Symmetry residual {residual:.3e} exceeds eq_tol", residual=residual)
    eigenvalues, eigenvectors = sla.eigh(0.5 * (arr + arr.conj().T))
    return eigenvalues, eigenvectors


def svd(M: np.ndarray) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Thin SVD ``M = U diag(s) V*`` with descending singular values.

    Returns ``V`` itself, not its adjoint.
    """
    arr = as_matrix(M)
    if arr.size == 0:
        return (
            np.zeros((arr.shape[0], 0), dtype=complex),
            np.zeros(0),
            np.zeros((arr.shape[1], 0), dtype=complex),
        )
    U, s, Vh = sla.svd(arr, full_matrices=False)
    return U, s, Vh.conj().T


def matrix_rank(M: np.ndarray, tol: ToleranceConfig = DEFAULT_TOLERANCE) -> int:
    """Number of singular values above rank_tol."""
    _, s, _ = svd(M)
    return int(np.sum(s > tol.rank_tol))


def cluster_spectrum(
    eigenvalues: np.ndarray,
    tol: ToleranceConfig = DEFAULT_TOLERANCE,
) -> Tuple[np.ndarray, float]:
    """Snap eigenvalues of L(u,u) to the nearest of 0, 1/2, 1.

    Returns:
        The snapped labels and the largest distance moved.

    Raises:
        PeirceSpectrumError: If some eigenvalue is further than
            eig_cluster_tol from every label.
    """
    values = np.asarray(eigenvalues, dtype=float).reshape(-1)
    if values.size == 0:
        return values.copy(), 0.0
    distances = np.abs(values[:, None] - PEIRCE_EIGENVALUES[None, :])
    nearest = np.argmin(distances, axis=1)
    residual = float(np.max(distances[np.arange(values.size), nearest]))
    if residual > tol.eig_cluster_tol:
        raise PeirceSpectrumError(
            f"Eigenvalue {residual:.3e} away from {{0, 1/2, 1}}", residual=residual
        )
    return PEIRCE_EIGENVALUES[nearest], residual


def is_projection(P: np.ndarray, tol: ToleranceConfig = DEFAULT_TOLERANCE) -> bool:
    """Hermitian idempotent to eq_tol."""
    arr = as_matrix(P)
    if arr.shape[0] != arr.shape[1]:
        return False
    scale = op_norm(arr)
    return tol.within(hermitian_residual(arr), scale) and tol.within(
        op_norm(arr @ arr - arr), scale
    )


def projection_leq(p: np.ndarray, q: np.ndarray, tol: ToleranceConfig = DEFAULT_TOLERANCE) -> bool:
    """Projection order p <= q decided as ||p - q p|| <= eq_tol."""
    return tol.within(op_norm(np.asarray(p) - np.asarray(q) @ np.asarray(p)))
