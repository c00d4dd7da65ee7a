"""Matrices with complex-octonion entries, stored as arrays (..., rows, cols, 8)."""

from __future__ import annotations

import numpy as np

from src.cayley_dickson.algebra import diamond_array, multiply_array

OCTONION_DIM = 8
H3O_DIM = 27
OFF_DIAGONAL = ((0, 1), (0, 2), (1, 2))
_SQRT2 = np.sqrt(2.0)


def octonion_matmul(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """(A⊡B)_ij = Σ_k A_ik ⊡ B_kj, batched over leading axes."""
    products = multiply_array(A[..., :, :, None, :], B[..., None, :, :, :])
    return products.sum(axis=-3)


def diamond_transpose(A: np.ndarray) -> np.ndarray:
    """A⋄: transpose with ⋄ applied entrywise."""
    return diamond_array(np.swapaxes(A, -3, -2))


def coords_to_hermitian(x: np.ndarray) -> np.ndarray:
    """27 coordinates to a ⋄-hermitian 3x3 octonion matrix.

    Coordinates are the three diagonal scalars followed by the (1,2), (1,3)
    and (2,3) entries, each scaled by sqrt(2).
    """
    x = np.asarray(x, dtype=complex)
    M = np.zeros(x.shape[:-1] + (3, 3, OCTONION_DIM), dtype=complex)
    for i in range(3):
        M[..., i, i, 0] = x[..., i]
    for k, (i, j) in enumerate(OFF_DIAGONAL):
        entry = x[..., 3 + 8 * k : 11 + 8 * k] / _SQRT2
        M[..., i, j, :] = entry
        M[..., j, i, :] = diamond_array(entry)
    return M


def hermitian_to_coords(M: np.ndarray) -> np.ndarray:
    """Inverse of ``coords_to_hermitian``; reads the upper triangle only."""
    M = np.asarray(M, dtype=complex)
    diagonal = [M[..., i, i, 0] for i in range(3)]
    entries = [M[..., i, j, :] * _SQRT2 for i, j in OFF_DIAGONAL]
    return np.concatenate([np.stack(diagonal, axis=-1)] + entries, axis=-1)


def hermitian_residual(M: np.ndarray) -> float:
    """Distance of M from the ⋄-hermitian matrices with scalar diagonal."""
    off = float(np.max(np.abs(M - diamond_transpose(M))))
    diagonal = float(max(np.max(np.abs(M[..., i, i, 1:])) for i in range(3)))
    return max(off, diagonal)
