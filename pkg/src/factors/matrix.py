"""Rectangular, symmetric and antisymmetric matrix triples."""

from __future__ import annotations

from typing import List, Optional, Tuple

import numpy as np

from src.errors import BadSize, InfeasibleRank
from src.numeric import DEFAULT_TOLERANCE, ToleranceConfig, op_norm, svd
from src.triples.space import Element, FactorLabel, TripleSpace

MATRIX_KINDS = ("rectangular", "symmetric", "antisymmetric")


def _matrix_basis(kind: str, m: int, n: int) -> np.ndarray:
    """Hilbert-Schmidt orthonormal basis, shape (dim, m, n).

    Rectangular: matrix units row-major. Symmetric: E_ii and
    (E_ij + E_ji)/sqrt(2) for i < j. Antisymmetric: (E_ij - E_ji)/sqrt(2).
    """
    units: List[np.ndarray] = []
    if kind == "rectangular":
        for i in range(m):
            for j in range(n):
                unit = np.zeros((m, n))
                unit[i, j] = 1.0
                units.append(unit)
    else:
        sign = 1.0 if kind == "symmetric" else -1.0
        for i in range(n):
            for j in range(i, n):
                if i == j and kind == "antisymmetric":
                    continue
                unit = np.zeros((n, n))
                if i == j:
                    unit[i, i] = 1.0
                else:
                    unit[i, j] = 1.0 / np.sqrt(2)
                    unit[j, i] = sign / np.sqrt(2)
                units.append(unit)
    return np.array(units, dtype=complex)


class MatrixFactor(TripleSpace):
    """Matrix triple with {a,b,c} = (ab*c + cb*a)/2.

    Attributes:
        kind: ``rectangular``, ``symmetric`` or ``antisymmetric``.
        shape: Matrix shape (m, n).
    """

    def __init__(self, kind: str, m: int, n: Optional[int] = None) -> None:
        if kind not in MATRIX_KINDS:
            raise BadSize(f"Unknown matrix factor kind {kind!r}")
        if kind == "rectangular":
            if n is None:
                raise BadSize("rectangular factor needs two sizes")
            if m < 1 or n < 1:
                raise BadSize(f"Sizes must be >= 1, got ({m}, {n})")
            sizes: Tuple[int, ...] = (m, n)
        else:
            if n is not None and n != m:
                raise BadSize(f"{kind} factor takes one size")
            n = m
            minimum = 2 if kind == "antisymmetric" else 1
            if m < minimum:
                raise BadSize(f"{kind} factor needs n >= {minimum}, got {m}")
            sizes = (m,)
        self.kind = kind
        self.shape = (m, n)
        self.matrix_basis = _matrix_basis(kind, m, n)
        super().__init__(self.matrix_basis.shape[0], FactorLabel(kind, sizes))

    def _to_matrices(self, x: np.ndarray) -> np.ndarray:
        return np.einsum("...d,dmn->...mn", x, self.matrix_basis)

    def _to_coords(self, X: np.ndarray) -> np.ndarray:
        return np.einsum("dmn,...mn->...d", self.matrix_basis.conj(), X)

    def _product(self, x: np.ndarray, y: np.ndarray, z: np.ndarray) -> np.ndarray:
        X, Y, Z = self._to_matrices(x), self._to_matrices(y), self._to_matrices(z)
        Ys = np.conj(np.swapaxes(Y, -1, -2))
        return self._to_coords(0.5 * (X @ Ys @ Z + Z @ Ys @ X))

    def to_matrix(self, x: Element) -> np.ndarray:
        return self._to_matrices(x.coords)

    def from_matrix(self, M: np.ndarray, tol: ToleranceConfig = DEFAULT_TOLERANCE) -> Element:
        """Element with matrix M.

        Raises:
            BadSize: If M has the wrong shape or lies outside the factor.
        """
        M = np.asarray(M, dtype=complex)
        if M.shape != self.shape:
            raise BadSize(f"{self.label} expects a {self.shape} matrix, got {M.shape}")
        coords = self._to_coords(M)
        if not tol.within(op_norm(self._to_matrices(coords) - M), op_norm(M)):
            raise BadSize(f"Matrix does not belong to {self.label}")
        return Element(self, coords)

    def norm(self, x: Element) -> float:
        return op_norm(self.to_matrix(x))

    def max_rank(self) -> int:
        """Largest admissible ``r`` for ``random_tripotent``."""
        m, n = self.shape
        return n // 2 if self.kind == "antisymmetric" else min(m, n)

    def sample_tripotent(self, rng: np.random.Generator) -> Element:
        return random_tripotent(self, int(rng.integers(1, self.max_rank() + 1)), rng)


def _gaussian(rng: np.random.Generator, shape: Tuple[int, ...]) -> np.ndarray:
    return (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2)


def random_unitary(n: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-distributed unitary from the QR decomposition of a Gaussian."""
    Q, R = np.linalg.qr(_gaussian(rng, (n, n)))
    phases = np.diag(R) / np.abs(np.diag(R))
    return Q * phases


def antisymmetric_from_pairs(F: np.ndarray, G: np.ndarray) -> np.ndarray:
    """u = v - v^t where v maps the column f_k of F to conj(g_k).

    With F and G orthonormal and mutually orthogonal, u is an antisymmetric
    partial isometry with initial projection onto span(F) + span(G).
    """
    v = G.conj() @ F.conj().T
    return v - v.T


def random_tripotent(
    factor: MatrixFactor,
    r: Optional[int],
    rng_seed=None,
) -> Element:
    """Random tripotent of a matrix factor.

    Rectangular and symmetric factors round the SVD of a random member:
    the top ``r`` singular values become 1 and the rest 0 (without ``r``,
    those at or above the median become 1). Antisymmetric factors build
    ``v - v^t`` from ``r`` pairs of orthonormal vectors, so the initial
    projection has rank ``2r``.

    Raises:
        InfeasibleRank: If ``r`` exceeds what the factor admits.
    """
    rng = np.random.default_rng(rng_seed)
    m, n = factor.shape
    if r is not None and not 0 <= r <= factor.max_rank():
        raise InfeasibleRank(
            f"Rank {r} is infeasible in {factor.label} (max {factor.max_rank()})"
        )

    if factor.kind == "antisymmetric":
        if r is None:
            r = int(rng.integers(1, factor.max_rank() + 1))
        W = random_unitary(n, rng)
        return factor.from_matrix(antisymmetric_from_pairs(W[:, :r], W[:, r : 2 * r]))

    A = _gaussian(rng, (m, n))
    if factor.kind == "symmetric":
        A = A + A.T
    U, s, V = svd(A)
    if r is None:
        r = int(np.sum(s >= np.median(s)))
    u = U[:, :r] @ V[:, :r].conj().T
    if factor.kind == "symmetric":
        u = 0.5 * (u + u.T)
    return factor.from_matrix(u)
