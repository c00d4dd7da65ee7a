"""Unit tests for the numeric core: tolerances, spectra, subspaces."""

import sys
from pathlib import Path

# Add project root to Python path
sys.path.insert(0, str(Path(__file__).parent.parent))

import numpy as np
import pytest

from src.errors import AmbientMismatch, ConfigError, NotHermitian, NotSquare, PeirceSpectrumError
from src.numeric import (
    DEFAULT_TOLERANCE,
    Subspace,
    ToleranceConfig,
    cluster_spectrum,
    hermitian_eig,
    is_projection,
    matrix_rank,
    op_norm,
    orthogonal_complement,
    projection_leq,
    subspace_equal,
    subspace_intersection,
    subspace_leq,
    subspace_sum,
)


def _span(*vectors):
    return Subspace.from_columns(np.array(vectors, dtype=complex).T)


class TestToleranceConfig:
    """Tests for ToleranceConfig."""

    def test_defaults(self):
        """Test that the default tolerances are the documented ones."""
        assert DEFAULT_TOLERANCE.eq_tol == 1e-9
        assert DEFAULT_TOLERANCE.rank_tol == 1e-8
        assert DEFAULT_TOLERANCE.eig_cluster_tol == 1e-6

    @pytest.mark.parametrize("field", ["eq_tol", "rank_tol", "eig_cluster_tol"])
    def test_rejects_non_positive(self, field):
        """Test that zero or negative tolerances raise ConfigError."""
        with pytest.raises(ConfigError):
            ToleranceConfig(**{field: 0.0})
        with pytest.raises(ConfigError):
            ToleranceConfig(**{field: -1e-3})

    def test_rejects_eq_tol_of_one(self):
        """Test that eq_tol must stay below 1."""
        with pytest.raises(ConfigError):
            ToleranceConfig(eq_tol=1.0)

    def test_config_error_is_value_error(self):
        """Test that ConfigError can be caught as ValueError."""
        with pytest.raises(ValueError):
            ToleranceConfig(rank_tol=0.0)

    def test_with_overrides_keeps_unset_fields(self):
        """Test that None leaves a field untouched."""
        tol = DEFAULT_TOLERANCE.with_overrides(eq_tol=1e-6)
        assert tol.eq_tol == 1e-6
        assert tol.rank_tol == DEFAULT_TOLERANCE.rank_tol
        assert DEFAULT_TOLERANCE.with_overrides() is DEFAULT_TOLERANCE

    def test_scaled_normalizes_by_largest_norm(self):
        """Test that residuals are divided by max(1, norms)."""
        assert ToleranceConfig.scaled(2.0) == 2.0
        assert ToleranceConfig.scaled(2.0, 0.5) == 2.0
        assert ToleranceConfig.scaled(2.0, 4.0, 8.0) == 0.25

    def test_within_uses_scaled_residual(self):
        """Test that a large residual is acceptable for large data."""
        tol = ToleranceConfig(eq_tol=1e-3)
        assert tol.within(5e-4)
        assert not tol.within(5e-3)
        assert tol.within(5e-3, 10.0)


class TestSpectra:
    """Tests for Hermitian eigen-decomposition and Peirce clustering."""

    def test_hermitian_eig_sorted_and_unitary(self):
        """Test that eigenvalues ascend and eigenvectors are orthonormal."""
        rng = np.random.default_rng(0)
        A = rng.normal(size=(5, 5)) + 1j * rng.normal(size=(5, 5))
        H = A + A.conj().T
        values, vectors = hermitian_eig(H)
        assert np.all(np.diff(values) >= 0)
        assert np.allclose(vectors.conj().T @ vectors, np.eye(5))
        assert np.allclose(vectors @ np.diag(values) @ vectors.conj().T, H)

    def test_hermitian_eig_rejects_non_hermitian(self):
        """Test that an asymmetric matrix raises NotHermitian with its residual."""
        with pytest.raises(NotHermitian) as exc_info:
            hermitian_eig(np.array([[0.0, 1.0], [0.0, 0.0]]))
        assert exc_info.value.residual == pytest.approx(1.0)

    def test_hermitian_eig_rejects_non_square(self):
        """Test that a rectangular matrix raises NotSquare."""
        with pytest.raises(NotSquare):
            hermitian_eig(np.zeros((2, 3)))

    def test_cluster_spectrum_snaps(self):
        """Test that eigenvalues close to 0, 1/2, 1 are snapped."""
        labels, residual = cluster_spectrum(np.array([1e-9, 0.5 + 2e-8, 1.0 - 1e-7]))
        assert labels.tolist() == [0.0, 0.5, 1.0]
        assert residual == pytest.approx(1e-7)

    def test_cluster_spectrum_rejects_stray_eigenvalue(self):
        """Test that an eigenvalue at 0.25 is a hard failure."""
        with pytest.raises(PeirceSpectrumError) as exc_info:
            cluster_spectrum(np.array([0.0, 0.25]))
        assert exc_info.value.residual == pytest.approx(0.25)

    def test_cluster_spectrum_empty(self):
        """Test that an empty spectrum clusters trivially."""
        labels, residual = cluster_spectrum(np.array([]))
        assert labels.size == 0
        assert residual == 0.0


class TestMatrices:
    """Tests for norms, ranks and projections."""

    def test_op_norm(self):
        """Test that op_norm is the largest singular value."""
        assert op_norm(np.diag([3.0, -4.0])) == pytest.approx(4.0)
        assert op_norm(np.zeros((0, 3))) == 0.0

    def test_matrix_rank(self):
        """Test that singular values below rank_tol do not count."""
        M = np.diag([1.0, 1e-3, 1e-12])
        assert matrix_rank(M) == 2
        assert matrix_rank(M, ToleranceConfig(rank_tol=1e-2)) == 1

    def test_is_projection(self):
        """Test that only Hermitian idempotents are projections."""
        assert is_projection(np.diag([1.0, 0.0]))
        assert is_projection(0.5 * np.ones((2, 2)))
        assert not is_projection(np.array([[1.0, 1.0], [0.0, 0.0]]))
        assert not is_projection(np.diag([2.0, 0.0]))

    def test_projection_leq(self):
        """Test that p <= q iff ran p is inside ran q."""
        p = np.diag([1.0, 0.0, 0.0])
        q = np.diag([1.0, 1.0, 0.0])
        assert projection_leq(p, q)
        assert not projection_leq(q, p)


class TestSubspace:
    """Tests for Subspace and its lattice operations."""

    def test_from_columns_drops_dependent_columns(self):
        """Test that the rank counts independent columns."""
        S = _span([1, 0, 0], [2, 0, 0], [0, 1, 0])
        assert S.rank == 2
        assert np.allclose(S.basis.conj().T @ S.basis, np.eye(2))

    def test_contains(self):
        """Test that membership is decided relative to the vector norm."""
        S = _span([1, 1, 0])
        assert S.contains(np.array([3, 3, 0]))
        assert not S.contains(np.array([1, 0, 0]))

    def test_projector_round_trip(self):
        """Test that from_projector recovers the subspace."""
        S = _span([1, 1j, 0], [0, 0, 1])
        assert subspace_equal(Subspace.from_projector(S.projector()), S)

    def test_sum_and_intersection(self):
        """Test that two planes in C^3 meet in a line and span everything."""
        A = _span([1, 0, 0], [0, 1, 0])
        B = _span([0, 1, 0], [0, 0, 1])
        assert subspace_sum(A, B).rank == 3
        meet = subspace_intersection(A, B)
        assert meet.rank == 1
        assert meet.contains(np.array([0, 1, 0]))

    def test_intersection_with_zero(self):
        """Test that meeting the zero subspace gives zero."""
        assert subspace_intersection(_span([1, 0]), Subspace.zero(2)).rank == 0

    def test_leq_and_equal(self):
        """Test inclusion and equality of subspaces."""
        line = _span([1, 1, 0])
        plane = _span([1, 0, 0], [0, 1, 0])
        assert subspace_leq(line, plane)
        assert not subspace_leq(plane, line)
        assert not subspace_equal(line, plane)
        assert subspace_equal(plane, _span([1, 1, 0], [1, -1, 0]))

    def test_orthogonal_complement(self):
        """Test complements of proper, zero and full subspaces."""
        line = _span([1, 1j, 0])
        comp = orthogonal_complement(line)
        assert comp.rank == 2
        assert np.allclose(line.basis.conj().T @ comp.basis, 0)
        assert orthogonal_complement(Subspace.zero(3)).rank == 3
        assert orthogonal_complement(Subspace.full(3)).rank == 0

    def test_ambient_mismatch(self):
        """Test that subspaces of different ambient spaces cannot be combined."""
        with pytest.raises(AmbientMismatch):
            subspace_sum(Subspace.full(2), Subspace.full(3))
