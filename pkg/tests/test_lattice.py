"""Unit tests for the projection lattice of M_n."""

import sys
from pathlib import Path
from unittest.mock import patch

# Add project root to Python path
sys.path.insert(0, str(Path(__file__).parent.parent))

import numpy as np
import pytest

from src.errors import AmbientMismatch, NoConvergence, NotProjection
from src.lattice import (
    complement,
    complement_laws,
    from_vectors,
    identity,
    is_common_complement,
    join,
    lattice_equal,
    lattice_leq,
    meet,
    modular_law_exact,
    modular_law_sample,
    orthomodular_sample,
    perspectivity_check,
    projection,
    property_f_sample,
    random_projection,
    random_subprojection,
    unitary_covariance_sample,
    zero,
)


def _line(*v):
    return from_vectors(np.array(v, dtype=complex)[:, None])


class TestLatticeOperations:
    """Tests for meet, join, complement and order."""

    def test_two_lines_in_the_plane(self):
        """Test that distinct lines of C^2 join to I and meet at 0."""
        p, q = _line(1, 0), _line(1, 1)
        assert lattice_equal(join(p, q), identity(2))
        assert lattice_equal(meet(p, q), zero(2))

    def test_order(self):
        """Test that a subprojection is below its parent and 0 <= p <= I."""
        rng = np.random.default_rng(0)
        g = random_projection(4, 3, rng)
        e = random_subprojection(g, 2, rng)
        assert e.rank == 2
        assert lattice_leq(e, g)
        assert not lattice_leq(g, e)
        assert lattice_leq(zero(4), e) and lattice_leq(e, identity(4))

    def test_complement(self):
        """Test that the orthocomplement of a line in C^3 is a plane orthogonal to it."""
        p = _line(1, 1j, 0)
        c = complement(p)
        assert c.rank == 2
        assert np.allclose(p.p @ c.p, 0)
        assert lattice_equal(complement(c), p)
        assert complement_laws(p)

    def test_projection_validation(self):
        """Test that projection() rejects non-projections and mixing sizes fails."""
        with pytest.raises(NotProjection):
            projection(np.array([[1.0, 1.0], [0.0, 0.0]]))
        with pytest.raises(AmbientMismatch):
            join(identity(2), identity(3))

    def test_empty_family_needs_size(self):
        """Test from_vectors on an empty family."""
        assert from_vectors(np.zeros((3, 0)), n=3).rank == 0
        with pytest.raises(ValueError):
            from_vectors(np.zeros((3, 0)))

    def test_conjugation(self):
        """Test that U p U* keeps the rank and moves the range."""
        rng = np.random.default_rng(1)
        p = random_projection(3, 1, rng)
        U = np.array([[0, 1, 0], [1, 0, 0], [0, 0, 1]], dtype=complex)
        moved = p.conjugate(U)
        assert moved.rank == 1
        assert np.allclose(moved.p, U @ p.p @ U.conj().T)


class TestLatticeLaws:
    """Tests for the sampled laws of a finite factor."""

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_modular_law(self, n):
        """Test (e ∨ f) ∧ g = e ∨ (f ∧ g) for e <= g on random projections."""
        report = modular_law_sample(n, 100, n)
        assert report.holds, report.witness
        assert report.trials == 100
        assert report.hits > 0
        assert report.max_residual <= 1e-8

    def test_modular_law_exact(self):
        """Test the modular law in rational arithmetic with zero residual."""
        report = modular_law_exact(3, 15, 0)
        assert report.holds, report.witness
        assert report.max_residual == 0.0

    @pytest.mark.parametrize("law", [modular_law_sample, modular_law_exact])
    def test_modular_law_needs_n_at_least_two(self, law):
        """Test that n = 1 is rejected."""
        with pytest.raises(ValueError):
            law(1, 1, 0)

    def test_orthomodular(self):
        """Test r = p ∨ (r ∧ p⊥) for p <= r."""
        assert orthomodular_sample(4, 50, 2).holds

    def test_property_f(self):
        """Test that an equal-rank subprojection is the projection itself."""
        report = property_f_sample(4, 50, 3)
        assert report.holds
        assert report.hits > 0

    def test_unitary_covariance(self):
        """Test that conjugation commutes with the lattice operations."""
        assert unitary_covariance_sample(3, 30, 4).holds


class TestPerspectivity:
    """Tests for perspectivity of projections."""

    def test_equal_rank_projections_are_perspective(self):
        """Test that a common complement is exhibited for equal ranks."""
        rng = np.random.default_rng(5)
        p, q = random_projection(4, 2, rng), random_projection(4, 2, rng)
        verdict = perspectivity_check(p, q, 6)
        assert verdict.holds
        assert is_common_complement(p, q, verdict.witness)

    def test_equal_projections(self):
        """Test that p is perspective to itself through I - p."""
        p = _line(1, 0, 0)
        verdict = perspectivity_check(p, p)
        assert verdict.holds
        assert lattice_equal(verdict.witness, complement(p))

    def test_different_ranks(self):
        """Test that projections of different rank are not perspective."""
        p = np.diag([1.0, 0.0, 0.0])
        q = np.diag([1.0, 1.0, 0.0])
        verdict = perspectivity_check(p, q)
        assert not verdict.holds
        assert verdict.witness is None

    def test_missing_complement_raises(self):
        """Test that equal ranks without a found complement raise NoConvergence."""
        rng = np.random.default_rng(5)
        p, q = random_projection(4, 2, rng), random_projection(4, 2, rng)
        with patch("src.lattice.modularity.is_common_complement", return_value=False) as common:
            with pytest.raises(NoConvergence):
                perspectivity_check(p, q, 6, attempts=4)
        assert common.call_count == 4
