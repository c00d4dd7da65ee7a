"""Unit tests for the exceptional factors C5 and h3o."""

import sys
from pathlib import Path
from unittest.mock import patch

# Add project root to Python path
sys.path.insert(0, str(Path(__file__).parent.parent))

import numpy as np
import pytest

from src.errors import BadSize, KindMismatch, NoConvergence, ZeroTripotent
from src.exceptional import (
    c5_complete_above,
    c5_completion_check,
    c5_embed,
    c5_le0,
    c5_no_unitary,
    c5_orthogonal_complement_rank,
    c5_tripotent,
    c5_triple,
    c5_triple_matrix_form,
    h3o_diagonal,
    h3o_jordan,
    h3o_jordan_direct,
    h3o_peirce_of_minimal,
    h3o_tripotent,
    h3o_triple,
    swap_coordinates,
)
from src.exceptional.c5 import OCTONIONS
from src.factors import make_factor, random_spin_tripotent
from src.triples import is_tripotent, peirce_frame, relation

EQ_TOL = 1e-9


@pytest.fixture(scope="module")
def c5():
    return make_factor("c5")


@pytest.fixture(scope="module")
def h3o():
    return make_factor("h3o")


def _minimal(space, rng):
    return c5_tripotent(space, "minimal", random_spin_tripotent(OCTONIONS, "minimal", rng))


class TestC5Product:
    """Tests for the C5 triple product."""

    def test_matrix_form(self, c5):
        """Test that the coordinate formula equals the row-matrix formula."""
        rng = np.random.default_rng(0)
        x, y, z = (c5.random_element(rng) for _ in range(3))
        assert c5_triple(x, y, z).distance(c5_triple_matrix_form(x, y, z)) <= 1e-10

    def test_swap_is_automorphism(self, c5):
        """Test that exchanging the two octonion coordinates preserves the product."""
        rng = np.random.default_rng(1)
        x, y, z = (c5.random_element(rng) for _ in range(3))
        lhs = swap_coordinates(c5_triple(x, y, z))
        rhs = c5_triple(swap_coordinates(x), swap_coordinates(y), swap_coordinates(z))
        assert lhs.distance(rhs) <= 1e-10

    def test_embedding_into_h3o(self, c5):
        """Test that the first row embedding is a triple homomorphism."""
        rng = np.random.default_rng(2)
        x, y, z = (c5.random_element(rng) for _ in range(3))
        image = c5_embed(c5_triple(x, y, z))
        assert image.distance(h3o_triple(c5_embed(x), c5_embed(y), c5_embed(z))) <= 1e-9

    def test_rejects_other_spaces(self):
        """Test that C5 helpers reject elements of other factors."""
        with pytest.raises(BadSize):
            c5_embed(make_factor("spin", (16,)).zero())


class TestC5Tripotents:
    """Tests for C5 tripotents and the <=0 dichotomy."""

    def test_peirce_ranks(self, c5):
        """Test ranks (1, 10, 5) for minimal and (8, 8, 0) for complete tripotents."""
        rng = np.random.default_rng(3)
        u = _minimal(c5, rng)
        assert is_tripotent(u)
        assert peirce_frame(u).ranks == (1, 10, 5)
        v = c5_tripotent(c5, "complete", random_spin_tripotent(OCTONIONS, "unitary", rng))
        assert peirce_frame(v).ranks == (8, 8, 0)

    def test_kind_must_match(self, c5):
        """Test that a unitary octonion cannot build a minimal C5 tripotent."""
        u = random_spin_tripotent(OCTONIONS, "unitary", np.random.default_rng(4))
        with pytest.raises(KindMismatch):
            c5_tripotent(c5, "minimal", u)

    def test_le0_branches(self, c5):
        """Test the complete, proportional and none branches against the engine."""
        rng = np.random.default_rng(5)
        u = _minimal(c5, rng)
        e, _ = c5_complete_above(u, rng)

        verdict = c5_le0(u, e)
        assert verdict.holds and verdict.branch == "complete"
        verdict = c5_le0(u * 1j, u)
        assert verdict.holds and verdict.branch == "proportional"

        v = swap_coordinates(_minimal(c5, rng))
        verdict = c5_le0(u, v, rng_seed=6)
        assert not verdict.holds and verdict.branch == "none"
        assert not relation("leq0", u, v).holds
        assert verdict.witness is not None
        assert peirce_frame(v).E0.contains(verdict.witness.coords)
        assert not peirce_frame(u).E0.contains(verdict.witness.coords)

    def test_le0_without_witness_raises(self, c5):
        """Test that a false verdict is never returned without a witness."""
        rng = np.random.default_rng(5)
        u = _minimal(c5, rng)
        v = swap_coordinates(_minimal(c5, rng))
        with patch("src.exceptional.c5.inclusion_residual", return_value=(0.0, None)) as inclusion:
            with pytest.raises(NoConvergence):
                c5_le0(u, v, rng_seed=6, max_attempts=3)
        assert inclusion.call_count == 3

    def test_le0_rejects_zero(self, c5):
        """Test that a zero argument raises ZeroTripotent."""
        u = _minimal(c5, np.random.default_rng(7))
        with pytest.raises(ZeroTripotent):
            c5_le0(c5.zero(), u)

    def test_no_unitary(self):
        """Test that sampled tripotents never have E2 = C5 while complete ones appear."""
        report = c5_no_unitary(20, 8)
        assert report.holds
        assert report.max_e2_rank <= 8
        assert report.samples == 20

    def test_completion(self, c5):
        """Test that v + w is complete with the predicted Peirce spaces."""
        rng = np.random.default_rng(9)
        v = _minimal(c5, rng)
        e, w = c5_complete_above(v, rng)
        check = c5_completion_check(v, w)
        assert check.holds, check
        assert relation("leq", v, e).holds
        rank, distance = c5_orthogonal_complement_rank(e, v)
        assert rank == 1
        assert distance <= EQ_TOL


class TestH3O:
    """Tests for the Albert algebra as a triple."""

    def test_jordan_tensor_matches_direct_product(self, h3o):
        """Test the cached Jordan tensor against octonion matrix multiplication."""
        rng = np.random.default_rng(10)
        x, y = h3o.random_element(rng), h3o.random_element(rng)
        assert h3o_jordan(x, y).distance(h3o_jordan_direct(x, y)) <= 1e-10

    def test_diagonal_idempotents(self, h3o):
        """Test that E11 ∘ E22 = 0 and the unit acts trivially."""
        e11, e22 = h3o_diagonal(h3o, [1, 0, 0]), h3o_diagonal(h3o, [0, 1, 0])
        assert h3o_jordan(e11, e22).norm2 <= EQ_TOL
        x = h3o.random_element(np.random.default_rng(11))
        assert h3o_triple(h3o.unit(), h3o.unit(), x).distance(x) <= 1e-10

    def test_model_tripotent_ranks(self, h3o):
        """Test ranks (1, 16, 10), (10, 16, 1) and (27, 0, 0)."""
        assert peirce_frame(h3o_tripotent(h3o, "minimal", 1)).ranks == (1, 16, 10)
        assert peirce_frame(h3o_tripotent(h3o, "complement", 2, phase=1j)).ranks == (10, 16, 1)
        assert peirce_frame(h3o.unit()).ranks == (27, 0, 0)

    def test_peirce_report(self):
        """Test the C5 and spin(10) identifications of the Peirce spaces of E11."""
        report = h3o_peirce_of_minimal(samples=20, rng_seed=12)
        assert report.holds(), report

    def test_bad_arguments(self, h3o):
        """Test index and kind validation of the model tripotents."""
        with pytest.raises(BadSize):
            h3o_tripotent(h3o, "minimal", 3)
        with pytest.raises(ValueError):
            h3o_tripotent(h3o, "maximal")
        with pytest.raises(BadSize):
            h3o_diagonal(h3o, [1, 0])
