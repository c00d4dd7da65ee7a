"""Unit tests for the Cayley-Dickson ladder."""

import sys
from pathlib import Path

# Add project root to Python path
sys.path.insert(0, str(Path(__file__).parent.parent))

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.cayley_dickson import (
    MAX_LEVEL,
    as_spin,
    cd_basis,
    cd_inner,
    cd_unit,
    diamond,
    embed,
    expected_identities,
    from_element,
    identity_suite,
    iso_A1_to_C2,
    iso_A2_to_M2,
    iso_M2_to_A2,
    random_cd,
    star,
    to_element,
)
from src.errors import BadSize, LevelMismatch

seeds = st.integers(min_value=0, max_value=2**32 - 1)
levels = st.integers(min_value=0, max_value=MAX_LEVEL)


class TestAlgebra:
    """Tests for the doubling product and the involutions."""

    @pytest.mark.parametrize("level", [1, 2, 3])
    def test_imaginary_units_square_to_minus_one(self, level):
        """Test that e_k ⊡ e_k = -e_1 for k > 1."""
        one = cd_unit(level)
        for k in range(2, 2**level + 1):
            e = cd_basis(level, k)
            assert (e @ e).distance(-one) == 0.0

    def test_quaternion_units(self):
        """Test e3 ⊡ e2 = e4 = -(e2 ⊡ e3) at level 2."""
        e2, e3, e4 = (cd_basis(2, k) for k in (2, 3, 4))
        assert (e3 @ e2).distance(e4) == 0.0
        assert (e2 @ e3).distance(-e4) == 0.0

    @settings(max_examples=25, deadline=None)
    @given(level=levels, seed=seeds)
    def test_unit_and_involutions(self, level, seed):
        """Test that the unit is two-sided and star, diamond are involutions."""
        x = random_cd(level, np.random.default_rng(seed))
        one = cd_unit(level)
        assert (one @ x).distance(x) <= 1e-12
        assert (x @ one).distance(x) <= 1e-12
        assert star(star(x)).distance(x) == 0.0
        assert diamond(diamond(x)).distance(x) == 0.0

    @settings(max_examples=25, deadline=None)
    @given(level=levels, seed=seeds)
    def test_diamond_reverses_products(self, level, seed):
        """Test (xy)⋄ = y⋄ x⋄."""
        rng = np.random.default_rng(seed)
        x, y = random_cd(level, rng), random_cd(level, rng)
        assert diamond(x @ y).distance(diamond(y) @ diamond(x)) <= 1e-10

    @settings(max_examples=25, deadline=None)
    @given(level=st.integers(min_value=0, max_value=MAX_LEVEL - 1), seed=seeds)
    def test_embedding_is_multiplicative(self, level, seed):
        """Test that x ↦ (x, 0) is a *-homomorphism into the next level."""
        rng = np.random.default_rng(seed)
        x, y = random_cd(level, rng), random_cd(level, rng)
        assert embed(x @ y).distance(embed(x) @ embed(y)) <= 1e-10
        assert embed(star(x)).distance(star(embed(x))) == 0.0

    def test_inner_product_is_linear_in_first(self):
        """Test <αx, y> = α<x, y>."""
        rng = np.random.default_rng(0)
        x, y = random_cd(3, rng), random_cd(3, rng)
        assert cd_inner(x * 2j, y) == pytest.approx(2j * cd_inner(x, y))

    def test_level_errors(self):
        """Test level validation and mixed-level products."""
        with pytest.raises(BadSize):
            cd_basis(2, 5)
        with pytest.raises(BadSize):
            embed(cd_unit(MAX_LEVEL))
        with pytest.raises(LevelMismatch):
            cd_unit(1) @ cd_unit(2)


class TestIdentitySuite:
    """Tests for the identity suite along the ladder."""

    def test_expected_table(self):
        """Test that commutativity stops at level 1 and associativity at level 2."""
        assert expected_identities(1)["commutativity"]
        assert not expected_identities(2)["commutativity"]
        assert expected_identities(2)["associativity"]
        assert not expected_identities(3)["associativity"]

    @pytest.mark.parametrize("level", range(MAX_LEVEL + 1))
    def test_every_expectation_is_met(self, level):
        """Test that identities hold or fail exactly as expected."""
        report = identity_suite(level, samples=200, rng_seed=level)
        assert report.all_met(), report.failures()
        assert report.max_residual <= 1e-9

    def test_octonions_are_alternative_not_associative(self):
        """Test that the octonion violation carries a witness."""
        report = identity_suite(3, samples=50, rng_seed=1)
        assert report.checks["alternativity"].holds()
        associativity = report.checks["associativity"]
        assert associativity.residual > 1e-6
        assert set(associativity.witness) == {"x", "y", "z"}

    def test_bad_level(self):
        """Test that level 4 is rejected."""
        with pytest.raises(BadSize):
            identity_suite(4, samples=1)


class TestIsomorphisms:
    """Tests for A1 = C ⊕ C, A2 = M2 and the spin-factor view."""

    @settings(max_examples=25, deadline=None)
    @given(seed=seeds)
    def test_biquaternions_as_matrices(self, seed):
        """Test that the M2 map is multiplicative and sends star to the adjoint."""
        rng = np.random.default_rng(seed)
        x, y = random_cd(2, rng), random_cd(2, rng)
        X, Y = iso_A2_to_M2(x), iso_A2_to_M2(y)
        assert np.allclose(iso_A2_to_M2(x @ y), X @ Y)
        assert np.allclose(iso_A2_to_M2(star(x)), X.conj().T)
        assert iso_M2_to_A2(X).distance(x) <= 1e-12

    def test_unit_goes_to_identity(self):
        """Test that e1 maps to the 2x2 identity."""
        assert np.allclose(iso_A2_to_M2(cd_unit(2)), np.eye(2))

    def test_level_one_splits(self):
        """Test that A1 is C ⊕ C with componentwise product."""
        rng = np.random.default_rng(2)
        x, y = random_cd(1, rng), random_cd(1, rng)
        xs, ys, ps = iso_A1_to_C2(x), iso_A1_to_C2(y), iso_A1_to_C2(x @ y)
        assert ps[0] == pytest.approx(xs[0] * ys[0])
        assert ps[1] == pytest.approx(xs[1] * ys[1])
        with pytest.raises(LevelMismatch):
            iso_A1_to_C2(cd_unit(2))

    def test_spin_view(self):
        """Test that A_n is the spin factor of dimension 2^n."""
        assert as_spin(3).dim == 8
        x = random_cd(3, np.random.default_rng(3))
        assert from_element(to_element(x)).distance(x) == 0.0
        assert to_element(x).space is as_spin(3)
