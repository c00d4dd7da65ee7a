"""Unit tests for the triple engine: products, Peirce frames, relations, tripotents."""

import sys
from pathlib import Path

# Add project root to Python path
sys.path.insert(0, str(Path(__file__).parent.parent))

from unittest.mock import patch

import numpy as np
import pytest

from src.errors import BadSize, IterationStall, NoConvergence, NotTripotent, SpaceMismatch
from src.factors import make_factor, parse_factor_spec
from src.numeric import Subspace
from src.triples import (
    DirectSum,
    Element,
    classify_tripotent,
    extend_to_complete,
    is_finite_tripotent_sampled,
    is_tripotent,
    jordan_at,
    order_characterizations,
    orthogonality_characterizations,
    peirce_arithmetic_residuals,
    peirce_frame,
    random_tripotent_in,
    range_tripotent_approx,
    relation,
    subtriple,
    triple_axiom_residuals,
    tripotent_in_subspace,
)

EQ_TOL = 1e-9


@pytest.fixture
def m2():
    return make_factor("rectangular", (2, 2))


def _mat(space, rows):
    return space.from_matrix(np.array(rows, dtype=complex))


class TestTripleProduct:
    """Tests for the triple product and the axioms."""

    @pytest.mark.parametrize("spec", ["rectangular:2,3", "symmetric:3", "antisymmetric:4", "spin:4", "c5"])
    def test_axioms_hold(self, spec):
        """Test that the JB*-triple axioms hold on random samples."""
        space = parse_factor_spec(spec)
        rng = np.random.default_rng(1)
        for _ in range(5):
            residuals = triple_axiom_residuals(space, rng)
            assert max(residuals.values()) <= EQ_TOL, residuals

    def test_matrix_product_formula(self, m2):
        """Test that {a,b,c} = (ab*c + cb*a)/2 in M2."""
        rng = np.random.default_rng(2)
        a, b, c = (m2.random_element(rng) for _ in range(3))
        A, B, C = (m2.to_matrix(x) for x in (a, b, c))
        expected = 0.5 * (A @ B.conj().T @ C + C @ B.conj().T @ A)
        assert np.allclose(m2.to_matrix(m2.triple(a, b, c)), expected)

    def test_mixing_spaces_fails(self, m2):
        """Test that elements of different spaces cannot be combined."""
        other = make_factor("spin", (4,))
        with pytest.raises(SpaceMismatch):
            m2.triple(m2.zero(), other.zero(), m2.zero())

    def test_wrong_coordinate_count(self, m2):
        """Test that an element needs exactly dim coordinates."""
        with pytest.raises(BadSize):
            Element(m2, np.zeros(3))

    def test_matrix_norm_is_operator_norm(self, m2):
        """Test that the triple norm of a matrix is its spectral norm."""
        x = _mat(m2, [[3, 0], [0, 1]])
        assert x.norm == pytest.approx(3.0)


class TestPeirceFrame:
    """Tests for Peirce projections and ranks."""

    def test_matrix_unit_ranks(self, m2):
        """Test that E11 in M2 has Peirce ranks (1, 2, 1)."""
        frame = peirce_frame(_mat(m2, [[1, 0], [0, 0]]))
        assert frame.ranks == (1, 2, 1)

    def test_identity_is_unitary(self, m2):
        """Test that the identity of M2 has E2 = M2."""
        assert peirce_frame(_mat(m2, [[1, 0], [0, 1]])).ranks == (4, 0, 0)

    def test_frame_identities(self):
        """Test partition of unity, annihilation and P2 = Q(u)^2 on a random tripotent."""
        space = make_factor("rectangular", (3, 2))
        u = random_tripotent_in(space, np.random.default_rng(3))
        frame = peirce_frame(u)
        assert max(frame.identity_residuals().values()) <= EQ_TOL
        assert frame.spectrum_residual <= 1e-6

    def test_rejects_non_tripotent(self, m2):
        """Test that the frame of a non-tripotent raises NotTripotent."""
        with pytest.raises(NotTripotent):
            peirce_frame(_mat(m2, [[2, 0], [0, 0]]))

    def test_peirce_arithmetic(self):
        """Test the Peirce multiplication rules for a minimal tripotent of M_{2,3}."""
        space = make_factor("rectangular", (2, 3))
        u = random_tripotent_in(space, np.random.default_rng(4))
        residuals = peirce_arithmetic_residuals(u, np.random.default_rng(5))
        assert residuals
        assert max(residuals.values()) <= EQ_TOL


class TestRelations:
    """Tests for the tripotent relations."""

    def test_subtripotent_of_identity(self, m2):
        """Test that E11 <= I, hence E11 <=2 I and E11 <=0 I."""
        u, e = _mat(m2, [[1, 0], [0, 0]]), _mat(m2, [[1, 0], [0, 1]])
        for kind in ("leq", "leq2", "leq0"):
            assert relation(kind, u, e).holds
        assert not relation("leq", e, u).holds

    def test_orthogonal_matrix_units(self, m2):
        """Test that E11 and E22 are orthogonal and every description agrees."""
        u, e = _mat(m2, [[1, 0], [0, 0]]), _mat(m2, [[0, 0], [0, 1]])
        assert relation("perp", u, e).holds
        assert max(orthogonality_characterizations(u, e).values()) <= EQ_TOL
        assert not relation("perp", u, u).holds

    def test_perp_cross_check_agrees(self, m2):
        """Test that u ± e are tripotents exactly when u and e are orthogonal."""
        u = _mat(m2, [[1, 0], [0, 0]])
        orthogonal = relation("perp", u, _mat(m2, [[0, 0], [0, 1j]]))
        assert orthogonal.holds
        assert orthogonal.cross_residual <= EQ_TOL

        overlapping = relation("perp", u, _mat(m2, [[0, 1], [0, 0]]))
        assert not overlapping.holds
        assert overlapping.cross_residual > 0.1

    def test_minus_one_below_one_only_in_peirce2(self):
        """Test that -1 <=2 1 in C while -1 <= 1 fails."""
        c = make_factor("rectangular", (1, 1))
        u, e = c.element([-1.0]), c.element([1.0])
        assert not relation("leq", u, e).holds
        assert relation("leq2", u, e).holds
        assert relation("leq0", u, e).holds

    def test_complete_rows_are_leq0_but_not_leq2(self):
        """Test that (0,1) <=0 (1,0) in M_{1,2} while (0,1) <=2 (1,0) fails."""
        row = make_factor("rectangular", (1, 2))
        u, e = row.element([0.0, 1.0]), row.element([1.0, 0.0])
        assert relation("leq0", u, e).holds
        verdict = relation("leq2", u, e)
        assert not verdict.holds
        assert verdict.witness is not None

    def test_phase_multiple_is_sim2(self, m2):
        """Test that u and iu have the same Peirce-2 space."""
        u = random_tripotent_in(m2, np.random.default_rng(6))
        assert relation("sim2", u, u * 1j).holds
        assert relation("sim0", u, u * 1j).holds

    def test_order_characterizations(self, m2):
        """Test that u <= u + w for w in E0(u) satisfies every description."""
        u, w = _mat(m2, [[1, 0], [0, 0]]), _mat(m2, [[0, 0], [0, 1j]])
        residuals = order_characterizations(u, u + w)
        assert len(residuals) == 8
        assert max(residuals.values()) <= EQ_TOL

    def test_unknown_kind(self, m2):
        """Test that an unknown relation kind raises ValueError."""
        u = _mat(m2, [[1, 0], [0, 0]])
        with pytest.raises(ValueError):
            relation("below", u, u)

    def test_requires_tripotents(self, m2):
        """Test that relations between non-tripotents raise NotTripotent."""
        u = _mat(m2, [[1, 0], [0, 0]])
        with pytest.raises(NotTripotent):
            relation("leq", u * 2, u)


class TestTripotents:
    """Tests for tripotent construction and classification."""

    def test_is_tripotent(self, m2):
        """Test the tripotent test on a partial isometry and its double."""
        u = _mat(m2, [[0, 1], [0, 0]])
        assert is_tripotent(u)
        check = is_tripotent(u * 2)
        assert not check
        assert check.residual == pytest.approx(6.0)

    def test_range_tripotent_keeps_top_part(self, m2):
        """Test that rounding diag(3, 1) gives E11."""
        u = range_tripotent_approx(_mat(m2, [[3, 0], [0, 1]]))
        assert u.distance(_mat(m2, [[1, 0], [0, 0]])) <= 1e-8

    def test_range_tripotent_of_zero(self, m2):
        """Test that the zero element has no range tripotent."""
        with pytest.raises(NoConvergence):
            range_tripotent_approx(m2.zero())

    def test_range_tripotent_rejects_ties(self, m2):
        """Test that a tied top singular level raises NoConvergence."""
        with pytest.raises(NoConvergence):
            range_tripotent_approx(_mat(m2, [[3, 0], [0, 3 - 1e-9]]))
        with pytest.raises(NoConvergence):
            range_tripotent_approx(_mat(m2, [[2, 0], [0, 2]]))

    def test_subspace_search_attempt_budget(self, m2):
        """Test that a failing search draws exactly max_attempts times."""
        stalled = NoConvergence("stalled")
        with patch("src.triples.tripotents.range_tripotent_approx", side_effect=stalled) as rounding:
            with pytest.raises(NoConvergence):
                tripotent_in_subspace(m2, Subspace.full(4), rng=np.random.default_rng(0), max_attempts=3)
        assert rounding.call_count == 3

    def test_completion_attempt_budget(self, m2):
        """Test that completion passes its attempt budget to the E0 search."""
        stalled = NoConvergence("stalled")
        with patch("src.triples.tripotents.range_tripotent_approx", side_effect=stalled) as rounding:
            with pytest.raises(IterationStall):
                extend_to_complete(_mat(m2, [[1, 0], [0, 0]]), 0, max_attempts=2)
        assert rounding.call_count == 2

    @pytest.mark.parametrize("spec", ["rectangular:2,3", "antisymmetric:5", "spin:5", "h3o"])
    def test_extend_to_complete(self, spec):
        """Test that completion gives a complete tripotent above u."""
        space = parse_factor_spec(spec)
        rng = np.random.default_rng(7)
        u = random_tripotent_in(space, rng)
        v = extend_to_complete(u, rng)
        assert peirce_frame(v).E0.rank == 0
        assert relation("leq", u, v).holds

    def test_random_tripotent_within(self):
        """Test that sampling inside E2(e) gives u <=2 e."""
        space = make_factor("rectangular", (3, 3))
        rng = np.random.default_rng(8)
        e = random_tripotent_in(space, rng)
        u = random_tripotent_in(space, rng, within=e)
        assert is_tripotent(u)
        assert relation("leq2", u, e).holds

    def test_classify_known_tripotents(self):
        """Test the flags of the identity and a matrix unit of M3."""
        m3 = make_factor("rectangular", (3, 3))
        identity = classify_tripotent(m3.from_matrix(np.eye(3)))
        assert identity.complete and identity.unitary
        assert not identity.minimal and not identity.abelian
        unit = classify_tripotent(m3.from_matrix(np.diag([1.0, 0.0, 0.0])))
        assert unit.minimal and unit.abelian and not unit.complete
        assert unit.peirce_ranks == (1, 4, 4)

    def test_matrix_tripotents_are_finite(self):
        """Test that completions inside E2(e) of M_{2,3} are unitary there."""
        space = make_factor("rectangular", (2, 3))
        rng = np.random.default_rng(9)
        e = random_tripotent_in(space, rng)
        report = is_finite_tripotent_sampled(e, trials=5, seed=10)
        assert report.holds
        assert report.trials == 5


class TestSpaces:
    """Tests for subtriples, direct sums and the Peirce-2 Jordan algebra."""

    def test_first_row_subtriple(self, m2):
        """Test that the first row of M2 is a subtriple with intrinsic products."""
        sub = subtriple(m2, np.eye(4)[:, :2], "first_row")
        assert sub.closure_residual() <= EQ_TOL
        rng = np.random.default_rng(11)
        x, y, z = (sub.random_element(rng) for _ in range(3))
        lifted = m2.triple(sub.lift(x), sub.lift(y), sub.lift(z))
        assert sub.lift(sub.triple(x, y, z)).distance(lifted) <= EQ_TOL

    def test_non_closed_span(self, m2):
        """Test that span{E11, (E12 + E21)/sqrt 2} is rejected."""
        basis = np.zeros((4, 2))
        basis[0, 0] = 1.0
        basis[1, 1] = basis[2, 1] = 1 / np.sqrt(2)
        with pytest.raises(BadSize):
            subtriple(m2, basis)

    def test_direct_sum(self):
        """Test dimensions, components and the max norm of a direct sum."""
        space = parse_factor_spec("spin:3+symmetric:2")
        assert isinstance(space, DirectSum)
        assert space.dim == 6
        x = space.random_element(np.random.default_rng(12))
        parts = space.components(x)
        assert [p.space.dim for p in parts] == [3, 3]
        assert space.norm(x) == pytest.approx(max(p.norm for p in parts))
        assert space.combine(parts).distance(x) == 0.0

    def test_jordan_product_at_identity(self, m2):
        """Test that E2(I) of M2 is M2 with the symmetrized product."""
        J = jordan_at(_mat(m2, [[1, 0], [0, 1]]))
        rng = np.random.default_rng(13)
        x, y = m2.random_element(rng), m2.random_element(rng)
        X, Y = m2.to_matrix(x), m2.to_matrix(y)
        assert np.allclose(m2.to_matrix(J.product(x, y)), 0.5 * (X @ Y + Y @ X))
        assert np.allclose(m2.to_matrix(J.involution(x)), X.conj().T)
        assert J.is_projection(_mat(m2, [[1, 0], [0, 0]]))
