"""1 x 2 complex-octonion matrices as a JB*-triple (dim 16)."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional, Tuple, Union

import numpy as np

from src.cayley_dickson.algebra import multiply_array, star_array
from src.cayley_dickson.isomorphisms import as_spin
from src.errors import BadSize, KindMismatch, NoConvergence, NotTripotent, ZeroTripotent
from src.exceptional.h3o import c5_to_h3o
from src.factors.registry import make_factor
from src.factors.spin import classify_spin_tripotent, random_spin_tripotent
from src.numeric import (
    DEFAULT_TOLERANCE,
    Subspace,
    ToleranceConfig,
    inclusion_residual,
    subspace_equal,
    subspace_intersection,
    subspace_sum,
)
from src.triples.operators import is_tripotent
from src.triples.peirce import peirce_frame
from src.triples.space import Element, FactorLabel, TripleSpace
from src.triples.tripotents import DEFAULT_ATTEMPTS, range_tripotent_approx, tripotent_in_subspace
from src.utils.logger import get_logger, log_event

logger = get_logger("exceptional.c5")

OCTONIONS = as_spin(3)


def _spin_triple(a: np.ndarray, b: np.ndarray, c: np.ndarray) -> np.ndarray:
    return OCTONIONS.product_array(a, b, c)


class C5(TripleSpace):
    """(x1, x2) with the coordinatewise-spin formula plus octonion cross terms.

    {x,y,z} = ({x1,y1,z1} + (z2⊡(y2*⊡x1) + x2⊡(y2*⊡z1))/2,
               {x2,y2,z2} + (z1⊡(y1*⊡x2) + x1⊡(y1*⊡z2))/2)
    """

    def __init__(self) -> None:
        super().__init__(16, FactorLabel("c5"))

    def _product(self, x: np.ndarray, y: np.ndarray, z: np.ndarray) -> np.ndarray:
        m = multiply_array
        x1, x2 = x[..., :8], x[..., 8:]
        y1s, y2s = star_array(y[..., :8]), star_array(y[..., 8:])
        z1, z2 = z[..., :8], z[..., 8:]
        first = _spin_triple(x1, y[..., :8], z1) + 0.5 * (m(z2, m(y2s, x1)) + m(x2, m(y2s, z1)))
        second = _spin_triple(x2, y[..., 8:], z2) + 0.5 * (m(z1, m(y1s, x2)) + m(x1, m(y1s, z2)))
        return np.concatenate(np.broadcast_arrays(first, second), axis=-1)

    def sample_tripotent(self, rng: np.random.Generator) -> Element:
        """Model tripotents in either coordinate, their sums, or rounded random elements."""
        # 0: minimal, 1: complete, 2: minimal plus a tripotent of its E0, 3: rounded
        choice = int(rng.integers(4))
        if choice == 3:
            try:
                return range_tripotent_approx(self.random_element(rng))
            except NoConvergence:
                choice = 0
        if choice == 1:
            u = c5_tripotent(self, "complete", random_spin_tripotent(OCTONIONS, "unitary", rng))
        else:
            u = c5_tripotent(self, "minimal", random_spin_tripotent(OCTONIONS, "minimal", rng))
        if rng.random() < 0.5:
            u = swap_coordinates(u)
        if choice == 2:
            u, _ = c5_complete_above(u, rng)
        return u


def c5_triple(x: Element, y: Element, z: Element) -> Element:
    return _c5_space(x).triple(x, y, z)


def c5_triple_matrix_form(x: Element, y: Element, z: Element) -> Element:
    """(x⊡(y*⊡z) + z⊡(y*⊡x))/2 with x, z rows and y* a column."""
    m = multiply_array
    X, Y, Z = (v.coords.reshape(2, 8) for v in (x, y, z))
    Ys = star_array(Y)

    def row_product(A: np.ndarray, C: np.ndarray) -> np.ndarray:
        # (A ⊡ (Y* ⊡ C))_j = Σ_i A_i ⊡ (Y_i* ⊡ C_j)
        return np.stack([sum(m(A[i], m(Ys[i], C[j])) for i in range(2)) for j in range(2)])

    return Element(_c5_space(x), (0.5 * (row_product(X, Z) + row_product(Z, X))).reshape(-1))


def _c5_space(x: Element) -> C5:
    if not isinstance(x.space, C5):
        raise BadSize(f"{x.space.label} is not c5")
    return x.space


def swap_coordinates(x: Element) -> Element:
    """(x1, x2) ↦ (x2, x1), a triple automorphism."""
    return Element(x.space, np.concatenate([x.coords[8:], x.coords[:8]]))


def c5_embed(x: Element) -> Element:
    """Image of x in h3o (the Peirce-1 space of E11)."""
    _c5_space(x)
    return c5_to_h3o(make_factor("h3o"), x.coords)


def c5_tripotent(
    space: C5,
    kind: str,
    u: Union[Element, np.ndarray],
    tol: ToleranceConfig = DEFAULT_TOLERANCE,
) -> Element:
    """(u, 0) for an octonion tripotent u of the matching spin type.

    ``kind`` is ``minimal`` (u minimal in the octonions) or ``complete``
    (u unitary there).

    Raises:
        KindMismatch: If u's spin type disagrees with ``kind``.
        NotTripotent: If u is not a spin tripotent.
    """
    coords = u.coords if isinstance(u, Element) else np.asarray(u, dtype=complex)
    if coords.shape != (8,):
        raise BadSize(f"Expected an octonion (8 coordinates), got shape {coords.shape}")
    spin_type = classify_spin_tripotent(Element(OCTONIONS, coords), tol)
    wanted = {"minimal": "minimal", "complete": "unitary"}.get(kind)
    if wanted is None:
        raise ValueError(f"Unknown C5 tripotent kind {kind!r}")
    if spin_type != wanted:
        raise KindMismatch(f"Octonion tripotent is {spin_type}, {kind} needs {wanted}")
    return Element(space, np.concatenate([coords, np.zeros(8, dtype=complex)]))


def _require_nonzero_tripotent(x: Element, name: str, tol: ToleranceConfig) -> None:
    if x.is_zero(tol):
        raise ZeroTripotent(f"{name} is zero")
    check = is_tripotent(x, tol)
    if not check:
        raise NotTripotent(f"{name} is not a tripotent", residual=check.residual)


@dataclass(frozen=True, eq=False)
class C5Le0Verdict:
    """u <=0 v in C5 by the complete / proportional dichotomy.

    Attributes:
        branch: ``complete``, ``proportional`` or ``none``.
        witness: When false, a tripotent of E0(v) outside E0(u).
    """

    holds: bool
    branch: str
    witness: Optional[Element] = None

    def __bool__(self) -> bool:
        return self.holds


def _unit_ratio(u: np.ndarray, v: np.ndarray, tol: ToleranceConfig) -> Optional[complex]:
    vv = float(np.vdot(v, v).real)
    alpha = complex(np.vdot(v, u) / vv)
    if abs(abs(alpha) - 1.0) <= tol.eq_tol and np.linalg.norm(u - alpha * v) <= tol.eq_tol:
        return alpha
    return None


def c5_le0(
    u: Element,
    v: Element,
    tol: ToleranceConfig = DEFAULT_TOLERANCE,
    rng_seed=None,
    max_attempts: int = DEFAULT_ATTEMPTS,
) -> C5Le0Verdict:
    """u <=0 v iff v is complete or u = αv for a complex unit α.

    A false verdict always carries its witness.

    Raises:
        ZeroTripotent: If u or v is zero.
        NotTripotent: If u or v is not a tripotent.
        NoConvergence: If max_attempts draws from E0(v) all land in E0(u).
    """
    _c5_space(u)
    _c5_space(v)
    _require_nonzero_tripotent(u, "u", tol)
    _require_nonzero_tripotent(v, "v", tol)
    frame_v = peirce_frame(v, tol)
    if frame_v.E0.rank == 0:
        return C5Le0Verdict(True, "complete")
    if _unit_ratio(u.coords, v.coords, tol) is not None:
        return C5Le0Verdict(True, "proportional")

    E0_u = peirce_frame(u, tol).E0
    rng = np.random.default_rng(rng_seed)
    residual = 0.0
    for _ in range(max_attempts):
        w = tripotent_in_subspace(v.space, frame_v.E0, rng=rng, tol=tol, max_attempts=max_attempts)
        residual, _ = inclusion_residual(Subspace.from_columns(w.coords[:, None], tol), E0_u)
        if residual > tol.eq_tol:
            return C5Le0Verdict(False, "none", w)
    raise NoConvergence(f"No tripotent of E0(v) outside E0(u) in {max_attempts} draws", residual=residual)


@dataclass
class NoUnitaryReport:
    """Peirce-2 ranks of sampled C5 tripotents; all must stay below 16."""

    samples: int = 0
    max_e2_rank: int = 0
    complete_found: int = 0

    @property
    def holds(self) -> bool:
        return self.max_e2_rank < 16


def c5_no_unitary(
    samples: int,
    rng_seed=None,
    tol: ToleranceConfig = DEFAULT_TOLERANCE,
) -> NoUnitaryReport:
    space = make_factor("c5")
    rng = np.random.default_rng(rng_seed)
    report = NoUnitaryReport()
    for _ in range(samples):
        frame = peirce_frame(space.sample_tripotent(rng), tol)
        report.samples += 1
        report.max_e2_rank = max(report.max_e2_rank, frame.E2.rank)
        if frame.E0.rank == 0:
            report.complete_found += 1
    log_event(
        logger,
        logging.DEBUG,
        "C5 no-unitary sample",
        extra={"samples": samples, "max_e2_rank": report.max_e2_rank},
    )
    return report


@dataclass(frozen=True, eq=False)
class CompletionCheck:
    """Decomposition of E2 and E1 of e = v + w for minimal v and w in E0(v)."""

    complete: bool
    e2_rank: int
    e2_identity: bool
    e1_identity: bool

    @property
    def holds(self) -> bool:
        return self.complete and self.e2_rank == 8 and self.e2_identity and self.e1_identity


def c5_complete_above(
    v: Element,
    rng: np.random.Generator,
    tol: ToleranceConfig = DEFAULT_TOLERANCE,
) -> Tuple[Element, Element]:
    """e = v + w with w a tripotent of E0(v); returns (e, w).

    Raises:
        NotTripotent: If v is not a tripotent.
    """
    frame_v = peirce_frame(v, tol)
    if frame_v.E0.rank == 0:
        return v, v.space.zero()
    w = tripotent_in_subspace(v.space, frame_v.E0, rng=rng, tol=tol)
    return v + w, w


def c5_completion_check(v: Element, w: Element, tol: ToleranceConfig = DEFAULT_TOLERANCE) -> CompletionCheck:
    """E2(v+w) = span{v,w} + E1(v)∩E1(w) and E1(v+w) = E1(v)∩E0(w) + E0(v)∩E1(w)."""
    fv, fw = peirce_frame(v, tol), peirce_frame(w, tol)
    fe = peirce_frame(v + w, tol)
    span_vw = Subspace.from_columns(np.stack([v.coords, w.coords], axis=1), tol)
    e2 = subspace_sum(span_vw, subspace_intersection(fv.E1, fw.E1, tol), tol)
    e1 = subspace_sum(
        subspace_intersection(fv.E1, fw.E0, tol), subspace_intersection(fv.E0, fw.E1, tol), tol
    )
    return CompletionCheck(
        complete=fe.E0.rank == 0,
        e2_rank=fe.E2.rank,
        e2_identity=subspace_equal(fe.E2, e2, tol),
        e1_identity=subspace_equal(fe.E1, e1, tol),
    )


def c5_orthogonal_complement_rank(
    e: Element, v: Element, tol: ToleranceConfig = DEFAULT_TOLERANCE
) -> Tuple[int, float]:
    """Rank of E2(e) ∩ E0(v) and the distance of e - v from it.

    For complete e and minimal v <= e the rank is 1: every tripotent below e
    orthogonal to v is a multiple of e - v.
    """
    space = subspace_intersection(peirce_frame(e, tol).E2, peirce_frame(v, tol).E0, tol)
    diff = (e - v).coords
    return space.rank, float(np.linalg.norm(diff - space.project(diff)))
