"""Tripotent classification, search, completion and finiteness sampling."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Tuple, Union

import numpy as np

from src.errors import IterationStall, NoConvergence, NotTripotent
from src.numeric import (
    DEFAULT_TOLERANCE,
    Subspace,
    ToleranceConfig,
    hermitian_eig,
    subspace_intersection,
    subspace_leq,
)
from src.triples.jordan import jordan_at
from src.triples.operators import L_operator, is_tripotent
from src.triples.peirce import PeirceFrame, peirce_frame
from src.triples.relations import relation
from src.triples.space import Element, TripleSpace
from src.utils.config_loader import SamplingConfig
from src.utils.logger import get_logger, log_event
from src.utils.retry import with_retry

logger = get_logger("triples")

Seed = Union[int, np.random.Generator, None]

# Draws per tripotent search before giving up
DEFAULT_ATTEMPTS = SamplingConfig().extend_max_attempts


@dataclass(frozen=True)
class TripotentClass:
    """Classification flags of a tripotent.

    Attributes:
        complete: E0(u) = 0.
        unitary: E2(u) is the whole space.
        minimal: E2(u) is one-dimensional.
        abelian: The Jordan product of E2(u) is associative on the samples.
        peirce_ranks: (rank E2, rank E1, rank E0).
        abelian_sampled: Marks ``abelian`` as a sampled verdict.
    """

    complete: bool
    unitary: bool
    minimal: bool
    abelian: bool
    peirce_ranks: Tuple[int, int, int]
    abelian_sampled: bool = True


def classify_tripotent(
    u: Element,
    tol: ToleranceConfig = DEFAULT_TOLERANCE,
    samples: int = 64,
    seed: Seed = 0,
) -> TripotentClass:
    """Complete, unitary, minimal and (sampled) abelian flags of u.

    Raises:
        NotTripotent: If u is not a tripotent.
    """
    structure = jordan_at(u, tol)
    ranks = structure.frame.ranks
    rng = np.random.default_rng(seed)

    abelian = True
    if ranks[0] > 1:
        for _ in range(samples):
            x, y, z = (structure.random_element(rng) for _ in range(3))
            left = structure.product(structure.product(x, y), z)
            right = structure.product(x, structure.product(y, z))
            swapped = structure.product(y, x)
            scale = x.norm2 * y.norm2 * z.norm2
            if not (
                tol.within(left.distance(right), scale)
                and tol.within(structure.product(x, y).distance(swapped), x.norm2 * y.norm2)
            ):
                abelian = False
                break

    return TripotentClass(
        complete=ranks[2] == 0,
        unitary=ranks[0] == u.space.dim,
        minimal=ranks[0] == 1,
        abelian=abelian,
        peirce_ranks=ranks,
    )


def _top_eigenvalue(y: Element, tol: ToleranceConfig) -> Tuple[float, int]:
    """Largest eigenvalue of L(y,y) and how many eigenvalues sit within eig_cluster_tol of it."""
    eigenvalues, _ = hermitian_eig(L_operator(y, y), tol.with_overrides(eq_tol=max(tol.eq_tol, 1e-7)))
    top = float(eigenvalues[-1])
    return top, int(np.sum(eigenvalues >= top * (1.0 - tol.eig_cluster_tol)))


def range_tripotent_approx(
    x: Element,
    max_iter: int = 60,
    tol: ToleranceConfig = DEFAULT_TOLERANCE,
) -> Element:
    """Tripotent of the top spectral part of x by odd-power iteration.

    Each step rescales y so that the largest eigenvalue of L(y,y) is 1 and
    replaces y by {y,y,y}; the parts of x below the top singular level die
    out geometrically.

    Raises:
        NoConvergence: If x is numerically zero, the top eigenvalue of
            L(x,x) is tied, or max_iter is exhausted.
    """
    if is_tripotent(x, tol) and not x.is_zero(tol):
        return x
    y = x
    for _ in range(max_iter):
        top, multiplicity = _top_eigenvalue(y, tol)
        if top < 10 * tol.rank_tol:
            raise NoConvergence("Element is numerically zero", residual=top)
        if multiplicity > 1:
            raise NoConvergence(f"Top eigenvalue of L(y,y) is tied ({multiplicity} copies)", residual=top)
        y = y / np.sqrt(top)
        cube = y.space.triple(y, y, y)
        if tol.within(cube.distance(y), y.norm2):
            return cube
        y = cube
    raise NoConvergence(f"No tripotent after {max_iter} iterations")


def _random_in(subspace: Subspace, rng: np.random.Generator) -> np.ndarray:
    r = subspace.basis.shape[1]
    coeffs = (rng.standard_normal(r) + 1j * rng.standard_normal(r)) / np.sqrt(2)
    return subspace.basis @ coeffs


def _round_in_subspace(
    space: TripleSpace,
    subspace: Subspace,
    *,
    rng: np.random.Generator,
    tol: ToleranceConfig,
) -> Element:
    x = Element(space, _random_in(subspace, rng))
    w = range_tripotent_approx(x, tol=tol)
    return Element(space, subspace.project(w.coords))


def tripotent_in_subspace(
    space: TripleSpace,
    subspace: Subspace,
    *,
    rng: np.random.Generator,
    tol: ToleranceConfig = DEFAULT_TOLERANCE,
    max_attempts: int = DEFAULT_ATTEMPTS,
) -> Element:
    """Nonzero tripotent inside a nonzero subtriple given by its span.

    A draw whose rounding fails is retried with a spawned generator, at
    most ``max_attempts`` draws in total.

    Raises:
        NoConvergence: If every draw fails.
    """
    sampler = with_retry((NoConvergence,), max_attempts=max_attempts)(_round_in_subspace)
    return sampler(space, subspace, rng=rng, tol=tol)


def extend_to_complete(
    u: Element,
    seed: Seed = None,
    within: Optional[Element] = None,
    tol: ToleranceConfig = DEFAULT_TOLERANCE,
    max_attempts: int = DEFAULT_ATTEMPTS,
) -> Element:
    """Complete tripotent v >= u.

    Repeatedly adds a tripotent w of E0(v) (orthogonal to v) until E0(v)
    vanishes. With ``within`` the completion happens inside the Peirce-2
    subtriple of that tripotent, where u must already lie. Each search in
    E0(v) draws at most ``max_attempts`` times.

    Raises:
        NotTripotent: If u (or ``within``) is not a tripotent.
        IterationStall: If no tripotent can be found in a nonzero E0.
    """
    rng = np.random.default_rng(seed)
    container: Optional[Subspace] = peirce_frame(within, tol).E2 if within is not None else None

    v = u
    for _ in range(u.space.dim + 1):
        E0 = peirce_frame(v, tol).E0
        if container is not None:
            E0 = subspace_intersection(E0, container, tol)
        if E0.rank == 0:
            return v
        try:
            w = tripotent_in_subspace(u.space, E0, rng=rng, tol=tol, max_attempts=max_attempts)
        except NoConvergence as exc:
            raise IterationStall(f"No tripotent found in E0 of rank {E0.rank}") from exc
        v = v + w
        log_event(logger, logging.DEBUG, "Extended tripotent", extra={"e0_rank": E0.rank})
    raise IterationStall("Completion did not terminate within dim steps")


def random_tripotent_in(
    space: TripleSpace,
    rng: np.random.Generator,
    within: Optional[Element] = None,
    tol: ToleranceConfig = DEFAULT_TOLERANCE,
    max_attempts: int = DEFAULT_ATTEMPTS,
) -> Element:
    """Random nonzero tripotent of the space, or of E2(within).

    Uses the space's own constructor when it has one, projected to E2(within)
    and rounded by odd-power iteration; otherwise a random element is rounded.
    """
    if within is None:
        sample = space.sample_tripotent(rng)
        if sample is not None:
            return sample
        return tripotent_in_subspace(space, Subspace.full(space.dim), rng=rng, tol=tol, max_attempts=max_attempts)

    frame = peirce_frame(within, tol)
    sample = space.sample_tripotent(rng) if rng.random() < 0.5 else None
    if sample is not None:
        x = frame.project(2, sample)
        if not x.is_zero(tol):
            try:
                return range_tripotent_approx(x, tol=tol)
            except NoConvergence:
                pass
    return tripotent_in_subspace(space, frame.E2, rng=rng, tol=tol, max_attempts=max_attempts)


@dataclass
class FinitenessTrial:
    """One completion inside E2(e): ranks of E2(e), E2(u) and E2(v)."""

    rank_e2: int
    rank_u: int
    rank_v: int

    @property
    def unitary(self) -> bool:
        return self.rank_v == self.rank_e2


@dataclass
class FinitenessReport:
    """Result of ``is_finite_tripotent_sampled``."""

    holds: bool
    trials: int
    log: List[FinitenessTrial] = field(default_factory=list)
    witness: Optional[Element] = None

    def __bool__(self) -> bool:
        return self.holds


def is_finite_tripotent_sampled(
    e: Element,
    trials: int = 100,
    seed: Seed = None,
    tol: ToleranceConfig = DEFAULT_TOLERANCE,
    max_attempts: int = DEFAULT_ATTEMPTS,
) -> FinitenessReport:
    """Check that complete tripotents of E2(e) are unitary there.

    Each trial draws a tripotent u in E2(e), completes it inside E2(e) and
    compares Peirce-2 ranks; the first non-unitary completion is returned as
    witness.

    Raises:
        NotTripotent: If e is not a tripotent.
    """
    rng = np.random.default_rng(seed)
    frame_e = peirce_frame(e, tol)
    report = FinitenessReport(holds=True, trials=0)
    if frame_e.E2.rank == 0:
        return report

    for _ in range(trials):
        u = random_tripotent_in(e.space, rng, within=e, tol=tol, max_attempts=max_attempts)
        v = extend_to_complete(u, rng, within=e, tol=tol, max_attempts=max_attempts)
        trial = FinitenessTrial(frame_e.E2.rank, peirce_frame(u, tol).E2.rank, peirce_frame(v, tol).E2.rank)
        report.log.append(trial)
        report.trials += 1
        if not trial.unitary:
            report.holds = False
            report.witness = v
            log_event(logger, logging.INFO, "Non-unitary completion inside E2(e)", extra=vars(trial))
            break
    return report


def random_complete_tripotent(
    space: TripleSpace,
    rng: np.random.Generator,
    tol: ToleranceConfig = DEFAULT_TOLERANCE,
    max_attempts: int = DEFAULT_ATTEMPTS,
) -> Element:
    u = random_tripotent_in(space, rng, tol=tol, max_attempts=max_attempts)
    return extend_to_complete(u, rng, tol=tol, max_attempts=max_attempts)


@dataclass
class MaximalityReport:
    """Complete u and tripotent v with E2(u) inside E2(v) must have E2(u) = E2(v)."""

    pairs: int = 0
    hits: int = 0
    violations: int = 0
    max_residual: float = 0.0


def peirce2_maximality_sample(
    space: TripleSpace,
    trials: int,
    seed: Seed = None,
    tol: ToleranceConfig = DEFAULT_TOLERANCE,
) -> MaximalityReport:
    """Sample the maximality of Peirce-2 spaces of complete tripotents."""
    rng = np.random.default_rng(seed)
    report = MaximalityReport()
    for _ in range(trials):
        u = random_complete_tripotent(space, rng, tol)
        phase = np.exp(2j * np.pi * rng.random())
        candidates = [u * phase, random_complete_tripotent(space, rng, tol), random_tripotent_in(space, rng, tol=tol)]
        E2_u = peirce_frame(u, tol).E2
        for v in candidates:
            E2_v = peirce_frame(v, tol).E2
            report.pairs += 1
            if not subspace_leq(E2_u, E2_v, tol):
                continue
            report.hits += 1
            gap = abs(E2_v.rank - E2_u.rank)
            report.max_residual = max(report.max_residual, float(gap))
            if gap:
                report.violations += 1
    return report


@dataclass
class CoincidenceReport:
    """Relation between "complete implies unitary" and "<=0 implies <=2".

    Attributes:
        completes_sampled: Number of complete tripotents drawn.
        all_complete_unitary: Whether every one of them was unitary.
        pairs: Tripotent pairs checked for "<=0 implies <=2".
        violations: Pairs with u <=0 e but not u <=2 e.
        witness: A pair (u, e) with u ~0 e and u not <=2 e, when built.
    """

    completes_sampled: int = 0
    all_complete_unitary: bool = True
    pairs: int = 0
    violations: int = 0
    witness: Optional[Tuple[Element, Element]] = None

    @property
    def consistent(self) -> bool:
        if self.all_complete_unitary:
            return self.violations == 0
        return self.witness is not None


def preorder_coincidence(
    space: TripleSpace,
    trials: int,
    seed: Seed = None,
    tol: ToleranceConfig = DEFAULT_TOLERANCE,
) -> CoincidenceReport:
    """Sample whether <=2 and <=0 coincide, and why.

    When a complete non-unitary e turns up, a tripotent v of E1(e) is
    completed to u; then u ~0 e while u is not in E2(e).
    """
    rng = np.random.default_rng(seed)
    report = CoincidenceReport()
    for _ in range(trials):
        e = random_complete_tripotent(space, rng, tol)
        report.completes_sampled += 1
        frame_e: PeirceFrame = peirce_frame(e, tol)
        if frame_e.E2.rank < space.dim:
            report.all_complete_unitary = False
            if frame_e.E1.rank == 0:
                continue
            v = tripotent_in_subspace(space, frame_e.E1, rng=rng, tol=tol)
            u = extend_to_complete(v, rng, tol=tol)
            if relation("sim0", u, e, tol).holds and not relation("leq2", u, e, tol).holds:
                report.witness = (u, e)
                break
            continue

        u = random_tripotent_in(space, rng, tol=tol)
        w = random_tripotent_in(space, rng, tol=tol)
        report.pairs += 1
        if relation("leq0", u, w, tol).holds and not relation("leq2", u, w, tol).holds:
            report.violations += 1
    return report


def require_tripotent(u: Element, tol: ToleranceConfig = DEFAULT_TOLERANCE) -> None:
    check = is_tripotent(u, tol)
    if not check:
        raise NotTripotent(f"Not a tripotent (residual {check.residual:.3e})", residual=check.residual)
