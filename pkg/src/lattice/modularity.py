"""Sampled lattice laws of the projections of M_n.

M_n is a finite factor, so its projection lattice is modular and
orthomodular, equivalence of projections is equality of rank, and a
subprojection of full rank is the projection itself. The samplers below
check these laws on random projections; ``modular_law_exact`` repeats the
modular check in exact rational arithmetic.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Union

import numpy as np
import sympy

from src.errors import NoConvergence
from src.factors.matrix import random_unitary
from src.lattice.projections import (
    ProjectionLatticeElement,
    complement,
    from_subspace,
    identity,
    join,
    lattice_equal,
    meet,
    projection,
)
from src.numeric import DEFAULT_TOLERANCE, Subspace, ToleranceConfig
from src.utils.logger import get_logger, log_event

logger = get_logger("lattice")


@dataclass
class LatticeReport:
    """Outcome of a sampled lattice law.

    Attributes:
        law: Name of the checked identity.
        trials: Number of sampled configurations.
        failures: Configurations where the identity failed.
        max_residual: Largest ||LHS - RHS|| seen.
        hits: Configurations where the law's hypothesis was non-vacuous.
        witness: Ranks of the first failing configuration.
    """

    law: str
    n: int
    trials: int = 0
    failures: int = 0
    max_residual: float = 0.0
    hits: int = 0
    witness: Optional[Dict[str, Any]] = None

    @property
    def holds(self) -> bool:
        return self.failures == 0

    def record(self, residual: float, ok: bool, witness: Optional[Dict[str, Any]] = None) -> None:
        self.trials += 1
        self.max_residual = max(self.max_residual, float(residual))
        if not ok:
            self.failures += 1
            if self.witness is None:
                self.witness = witness


def random_projection(n: int, rank: int, rng: np.random.Generator) -> ProjectionLatticeElement:
    """Projection onto a Haar-random subspace of the given rank."""
    return from_subspace(Subspace(n, random_unitary(n, rng)[:, :rank]))


def random_subprojection(
    g: ProjectionLatticeElement, rank: int, rng: np.random.Generator
) -> ProjectionLatticeElement:
    """Random e <= g of the given rank."""
    if g.rank == 0:
        return g
    W = random_unitary(g.rank, rng)[:, :rank]
    return from_subspace(Subspace(g.n, g.range.basis @ W))


def _random_partner(
    g: ProjectionLatticeElement, rng: np.random.Generator, tol: ToleranceConfig
) -> ProjectionLatticeElement:
    """Random f, half of the time sharing a line with g so that f ∧ g ≠ 0."""
    n = g.n
    f = random_projection(n, int(rng.integers(0, n + 1)), rng)
    if g.rank and rng.random() < 0.5:
        f = join(f, random_subprojection(g, 1, rng), tol)
    return f


def modular_law_sample(
    n: int,
    trials: int,
    rng_seed=None,
    tol: ToleranceConfig = DEFAULT_TOLERANCE,
) -> LatticeReport:
    """(e ∨ f) ∧ g = e ∨ (f ∧ g) for random e <= g and f.

    Raises:
        ValueError: If n < 2.
    """
    if n < 2:
        raise ValueError(f"modular_law_sample needs n >= 2, got {n}")
    rng = np.random.default_rng(rng_seed)
    report = LatticeReport("modular", n)
    for _ in range(trials):
        g = random_projection(n, int(rng.integers(0, n + 1)), rng)
        e = random_subprojection(g, int(rng.integers(0, g.rank + 1)), rng)
        f = _random_partner(g, rng, tol)
        lhs = meet(join(e, f, tol), g, tol)
        rhs = join(e, meet(f, g, tol), tol)
        if meet(f, g, tol).rank:
            report.hits += 1
        report.record(
            lhs.distance(rhs),
            lattice_equal(lhs, rhs, tol),
            {"rank_e": e.rank, "rank_f": f.rank, "rank_g": g.rank},
        )
    log_event(
        logger,
        logging.DEBUG,
        "Modular law sampled",
        extra={"n": n, "trials": trials, "max_residual": report.max_residual},
    )
    return report


def _exact_columns(M: sympy.Matrix, n: int) -> sympy.Matrix:
    cols = M.columnspace() if M.cols else []
    return sympy.Matrix.hstack(*cols) if cols else sympy.zeros(n, 0)


def _exact_projector(A: sympy.Matrix, n: int) -> sympy.Matrix:
    if A.cols == 0:
        return sympy.zeros(n, n)
    return A * (A.T * A).inv() * A.T


def _exact_join(A: sympy.Matrix, B: sympy.Matrix, n: int) -> sympy.Matrix:
    return _exact_columns(sympy.Matrix.hstack(A, B), n)


def _exact_meet(A: sympy.Matrix, B: sympy.Matrix, n: int) -> sympy.Matrix:
    if A.cols == 0 or B.cols == 0:
        return sympy.zeros(n, 0)
    kernel = sympy.Matrix.hstack(A, -B).nullspace()
    if not kernel:
        return sympy.zeros(n, 0)
    return _exact_columns(sympy.Matrix.hstack(*[A * v[: A.cols, :] for v in kernel]), n)


def _integer_columns(rng: np.random.Generator, rows: int, cols: int) -> sympy.Matrix:
    return sympy.Matrix(rng.integers(-2, 3, size=(rows, cols)).tolist()) if cols else sympy.zeros(rows, 0)


def modular_law_exact(
    n: int,
    trials: int,
    rng_seed=None,
) -> LatticeReport:
    """The modular law on subspaces spanned by small integer vectors, in exact arithmetic.

    Ranges are real rational, so projections are compared entrywise as
    rational matrices and the residual is 0 or the entry gap.
    """
    if n < 2:
        raise ValueError(f"modular_law_exact needs n >= 2, got {n}")
    rng = np.random.default_rng(rng_seed)
    report = LatticeReport("modular_exact", n)
    for _ in range(trials):
        G = _exact_columns(_integer_columns(rng, n, int(rng.integers(0, n + 1))), n)
        E = _exact_columns(G * _integer_columns(rng, G.cols, int(rng.integers(0, G.cols + 1))), n)
        F = _integer_columns(rng, n, int(rng.integers(0, n + 1)))
        if G.cols and rng.random() < 0.5:
            F = sympy.Matrix.hstack(F, G * _integer_columns(rng, G.cols, 1))
        F = _exact_columns(F, n)

        lhs = _exact_projector(_exact_meet(_exact_join(E, F, n), G, n), n)
        rhs = _exact_projector(_exact_join(E, _exact_meet(F, G, n), n), n)
        gap = lhs - rhs
        residual = float(max((abs(x) for x in gap), default=0))
        if _exact_meet(F, G, n).cols:
            report.hits += 1
        report.record(residual, gap == sympy.zeros(n, n), {"rank_e": E.cols, "rank_f": F.cols, "rank_g": G.cols})
    log_event(logger, logging.DEBUG, "Exact modular law", extra={"n": n, "failures": report.failures})
    return report


@dataclass(frozen=True, eq=False)
class PerspectivityVerdict:
    """p and q share a lattice complement r (p ∧ r = q ∧ r = 0, p ∨ r = q ∨ r = I)."""

    holds: bool
    witness: Optional[ProjectionLatticeElement] = None

    def __bool__(self) -> bool:
        return self.holds


def _as_lattice_element(
    p: Union[ProjectionLatticeElement, np.ndarray], tol: ToleranceConfig
) -> ProjectionLatticeElement:
    if isinstance(p, ProjectionLatticeElement):
        return p
    return projection(p, tol)


def is_common_complement(
    p: ProjectionLatticeElement,
    q: ProjectionLatticeElement,
    r: ProjectionLatticeElement,
    tol: ToleranceConfig = DEFAULT_TOLERANCE,
) -> bool:
    n = p.n
    return all(meet(x, r, tol).rank == 0 and join(x, r, tol).rank == n for x in (p, q))


def perspectivity_check(
    p: Union[ProjectionLatticeElement, np.ndarray],
    q: Union[ProjectionLatticeElement, np.ndarray],
    rng_seed=None,
    tol: ToleranceConfig = DEFAULT_TOLERANCE,
    attempts: int = 10,
) -> PerspectivityVerdict:
    """Perspectivity in M_n, decided by rank and witnessed by a common complement.

    Equal projections use r = I - p; otherwise a random subspace of the
    complementary dimension is generic with respect to both ranges.

    Raises:
        NotProjection: If p or q is not a projection.
        NoConvergence: If no sampled subspace is a common complement.
    """
    a, b = _as_lattice_element(p, tol), _as_lattice_element(q, tol)
    if a.rank != b.rank:
        return PerspectivityVerdict(False)
    if lattice_equal(a, b, tol):
        return PerspectivityVerdict(True, complement(a))

    rng = np.random.default_rng(rng_seed)
    for _ in range(attempts):
        r = random_projection(a.n, a.n - a.rank, rng)
        if is_common_complement(a, b, r, tol):
            return PerspectivityVerdict(True, r)
    log_event(logger, logging.WARNING, "No common complement found", extra={"rank": a.rank, "attempts": attempts})
    raise NoConvergence(f"No common complement of rank {a.n - a.rank} in {attempts} draws")


def orthomodular_sample(
    n: int, trials: int, rng_seed=None, tol: ToleranceConfig = DEFAULT_TOLERANCE
) -> LatticeReport:
    """r = p ∨ (r ∧ p⊥) for random p <= r."""
    rng = np.random.default_rng(rng_seed)
    report = LatticeReport("orthomodular", n)
    for _ in range(trials):
        p = random_projection(n, int(rng.integers(0, n + 1)), rng)
        r = join(p, random_projection(n, int(rng.integers(0, n + 1)), rng), tol)
        rebuilt = join(p, meet(r, complement(p), tol), tol)
        report.hits += 1
        report.record(rebuilt.distance(r), lattice_equal(rebuilt, r, tol), {"rank_p": p.rank, "rank_r": r.rank})
    return report


def property_f_sample(
    n: int, trials: int, rng_seed=None, tol: ToleranceConfig = DEFAULT_TOLERANCE
) -> LatticeReport:
    """q <= p with rank q = rank p forces q = p."""
    rng = np.random.default_rng(rng_seed)
    report = LatticeReport("property_f", n)
    for _ in range(trials):
        p = random_projection(n, int(rng.integers(1, n + 1)), rng)
        rank_q = int(rng.integers(0, p.rank + 1)) if rng.random() < 0.5 else p.rank
        q = random_subprojection(p, rank_q, rng)
        if q.rank != p.rank:
            report.record(0.0, True)
            continue
        report.hits += 1
        report.record(q.distance(p), lattice_equal(q, p, tol), {"rank_p": p.rank, "rank_q": q.rank})
    return report


def unitary_covariance_sample(
    n: int, trials: int, rng_seed=None, tol: ToleranceConfig = DEFAULT_TOLERANCE
) -> LatticeReport:
    """U(p ∨ q)U* = UpU* ∨ UqU*, likewise for ∧ and the orthocomplement."""
    rng = np.random.default_rng(rng_seed)
    report = LatticeReport("unitary_covariance", n)
    for _ in range(trials):
        p = random_projection(n, int(rng.integers(0, n + 1)), rng)
        q = random_projection(n, int(rng.integers(0, n + 1)), rng)
        U = random_unitary(n, rng)
        pairs: List[tuple] = [
            (join(p, q, tol).conjugate(U), join(p.conjugate(U), q.conjugate(U), tol)),
            (meet(p, q, tol).conjugate(U), meet(p.conjugate(U), q.conjugate(U), tol)),
            (complement(p).conjugate(U), complement(p.conjugate(U))),
        ]
        residual = max(x.distance(y) for x, y in pairs)
        ok = all(lattice_equal(x, y, tol) for x, y in pairs)
        report.hits += 1
        report.record(residual, ok, {"rank_p": p.rank, "rank_q": q.rank})
    return report


def complement_laws(p: ProjectionLatticeElement, tol: ToleranceConfig = DEFAULT_TOLERANCE) -> bool:
    """p ∧ p⊥ = 0 and p ∨ p⊥ = I."""
    c = complement(p)
    return meet(p, c, tol).rank == 0 and lattice_equal(join(p, c, tol), identity(p.n), tol)
