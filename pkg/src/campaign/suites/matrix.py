"""Suites for the matrix factors: partial-isometry calculus and the involutive factors."""

from __future__ import annotations

from typing import Dict

import numpy as np

from src.campaign.base import SuiteContext, SuiteResult
from src.campaign.registry import register_suite
from src.campaign.suites.common import EVEN_RANK_SAMPLES, elements, seed_of, sweep, unit_phase
from src.factors import (
    antisym_even_rank_law,
    antisym_is_complete,
    antisym_le0,
    is_complete_matrix_tripotent,
    is_finite_by_rank,
    make_factor,
    mvn_equivalent,
    partial_isometry,
    symmetric_construct_tripotent,
    transpose_residual,
    vn_le0,
    vn_leq2,
    vn_order,
)
from src.lattice import random_projection
from src.numeric import ToleranceConfig, op_norm, projection_leq
from src.triples import (
    Element,
    extend_to_complete,
    is_tripotent,
    peirce_frame,
    random_tripotent_in,
    relation,
    tripotent_in_subspace,
)

RECTANGULAR_FACTORS = ("rectangular:1,2", "rectangular:2,3", "rectangular:3,2", "rectangular:3,3")
INVOLUTIVE_FACTORS = ("symmetric:3", "symmetric:4", "antisymmetric:4", "antisymmetric:5")


def _partners(u: Element, rng: np.random.Generator, tol: ToleranceConfig, attempts: int) -> Dict[str, Element]:
    """Tripotents related to u in various ways, keyed by how they were built."""
    space = u.space
    partners = {
        "random": random_tripotent_in(space, rng, tol=tol),
        "phase": u * unit_phase(rng),
        "complete": extend_to_complete(u, rng, tol=tol, max_attempts=attempts),
        "inside": random_tripotent_in(space, rng, within=u, tol=tol),
    }
    E0 = peirce_frame(u, tol).E0
    if E0.rank:
        partners["above"] = u + tripotent_in_subspace(space, E0, rng=rng, tol=tol, max_attempts=attempts)
    return partners


@register_suite("vn-order-agreement")
def vn_order_agreement(ctx: SuiteContext) -> SuiteResult:
    """Triple relations in M_{m,n} read off initial and final projections."""
    tol = ctx.tol
    result = SuiteResult()
    for space, rng in sweep(ctx, RECTANGULAR_FACTORS, 0.05, 2):
        label = str(space.label)
        u = random_tripotent_in(space, rng, tol=tol)
        for name, e in _partners(u, rng, tol, ctx.sampling.extend_max_attempts).items():
            for x, y in ((u, e), (e, u)):
                context = {"factor": label, "pair": name, **elements(u=x, e=y)}
                order = vn_order(x, y, tol)
                checks = {
                    "leq2": vn_leq2(x, y, tol) == relation("leq2", x, y, tol).holds,
                    "leq": order.holds == relation("leq", x, y, tol).holds,
                    "leq0": vn_le0(x, y, tol) == relation("leq0", x, y, tol).holds,
                    "complete": is_complete_matrix_tripotent(y, tol) == (peirce_frame(y, tol).E0.rank == 0),
                }
                for check, ok in checks.items():
                    result.check(ok, 0.0, {"check": check, **context})
                if order.holds:
                    X, Y = space.to_matrix(x), space.to_matrix(y)
                    residual = max(op_norm(X - order.p @ Y), op_norm(X - Y @ order.q))
                    result.residual("projection_witness", residual, tol, **context)
    return result


@register_suite("mvn-equivalence")
def mvn_equivalence(ctx: SuiteContext) -> SuiteResult:
    """Projections of M_n are equivalent iff their ranks agree; the witness implements it."""
    tol = ctx.tol
    result = SuiteResult()
    for trial in range(ctx.budget(0.2, 4)):
        rng = ctx.rng(trial)
        n = int(rng.integers(1, 6))
        rank_p = int(rng.integers(0, n + 1))
        rank_q = rank_p if rng.random() < 0.5 else int(rng.integers(0, n + 1))
        p, q = random_projection(n, rank_p, rng), random_projection(n, rank_q, rng)
        verdict = mvn_equivalent(p.p, q.p, tol)
        context = {"n": n, "rank_p": rank_p, "rank_q": rank_q}
        result.check(verdict.holds == (rank_p == rank_q), 0.0, {"check": "rank", **context})
        if verdict.holds:
            w = verdict.witness
            residual = max(op_norm(w.conj().T @ w - p.p), op_norm(w @ w.conj().T - q.p))
            result.residual("witness", residual, tol, **context)
    return result


@register_suite("transpose-law")
def transpose_law(ctx: SuiteContext) -> SuiteResult:
    """p_i(u) = p_f(u)^t for tripotents of symmetric and antisymmetric factors."""
    result = SuiteResult()
    for space, rng in sweep(ctx, INVOLUTIVE_FACTORS, 0.05, 2):
        u = random_tripotent_in(space, rng, tol=ctx.tol)
        residual = transpose_residual(u, ctx.tol)
        result.residual("transpose", residual, ctx.tol, factor=str(space.label), **elements(u=u))
    return result


@register_suite("involutive-leq2")
def involutive_leq2(ctx: SuiteContext) -> SuiteResult:
    """In the involutive factors u <=2 e iff p_i(u) <= p_i(e) iff p_f(u) <= p_f(e)."""
    tol = ctx.tol
    result = SuiteResult()
    for space, rng in sweep(ctx, INVOLUTIVE_FACTORS, 0.05, 2):
        e = random_tripotent_in(space, rng, tol=tol)
        b = partial_isometry(e, tol)
        pairs = {
            "inside": random_tripotent_in(space, rng, within=e, tol=tol),
            "random": random_tripotent_in(space, rng, tol=tol),
        }
        for name, u in pairs.items():
            a = partial_isometry(u, tol)
            verdicts = {
                "leq2": relation("leq2", u, e, tol).holds,
                "initial": projection_leq(a.p_i, b.p_i, tol),
                "final": projection_leq(a.p_f, b.p_f, tol),
            }
            result.check(
                len(set(verdicts.values())) == 1,
                0.0,
                {"factor": str(space.label), "pair": name, "verdicts": verdicts, **elements(u=u, e=e)},
            )
    return result


@register_suite("antisym-even-rank")
def antisym_even_rank(ctx: SuiteContext) -> SuiteResult:
    """Antisymmetric tripotents have even rank; unitaries exist iff n is even."""
    result = SuiteResult()
    samples = ctx.budget(0.05, EVEN_RANK_SAMPLES)
    for n in range(2, 8):
        factor = make_factor("antisymmetric", (n,))
        report = antisym_even_rank_law(factor, samples, seed_of(ctx.rng(n)), ctx.tol)
        result.check(
            report.holds,
            0.0,
            {
                "n": n,
                "max_rank": report.max_rank,
                "odd_rank_count": report.odd_rank_count,
                "unitary_found": report.unitary_found,
            },
        )
    return result


@register_suite("antisym-le0")
def antisym_le0_agreement(ctx: SuiteContext) -> SuiteResult:
    """The closed form of <=0 in antisymmetric factors matches the Peirce-0 inclusion."""
    tol = ctx.tol
    result = SuiteResult()
    branches = set()
    for space, rng in sweep(ctx, ("antisymmetric:4", "antisymmetric:5", "antisymmetric:6"), 0.05, 2):
        label = str(space.label)
        u = random_tripotent_in(space, rng, tol=tol)
        for name, v in _partners(u, rng, tol, ctx.sampling.extend_max_attempts).items():
            for x, y in ((v, u), (u, v)):
                verdict = antisym_le0(x, y, tol)
                branches.add(verdict.branch)
                context = {"factor": label, "pair": name, "branch": verdict.branch, **elements(u=x, v=y)}
                result.check(verdict.holds == relation("leq0", x, y, tol).holds, 0.0, {"check": "agreement", **context})
                if verdict.branch == "complete":
                    result.check(antisym_is_complete(y, tol), 0.0, {"check": "complete_branch", **context})
                if verdict.witness is not None:
                    w = verdict.witness
                    separates = (
                        bool(is_tripotent(w, tol))
                        and peirce_frame(y, tol).E0.contains(w.coords, tol)
                        and not peirce_frame(x, tol).E0.contains(w.coords, tol)
                    )
                    result.check(separates, 0.0, {"check": "witness", **context, **elements(w=w)})
    result.check("inclusion" in branches and "none" in branches, 0.0, {"check": "branches", "seen": sorted(branches)})
    return result


@register_suite("symmetric-finite")
def symmetric_finite(ctx: SuiteContext) -> SuiteResult:
    """Complete tripotents of square and symmetric factors are unitary; ranks of p_i, p_f agree."""
    tol = ctx.tol
    result = SuiteResult()
    for space, rng in sweep(ctx, ("symmetric:3", "symmetric:4", "rectangular:3,3"), 0.05, 2):
        label = str(space.label)
        u = random_tripotent_in(space, rng, tol=tol)
        v = extend_to_complete(u, rng, tol=tol, max_attempts=ctx.sampling.extend_max_attempts)
        ranks = peirce_frame(v, tol).ranks
        result.check(ranks[0] == space.dim, 0.0, {"check": "complete_is_unitary", "factor": label, "ranks": list(ranks)})
        result.check(is_finite_by_rank(u, tol), 0.0, {"check": "finite_by_rank", "factor": label, **elements(u=u)})
    return result


@register_suite("symmetric-construction")
def symmetric_construction(ctx: SuiteContext) -> SuiteResult:
    """Every projection is the initial projection of a symmetric tripotent."""
    tol = ctx.tol
    result = SuiteResult()
    for trial in range(ctx.budget(0.1, 4)):
        rng = ctx.rng(trial)
        n = int(rng.integers(1, 6))
        factor = make_factor("symmetric", (n,))
        p = random_projection(n, int(rng.integers(0, n + 1)), rng)
        u = symmetric_construct_tripotent(factor, p.p, tol)
        check = is_tripotent(u, tol)
        result.check(bool(check), check.residual, {"check": "tripotent", "n": n, "rank": p.rank})
        a = partial_isometry(u, tol)
        result.residual("initial", op_norm(a.p_i - p.p), tol, n=n, rank=p.rank)
        result.residual("final", op_norm(a.p_f - p.p.T), tol, n=n, rank=p.rank)
    return result
