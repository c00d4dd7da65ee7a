"""Suites for the exceptional factors h3o (dim 27) and C5 (dim 16)."""

from __future__ import annotations

import math

import numpy as np

from src.campaign.base import SuiteContext, SuiteResult
from src.campaign.registry import register_suite
from src.campaign.suites.common import C5_PAIRS, elements, seed_of, unit_phase
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
    h3o_triple,
    swap_coordinates,
)
from src.exceptional.c5 import OCTONIONS
from src.factors import make_factor, random_spin_tripotent
from src.numeric import Subspace, subspace_equal
from src.triples import extend_to_complete, peirce_frame, random_tripotent_in, relation, subtriple


@register_suite("h3o-axioms")
def h3o_axioms(ctx: SuiteContext) -> SuiteResult:
    """h3o is a unital Jordan algebra and its triple product has the unit as unitary."""
    tol = ctx.tol
    result = SuiteResult()
    space = make_factor("h3o")
    one = space.unit()
    e11, e22 = h3o_diagonal(space, [1, 0, 0]), h3o_diagonal(space, [0, 1, 0])
    result.residual("E11∘E22", h3o_jordan(e11, e22).norm2, tol)

    for trial in range(ctx.budget(0.05, 3)):
        rng = ctx.rng(trial)
        x, y = space.random_element(rng), space.random_element(rng)
        xx = h3o_jordan(x, x)
        scale2 = max(1.0, x.norm2 * y.norm2)
        scale4 = max(1.0, x.norm2**3 * y.norm2)
        residuals = {
            "tensor_product": h3o_jordan(x, y).distance(h3o_jordan_direct(x, y)) / scale2,
            "commutative": h3o_jordan(x, y).distance(h3o_jordan(y, x)) / scale2,
            "unit": h3o_jordan(one, x).distance(x) / max(1.0, x.norm2),
            "unit_triple": h3o_triple(one, one, x).distance(x) / max(1.0, x.norm2),
            "jordan_identity": h3o_jordan(h3o_jordan(x, y), xx).distance(h3o_jordan(x, h3o_jordan(y, xx))) / scale4,
        }
        for name, value in residuals.items():
            result.residual(name, value, tol)
    return result


@register_suite("h3o-peirce")
def h3o_peirce(ctx: SuiteContext) -> SuiteResult:
    """Peirce spaces of E11 are a line, a copy of C5 and a copy of spin(10)."""
    result = SuiteResult()
    report = h3o_peirce_of_minimal(ctx.budget(0.5, 8), seed_of(ctx.rng(0)), ctx.tol)
    result.check(
        report.holds(ctx.tol),
        max(report.c5_residual, report.spin10_residual),
        {
            "ranks_minimal": list(report.ranks_minimal),
            "ranks_complement": list(report.ranks_complement),
            "ranks_unit": list(report.ranks_unit),
            "e1_is_c5_block": report.e1_is_c5_block,
            "e0_is_spin10_block": report.e0_is_spin10_block,
            "complement_swaps": report.complement_swaps,
        },
    )
    return result


@register_suite("c5-triple-embedding")
def c5_embedding(ctx: SuiteContext) -> SuiteResult:
    """The C5 product is the matrix formula, embeds into h3o and is symmetric in the two blocks."""
    tol = ctx.tol
    result = SuiteResult()
    space = make_factor("c5")
    blocks = {"Y1": np.eye(16)[:, :8], "Y2": np.eye(16)[:, 8:]}
    for name, basis in blocks.items():
        result.residual(f"{name}_closed", subtriple(space, basis, name, tol).closure_residual(), tol)

    for trial in range(ctx.budget(0.05, 3)):
        rng = ctx.rng(trial)
        x, y, z = (space.random_element(rng) for _ in range(3))
        t = c5_triple(x, y, z)
        scale = max(1.0, x.norm2 * y.norm2 * z.norm2)
        residuals = {
            "matrix_form": t.distance(c5_triple_matrix_form(x, y, z)) / scale,
            "h3o_embedding": c5_embed(t).distance(h3o_triple(c5_embed(x), c5_embed(y), c5_embed(z))) / scale,
            "swap_automorphism": swap_coordinates(t).distance(
                c5_triple(swap_coordinates(x), swap_coordinates(y), swap_coordinates(z))
            )
            / scale,
        }
        for name, value in residuals.items():
            result.residual(name, value, tol)
    return result


@register_suite("c5-tripotents")
def c5_tripotents(ctx: SuiteContext) -> SuiteResult:
    """Minimal tripotents have ranks (1, 10, 5); complete ones (8, 8, 0) with E2 = Y1, E1 = Y2."""
    tol = ctx.tol
    result = SuiteResult()
    space = make_factor("c5")
    Y1 = Subspace(16, np.eye(16, dtype=complex)[:, :8])
    Y2 = Subspace(16, np.eye(16, dtype=complex)[:, 8:])
    for trial in range(ctx.budget(0.05, 3)):
        rng = ctx.rng(trial)
        u = c5_tripotent(space, "minimal", random_spin_tripotent(OCTONIONS, "minimal", rng))
        ranks = peirce_frame(u, tol).ranks
        result.check(ranks == (1, 10, 5), 0.0, {"check": "minimal", "ranks": list(ranks), **elements(u=u)})

        v = c5_tripotent(space, "complete", random_spin_tripotent(OCTONIONS, "unitary", rng))
        frame = peirce_frame(v, tol)
        result.check(frame.ranks == (8, 8, 0), 0.0, {"check": "complete", "ranks": list(frame.ranks), **elements(v=v)})
        result.check(
            subspace_equal(frame.E2, Y1, tol) and subspace_equal(frame.E1, Y2, tol),
            0.0,
            {"check": "blocks", **elements(v=v)},
        )
    return result


@register_suite("c5-le0")
def c5_le0_agreement(ctx: SuiteContext) -> SuiteResult:
    """u <=0 v in C5 iff v is complete or u is a unit multiple of v."""
    tol = ctx.tol
    result = SuiteResult()
    space = make_factor("c5")
    branches = set()
    # four partners in both orders plus the minimal phase pair
    draws = math.ceil(C5_PAIRS / 9)
    for trial in range(ctx.budget(0.05, draws)):
        rng = ctx.rng(trial)
        u = random_tripotent_in(space, rng, tol=tol)
        partners = {
            "phase": u * unit_phase(rng),
            "complete": extend_to_complete(u, rng, tol=tol, max_attempts=ctx.sampling.extend_max_attempts),
            "random": random_tripotent_in(space, rng, tol=tol),
            "swapped": swap_coordinates(u),
        }
        for name, v in partners.items():
            for x, y in ((u, v), (v, u)):
                verdict = c5_le0(x, y, tol, seed_of(rng), ctx.sampling.extend_max_attempts)
                branches.add(verdict.branch)
                context = {"pair": name, "branch": verdict.branch, **elements(u=x, v=y)}
                result.check(verdict.holds == relation("leq0", x, y, tol).holds, 0.0, {"check": "agreement", **context})
                if verdict.branch == "none":
                    w = verdict.witness
                    if w is None:
                        result.check(False, 0.0, {"check": "witness", **context})
                        continue
                    separates = peirce_frame(y, tol).E0.contains(w.coords, tol) and not peirce_frame(
                        x, tol
                    ).E0.contains(w.coords, tol)
                    result.check(separates, 0.0, {"check": "witness", **context, **elements(w=w)})

        m = c5_tripotent(space, "minimal", random_spin_tripotent(OCTONIONS, "minimal", rng))
        verdict = c5_le0(m, m * unit_phase(rng), tol)
        branches.add(verdict.branch)
        result.check(verdict.holds and verdict.branch == "proportional", 0.0, {"check": "phase_of_minimal"})
    result.check(branches == {"complete", "proportional", "none"}, 0.0, {"check": "branches", "seen": sorted(branches)})
    return result


@register_suite("c5-no-unitary")
def c5_without_unitary(ctx: SuiteContext) -> SuiteResult:
    """C5 has complete tripotents but no unitary one."""
    result = SuiteResult()
    report = c5_no_unitary(ctx.budget(0.1, 8), seed_of(ctx.rng(0)), ctx.tol)
    witness = {"samples": report.samples, "max_e2_rank": report.max_e2_rank, "complete_found": report.complete_found}
    result.check(report.holds, 0.0, {"check": "no_unitary", **witness})
    result.check(report.complete_found > 0, 0.0, {"check": "complete_seen", **witness})
    return result


@register_suite("c5-completion")
def c5_completion(ctx: SuiteContext) -> SuiteResult:
    """A minimal v plus a tripotent of E0(v) is complete, with the expected Peirce spaces."""
    tol = ctx.tol
    result = SuiteResult()
    space = make_factor("c5")
    for trial in range(ctx.budget(0.05, 3)):
        rng = ctx.rng(trial)
        v = c5_tripotent(space, "minimal", random_spin_tripotent(OCTONIONS, "minimal", rng))
        if rng.random() < 0.5:
            v = swap_coordinates(v)
        e, w = c5_complete_above(v, rng, tol)
        check = c5_completion_check(v, w, tol)
        context = elements(v=v, e=e)
        result.check(
            check.holds,
            0.0,
            {
                "check": "decomposition",
                "complete": check.complete,
                "e2_rank": check.e2_rank,
                "e2_identity": check.e2_identity,
                "e1_identity": check.e1_identity,
                **context,
            },
        )
        rank, distance = c5_orthogonal_complement_rank(e, v, tol)
        result.check(rank == 1, 0.0, {"check": "complement_rank", "rank": rank, **context})
        result.residual("complement_is_e-v", distance, tol, **context)
    return result
