"""Suites for spin factors: tripotent types, closed-form relations and the norm."""

from __future__ import annotations

import numpy as np

from src.campaign.base import SuiteContext, SuiteResult
from src.campaign.registry import register_suite
from src.campaign.suites.common import elements, sweep, unit_phase
from src.cayley_dickson import iso_A2_to_M2, random_cd, to_element
from src.factors import (
    classify_spin_tripotent,
    random_spin_tripotent,
    spin_conjugate,
    spin_norm,
    spin_relation,
    unitary_above_minimal,
)
from src.numeric import op_norm
from src.triples import (
    RELATION_KINDS,
    TripleSpace,
    extend_to_complete,
    peirce_frame,
    range_tripotent_approx,
    relation,
)

SPIN_FACTORS = ("spin:3", "spin:5", "spin:8")

EXPECTED_RANKS = {
    "minimal": lambda n: (1, n - 2, 1),
    "unitary": lambda n: (n, 0, 0),
}


@register_suite("spin-tripotents")
def spin_tripotents(ctx: SuiteContext) -> SuiteResult:
    """Nonzero spin tripotents are minimal with ranks (1, n-2, 1) or unitary."""
    tol = ctx.tol
    result = SuiteResult()
    for space, rng in sweep(ctx, SPIN_FACTORS, 0.05, 2):
        n = space.dim
        candidates = {
            "rounded": range_tripotent_approx(space.random_element(rng), ctx.sampling.range_max_iter, tol),
            "minimal": random_spin_tripotent(space, "minimal", rng),
            "unitary": random_spin_tripotent(space, "unitary", rng),
        }
        for source, u in candidates.items():
            # rounded tripotents carry the iteration error
            kind = classify_spin_tripotent(u, tol.with_overrides(eq_tol=1e-6) if source == "rounded" else tol)
            ranks = peirce_frame(u, tol).ranks
            ok = kind in EXPECTED_RANKS and ranks == EXPECTED_RANKS[kind](n)
            if source != "rounded":
                ok = ok and kind == source
            result.check(ok, 0.0, {"factor": str(space.label), "source": source, "type": kind, "ranks": list(ranks)})
    return result


@register_suite("spin-relations")
def spin_relations(ctx: SuiteContext) -> SuiteResult:
    """Closed-form spin relations agree with the generic Peirce tests."""
    tol = ctx.tol
    result = SuiteResult()
    for space, rng in sweep(ctx, SPIN_FACTORS, 0.05, 2):
        label = str(space.label)
        u = random_spin_tripotent(space, "minimal" if rng.random() < 0.5 else "unitary", rng)
        partners = {
            "same": u,
            "phase": u * unit_phase(rng),
            "conjugate": spin_conjugate(u),
            "unitary": random_spin_tripotent(space, "unitary", rng),
            "minimal": random_spin_tripotent(space, "minimal", rng),
        }
        if classify_spin_tripotent(u, tol) == "minimal":
            partners["above"] = unitary_above_minimal(u, unit_phase(rng))
        for name, e in partners.items():
            for x, y in ((u, e), (e, u)):
                for kind in RELATION_KINDS:
                    closed = spin_relation(kind, x, y, tol)
                    generic = relation(kind, x, y, tol).holds
                    result.check(
                        closed == generic,
                        0.0,
                        {"check": kind, "factor": label, "pair": name, "closed": closed, **elements(u=x, e=y)},
                    )
    return result


@register_suite("spin-norm")
def spin_norm_agreement(ctx: SuiteContext) -> SuiteResult:
    """The spin norm is the triple norm, sits between ||x||_2 and sqrt(2)||x||_2,
    and on A2 is the operator norm of the matching 2x2 matrix."""
    tol = ctx.tol
    result = SuiteResult()
    for space, rng in sweep(ctx, SPIN_FACTORS, 0.05, 2):
        x = space.random_element(rng)
        norm = spin_norm(x)
        euclidean = float(np.linalg.norm(x.coords))
        generic = TripleSpace.norm(space, x)
        result.residual("triple_norm", abs(norm - generic) / max(1.0, norm), tol, factor=str(space.label))
        result.check(
            euclidean * (1 - tol.eq_tol) <= norm <= np.sqrt(2) * euclidean * (1 + tol.eq_tol),
            0.0,
            {"check": "bounds", "norm": norm, "euclidean": euclidean},
        )

    for trial in range(ctx.budget(0.05, 2)):
        a = random_cd(2, ctx.rng(10_000 + trial))
        norm = spin_norm(to_element(a))
        result.residual("biquaternion_operator_norm", abs(norm - op_norm(iso_A2_to_M2(a))) / max(1.0, norm), tol)
    return result


@register_suite("spin-completion")
def spin_completion(ctx: SuiteContext) -> SuiteResult:
    """A minimal tripotent completes to u + αū with |α| = 1, which is unitary."""
    tol = ctx.tol
    result = SuiteResult()
    for space, rng in sweep(ctx, SPIN_FACTORS, 0.05, 2):
        u = random_spin_tripotent(space, "minimal", rng)
        v = extend_to_complete(u, rng, tol=tol, max_attempts=ctx.sampling.extend_max_attempts)
        rest, conj = (v - u).coords, spin_conjugate(u).coords
        alpha = complex(np.vdot(conj, rest) / np.vdot(conj, conj).real)
        residual = max(float(np.linalg.norm(rest - alpha * conj)), abs(abs(alpha) - 1.0))
        context = {"factor": str(space.label), **elements(u=u, v=v)}
        result.residual("above_minimal_form", residual, tol, **context)
        result.check(classify_spin_tripotent(v, tol) == "unitary", 0.0, {"check": "unitary", **context})
    return result
