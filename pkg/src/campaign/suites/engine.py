"""Suites for the factor-agnostic triple engine: axioms, Peirce frames and relations."""

from __future__ import annotations

import math
from typing import Dict, Tuple

import numpy as np

from src.campaign.base import COUNTEREXAMPLE_EXPECTED, SuiteContext, SuiteResult
from src.campaign.registry import register_suite
from src.campaign.suites.common import (
    AXIOM_FACTORS,
    AXIOM_SAMPLES,
    FINITENESS_TRIPOTENTS,
    HIERARCHY_PAIRS,
    TRIPOTENT_FACTORS,
    elements,
    seed_of,
    spaces,
    sweep,
    unit_phase,
)
from src.errors import PeirceSpectrumError
from src.factors.registry import make_factor, parse_factor_spec
from src.numeric import ToleranceConfig
from src.triples import (
    Element,
    RelationVerdict,
    classify_tripotent,
    extend_to_complete,
    is_finite_tripotent_sampled,
    is_tripotent,
    jordan_at,
    order_characterizations,
    orthogonality_characterizations,
    peirce2_equivalence_characterizations,
    peirce2_inclusion_characterizations,
    peirce2_maximality_sample,
    peirce_arithmetic_residuals,
    peirce_frame,
    preorder_coincidence,
    random_tripotent_in,
    range_tripotent_approx,
    relation,
    subtriple,
    triple_axiom_residuals,
    tripotent_in_subspace,
)


def _above(u: Element, rng: np.random.Generator, tol: ToleranceConfig, attempts: int) -> Element:
    """u + w for a tripotent w of E0(u); u itself when u is complete."""
    E0 = peirce_frame(u, tol).E0
    if E0.rank == 0:
        return u
    return u + tripotent_in_subspace(u.space, E0, rng=rng, tol=tol, max_attempts=attempts)


def _verdicts(residuals: Dict[str, float], tol: ToleranceConfig) -> Dict[str, bool]:
    return {name: value <= tol.eq_tol for name, value in residuals.items()}


def _agree(result: SuiteResult, residuals: Dict[str, float], tol: ToleranceConfig, **context) -> bool:
    """All descriptions hold or all fail."""
    verdicts = _verdicts(residuals, tol)
    return result.check(len(set(verdicts.values())) == 1, 0.0, {"check": "agreement", "verdicts": verdicts, **context})


def _cross_check(result: SuiteResult, verdict: RelationVerdict, tol: ToleranceConfig, **context) -> bool:
    """The verdict and its independent cross-check agree."""
    cross_holds = verdict.cross_residual is not None and verdict.cross_residual <= tol.eq_tol
    return result.check(
        verdict.holds == cross_holds,
        0.0,
        {"check": f"{verdict.kind}_cross_check", "residual": verdict.residual, "cross": verdict.cross_residual, **context},
    )


def _reproduce(result: SuiteResult, claim: str, found: bool, **named: Element) -> None:
    if found:
        result.counterexample({"claim": claim, **elements(**named)})
    else:
        result.missing_counterexample(claim)


def _hierarchy(u: Element, e: Element, tol: ToleranceConfig) -> Tuple[bool, bool, bool]:
    """Verdicts of u <= e, u <=2 e and u <=0 e."""
    return (
        relation("leq", u, e, tol).holds,
        relation("leq2", u, e, tol).holds,
        relation("leq0", u, e, tol).holds,
    )


@register_suite("triple-axioms")
def triple_axioms(ctx: SuiteContext) -> SuiteResult:
    result = SuiteResult()
    for space, rng in sweep(ctx, AXIOM_FACTORS, 0.1, AXIOM_SAMPLES):
        for name, value in triple_axiom_residuals(space, rng).items():
            result.residual(name, value, ctx.tol, factor=str(space.label))
    return result


@register_suite("peirce-spectrum")
def peirce_spectrum(ctx: SuiteContext) -> SuiteResult:
    """L(u,u) has spectrum in {0, 1/2, 1} and the Peirce projections partition the space."""
    tol = ctx.tol
    result = SuiteResult()
    for space, rng in sweep(ctx, TRIPOTENT_FACTORS, 0.1):
        label = str(space.label)
        u = random_tripotent_in(space, rng, tol=tol)
        try:
            frame = peirce_frame(u, tol)
        except PeirceSpectrumError as exc:
            result.check(False, float(exc.residual or 0.0), {"check": "spectrum", "factor": label, **elements(u=u)})
            continue
        result.check(
            frame.spectrum_residual <= tol.eig_cluster_tol,
            frame.spectrum_residual,
            {"check": "spectrum", "factor": label, **elements(u=u)},
        )
        residuals = frame.identity_residuals()
        rank_gap = residuals.pop("rank_sum")
        result.check(rank_gap == 0, 0.0, {"check": "rank_sum", "factor": label, "ranks": list(frame.ranks)})
        for name, value in residuals.items():
            result.residual(name, value, tol, factor=label)
    return result


@register_suite("peirce-arithmetic")
def peirce_arithmetic(ctx: SuiteContext) -> SuiteResult:
    result = SuiteResult()
    for space, rng in sweep(ctx, TRIPOTENT_FACTORS, 0.1):
        u = random_tripotent_in(space, rng, tol=ctx.tol)
        for name, value in peirce_arithmetic_residuals(u, rng, ctx.tol).items():
            result.residual(name, value, ctx.tol, factor=str(space.label))
    return result


@register_suite("orthogonality-characterizations")
def orthogonality(ctx: SuiteContext) -> SuiteResult:
    """Orthogonal pairs satisfy every description; random pairs get one verdict."""
    tol = ctx.tol
    result = SuiteResult()
    for space, rng in sweep(ctx, TRIPOTENT_FACTORS, 0.05, 2):
        label = str(space.label)
        u = random_tripotent_in(space, rng, tol=tol)
        E0 = peirce_frame(u, tol).E0
        if E0.rank:
            e = tripotent_in_subspace(space, E0, rng=rng, tol=tol, max_attempts=ctx.sampling.extend_max_attempts)
            for name, value in orthogonality_characterizations(u, e, tol).items():
                result.residual(name, value, tol, factor=label, pair="orthogonal")
        e = random_tripotent_in(space, rng, tol=tol)
        _agree(result, orthogonality_characterizations(u, e, tol), tol, factor=label, **elements(u=u, e=e))
    return result


@register_suite("order-characterizations")
def order_descriptions(ctx: SuiteContext) -> SuiteResult:
    """u <= u + w for w in E0(u) satisfies all eight descriptions of the order."""
    tol = ctx.tol
    result = SuiteResult()
    for space, rng in sweep(ctx, TRIPOTENT_FACTORS, 0.05, 2):
        label = str(space.label)
        u = random_tripotent_in(space, rng, tol=tol)
        e = _above(u, rng, tol, ctx.sampling.extend_max_attempts)
        for name, value in order_characterizations(u, e, tol, seed=seed_of(rng)).items():
            result.residual(name, value, tol, factor=label, pair="ordered")

        other = random_tripotent_in(space, rng, tol=tol)
        _agree(
            result,
            order_characterizations(other, e, tol, seed=seed_of(rng)),
            tol,
            factor=label,
            **elements(u=other, e=e),
        )
        _cross_check(result, relation("leq", other, e, tol), tol, factor=label)
        _cross_check(result, relation("perp", other, e, tol), tol, factor=label)
        if not (e - u).is_zero(tol):
            _cross_check(result, relation("perp", u, e - u, tol), tol, factor=label)
    return result


@register_suite("order-properties")
def order_properties(ctx: SuiteContext) -> SuiteResult:
    """Phase invariance of <= and sums of orthogonal subtripotents."""
    tol = ctx.tol
    result = SuiteResult()
    for space, rng in sweep(ctx, TRIPOTENT_FACTORS, 0.05, 2):
        label = str(space.label)
        u = random_tripotent_in(space, rng, tol=tol)
        E0 = peirce_frame(u, tol).E0
        if E0.rank == 0:
            continue
        w1 = tripotent_in_subspace(space, E0, rng=rng, tol=tol, max_attempts=ctx.sampling.extend_max_attempts)
        e = u + w1
        alpha = unit_phase(rng)
        verdict = relation("leq", u * alpha, e * alpha, tol)
        result.check(verdict.holds, verdict.residual, {"check": "phase", "factor": label, **elements(u=u, e=e)})

        E0_e = peirce_frame(e, tol).E0
        if E0_e.rank == 0:
            continue
        w2 = tripotent_in_subspace(space, E0_e, rng=rng, tol=tol, max_attempts=ctx.sampling.extend_max_attempts)
        top = e + w2
        checks = {
            "u_perp_w2": relation("perp", u, w2, tol),
            "u<=top": relation("leq", u, top, tol),
            "w2<=top": relation("leq", w2, top, tol),
            "u+w2<=top": relation("leq", u + w2, top, tol),
        }
        for name, v in checks.items():
            result.check(v.holds, v.residual, {"check": name, "factor": label, **elements(u=u, w=w2, e=top)})
    return result


@register_suite("preorder-hierarchy")
def preorder_hierarchy(ctx: SuiteContext) -> SuiteResult:
    """u <= e implies u <=2 e, which implies u <=0 e."""
    tol = ctx.tol
    result = SuiteResult()
    # five pairs per draw
    draws = math.ceil(HIERARCHY_PAIRS / (5 * len(TRIPOTENT_FACTORS)))
    for space, rng in sweep(ctx, TRIPOTENT_FACTORS, 0.05, draws):
        label = str(space.label)
        u = random_tripotent_in(space, rng, tol=tol)
        pairs = {
            "random": (u, random_tripotent_in(space, rng, tol=tol)),
            "above": (u, _above(u, rng, tol, ctx.sampling.extend_max_attempts)),
            "complete": (u, extend_to_complete(u, rng, tol=tol, max_attempts=ctx.sampling.extend_max_attempts)),
            "phase": (u, u * unit_phase(rng)),
            "inside": (random_tripotent_in(space, rng, within=u, tol=tol), u),
        }
        for name, (x, y) in pairs.items():
            leq, leq2, leq0 = _hierarchy(x, y, tol)
            result.check(
                (not leq or leq2) and (not leq2 or leq0),
                0.0,
                {"check": name, "factor": label, "leq": leq, "leq2": leq2, "leq0": leq0, **elements(u=x, e=y)},
            )
        # the constructed pairs must actually be related
        result.check(_hierarchy(*pairs["above"], tol)[0], 0.0, {"check": "above_is_leq", "factor": label})
        result.check(_hierarchy(*pairs["inside"], tol)[1], 0.0, {"check": "inside_is_leq2", "factor": label})
    return result


@register_suite("preorder-counterexamples", COUNTEREXAMPLE_EXPECTED)
def preorder_counterexamples(ctx: SuiteContext) -> SuiteResult:
    """None of the implications between <=, <=2 and <=0 reverses."""
    tol = ctx.tol
    result = SuiteResult()

    scalars = make_factor("rectangular", (1, 1))
    u, e = scalars.element([-1.0]), scalars.element([1.0])
    _reproduce(
        result,
        "u ~2 e without u <= e in C",
        relation("sim2", u, e, tol).holds and not relation("leq", u, e, tol).holds,
        u=u,
        e=e,
    )

    row = make_factor("rectangular", (1, 2))
    u, e = row.element([0.0, 1.0]), row.element([1.0, 0.0])
    _reproduce(
        result,
        "u ~0 e with u, e incomparable for <=2 in M_{1,2}",
        relation("sim0", u, e, tol).holds
        and not relation("leq2", u, e, tol).holds
        and not relation("leq2", e, u, tol).holds,
        u=u,
        e=e,
    )

    m2 = make_factor("rectangular", (2, 2))
    u, e = m2.element([-1.0, 0.0, 0.0, 0.0]), m2.element([1.0, 0.0, 0.0, -1.0])
    _reproduce(
        result,
        "u <=2 e without u <= e in M_2",
        relation("leq2", u, e, tol).holds and not relation("leq", u, e, tol).holds,
        u=u,
        e=e,
    )
    return result


@register_suite("subtriple-counterexamples", COUNTEREXAMPLE_EXPECTED)
def subtriple_counterexamples(ctx: SuiteContext) -> SuiteResult:
    """<= and <=2 do not depend on the ambient triple; <=0 does."""
    tol = ctx.tol
    result = SuiteResult()

    m2 = make_factor("rectangular", (2, 2))
    first_row = subtriple(m2, np.eye(4)[:, :2], "first_row", tol)
    e_b, u_b = first_row.element([1.0, 0.0]), first_row.element([0.0, 1.0])
    u_e, e_e = first_row.lift(u_b), first_row.lift(e_b)
    _reproduce(
        result,
        "u ~0 e in a subtriple, incomparable for <=0 in M_2",
        relation("sim0", u_b, e_b, tol).holds
        and not relation("leq0", u_e, e_e, tol).holds
        and not relation("leq0", e_e, u_e, tol).holds,
        u=u_e,
        e=e_e,
    )

    m3 = make_factor("rectangular", (3, 3))
    upper = subtriple(m3, np.eye(9)[:, :6], "upper_rows", tol)
    coords = np.zeros(6)
    coords[[0, 4]] = 1.0
    e_b = upper.element(coords)
    u_b = upper.basis_element(2)
    u_e, e_e = upper.lift(u_b), upper.lift(e_b)
    _reproduce(
        result,
        "u <=0 e in a subtriple, incomparable for <=0 in M_3",
        relation("leq0", u_b, e_b, tol).holds
        and not relation("leq0", e_b, u_b, tol).holds
        and not relation("leq0", u_e, e_e, tol).holds
        and not relation("leq0", e_e, u_e, tol).holds,
        u=u_e,
        e=e_e,
    )

    for trial in range(ctx.budget(0.05, 3)):
        rng = ctx.rng(trial)
        x = random_tripotent_in(upper, rng, tol=tol)
        if rng.random() < 0.5:
            y = _above(x, rng, tol, ctx.sampling.extend_max_attempts)
        else:
            y = random_tripotent_in(upper, rng, tol=tol)
        x_e, y_e = upper.lift(x), upper.lift(y)
        for kind in ("leq", "leq2"):
            inner, outer = relation(kind, x, y, tol).holds, relation(kind, x_e, y_e, tol).holds
            result.check(
                inner == outer,
                0.0,
                {"check": f"{kind}_intrinsic", "inner": inner, "outer": outer, **elements(u=x_e, e=y_e)},
            )
        outer0 = relation("leq0", x_e, y_e, tol).holds
        inner0 = relation("leq0", x, y, tol).holds
        result.check(not outer0 or inner0, 0.0, {"check": "leq0_restricts", **elements(u=x_e, e=y_e)})
    return result


@register_suite("peirce2-inclusion")
def peirce2_inclusion(ctx: SuiteContext) -> SuiteResult:
    tol = ctx.tol
    result = SuiteResult()
    for space, rng in sweep(ctx, TRIPOTENT_FACTORS, 0.05, 2):
        label = str(space.label)
        e = random_tripotent_in(space, rng, tol=tol)
        u = random_tripotent_in(space, rng, within=e, tol=tol)
        for name, value in peirce2_inclusion_characterizations(u, e, tol).items():
            result.residual(name, value, tol, factor=label, pair="inside")
        other = random_tripotent_in(space, rng, tol=tol)
        _agree(result, peirce2_inclusion_characterizations(other, e, tol), tol, factor=label, **elements(u=other, e=e))
    return result


@register_suite("peirce2-equivalence")
def peirce2_equivalence(ctx: SuiteContext) -> SuiteResult:
    tol = ctx.tol
    result = SuiteResult()
    for space, rng in sweep(ctx, TRIPOTENT_FACTORS, 0.05, 2):
        label = str(space.label)
        u = random_tripotent_in(space, rng, tol=tol)
        for name, value in peirce2_equivalence_characterizations(u, u * unit_phase(rng), tol).items():
            result.residual(name, value, tol, factor=label, pair="phase")
        e = random_tripotent_in(space, rng, tol=tol)
        _agree(result, peirce2_equivalence_characterizations(u, e, tol), tol, factor=label, **elements(u=u, e=e))
    return result


@register_suite("peirce2-maximality")
def peirce2_maximality(ctx: SuiteContext) -> SuiteResult:
    """A complete tripotent's Peirce-2 space is maximal among Peirce-2 spaces."""
    result = SuiteResult()
    trials = ctx.budget(0.02)
    for index, space in enumerate(spaces(TRIPOTENT_FACTORS)):
        report = peirce2_maximality_sample(space, trials, seed_of(ctx.rng(index)), ctx.tol)
        result.check(
            report.violations == 0,
            report.max_residual,
            {"factor": str(space.label), "pairs": report.pairs, "hits": report.hits, "violations": report.violations},
        )
    return result


@register_suite("preorder-coincidence")
def coincidence(ctx: SuiteContext) -> SuiteResult:
    """<=0 and <=2 coincide exactly when complete tripotents are unitary."""
    result = SuiteResult()
    trials = ctx.budget(0.02)
    for index, space in enumerate(spaces(TRIPOTENT_FACTORS)):
        report = preorder_coincidence(space, trials, seed_of(ctx.rng(index)), ctx.tol)
        witness = {"factor": str(space.label), "all_complete_unitary": report.all_complete_unitary, "violations": report.violations}
        if report.witness is not None:
            witness.update(elements(u=report.witness[0], e=report.witness[1]))
        result.check(report.consistent, 0.0, witness)
    return result


def _direct_sum_partner(
    part, u: Element, rng: np.random.Generator, tol: ToleranceConfig, attempts: int
) -> Element:
    choice = rng.integers(6)
    if choice == 0:
        return u
    if choice == 1:
        return u * unit_phase(rng)
    if choice == 2:
        return extend_to_complete(u, rng, tol=tol, max_attempts=attempts)
    if choice == 3:
        return part.zero()
    if choice == 4:
        E0 = peirce_frame(u, tol).E0
        if E0.rank:
            return tripotent_in_subspace(part, E0, rng=rng, tol=tol, max_attempts=attempts)
    return random_tripotent_in(part, rng, tol=tol)


@register_suite("direct-sum-relations")
def direct_sum_relations(ctx: SuiteContext) -> SuiteResult:
    """Relations in a direct sum hold iff they hold in every component."""
    tol = ctx.tol
    result = SuiteResult()
    space = parse_factor_spec("spin:3+symmetric:2+rectangular:1,2")
    for trial in range(ctx.budget(0.1, 2)):
        rng = ctx.rng(trial)
        us = [random_tripotent_in(part, rng, tol=tol) for part in space.parts]
        attempts = ctx.sampling.extend_max_attempts
        es = [_direct_sum_partner(part, u, rng, tol, attempts) for part, u in zip(space.parts, us)]
        u, e = space.combine(us), space.combine(es)
        for kind in ("leq", "leq2", "leq0", "perp", "sim2", "sim0"):
            whole = relation(kind, u, e, tol).holds
            parts = all(relation(kind, a, b, tol).holds for a, b in zip(us, es))
            result.check(whole == parts, 0.0, {"check": kind, "whole": whole, "parts": parts, **elements(u=u, e=e)})

        mixed = list(us)
        index = int(rng.integers(len(mixed)))
        mixed[index] = space.parts[index].random_element(rng)
        result.check(bool(is_tripotent(u, tol)), 0.0, {"check": "tripotent_components"})
        result.check(not is_tripotent(space.combine(mixed), tol), 0.0, {"check": "non_tripotent_component"})
    return result


@register_suite("finite-dimensional-finiteness")
def finite_dimensional_finiteness(ctx: SuiteContext) -> SuiteResult:
    """Every tripotent of a finite-dimensional triple is finite."""
    tol = ctx.tol
    result = SuiteResult()
    for space, rng in sweep(ctx, TRIPOTENT_FACTORS, 0.1, FINITENESS_TRIPOTENTS):
        e = random_tripotent_in(space, rng, tol=tol)
        report = is_finite_tripotent_sampled(
            e, ctx.sampling.finiteness_trials, seed_of(rng), tol, max_attempts=ctx.sampling.extend_max_attempts
        )
        witness = {"factor": str(space.label), **elements(e=e)}
        if report.witness is not None:
            witness.update(elements(completion=report.witness))
        result.check(report.holds, 0.0, witness)
    return result


@register_suite("jordan-at-tripotent")
def jordan_structure(ctx: SuiteContext) -> SuiteResult:
    """E2(e) is a unital JB*-algebra with unit e; subtripotents are its projections."""
    tol = ctx.tol
    result = SuiteResult()
    for space, rng in sweep(ctx, TRIPOTENT_FACTORS, 0.05, 2):
        label = str(space.label)
        u = random_tripotent_in(space, rng, tol=tol)
        e = _above(u, rng, tol, ctx.sampling.extend_max_attempts)
        J = jordan_at(e, tol)
        x, y = J.random_element(rng), J.random_element(rng)
        scale = max(1.0, x.norm2 * y.norm2)
        result.residual("unit", J.product(e, x).distance(x) / max(1.0, x.norm2), tol, factor=label)
        result.residual("self_adjoint_unit", J.involution(e).distance(e), tol, factor=label)
        result.residual("involutive", J.involution(J.involution(x)).distance(x) / max(1.0, x.norm2), tol, factor=label)
        result.residual("commutative", J.product(x, y).distance(J.product(y, x)) / scale, tol, factor=label)
        result.check(J.is_projection(u, tol), 0.0, {"check": "subtripotent_projection", "factor": label, **elements(u=u, e=e)})

    matrices = make_factor("rectangular", (3, 3))
    one = matrices.from_matrix(np.eye(3))
    J = jordan_at(one, tol)
    for trial in range(ctx.budget(0.02, 2)):
        rng = ctx.rng(10_000 + trial)
        x, y = matrices.random_element(rng), matrices.random_element(rng)
        X, Y = matrices.to_matrix(x), matrices.to_matrix(y)
        expected = matrices.from_matrix(0.5 * (X @ Y + Y @ X))
        result.residual("matrix_jordan_product", J.product(x, y).distance(expected) / max(1.0, x.norm2 * y.norm2), tol)
    return result


@register_suite("classify-tripotents")
def classify_tripotents(ctx: SuiteContext) -> SuiteResult:
    tol = ctx.tol
    result = SuiteResult()
    samples = ctx.sampling.abelian_samples
    m3 = make_factor("rectangular", (3, 3))
    a3 = make_factor("antisymmetric", (3,))
    known = {
        "identity_M3": (m3.from_matrix(np.eye(3)), dict(complete=True, unitary=True, minimal=False, abelian=False)),
        "E11_M3": (m3.from_matrix(np.diag([1.0, 0.0, 0.0])), dict(complete=False, unitary=False, minimal=True, abelian=True)),
        "E12-E21_A3": (
            a3.from_matrix(np.array([[0.0, 1.0, 0.0], [-1.0, 0.0, 0.0], [0.0, 0.0, 0.0]])),
            dict(complete=True, unitary=False),
        ),
    }
    for name, (u, expected) in known.items():
        flags = classify_tripotent(u, tol, samples, seed=0)
        observed = {key: getattr(flags, key) for key in expected}
        result.check(observed == expected, 0.0, {"check": name, "observed": observed, "expected": expected})

    for space, rng in sweep(ctx, TRIPOTENT_FACTORS, 0.02):
        u = random_tripotent_in(space, rng, tol=tol)
        flags = classify_tripotent(u, tol, samples, seed=seed_of(rng))
        result.check(
            (not flags.unitary or flags.complete) and (not flags.minimal or flags.abelian),
            0.0,
            {"factor": str(space.label), "ranks": list(flags.peirce_ranks), **elements(u=u)},
        )
    return result


@register_suite("tripotent-construction")
def tripotent_construction(ctx: SuiteContext) -> SuiteResult:
    """Odd-power rounding yields tripotents and completion yields complete ones above u."""
    tol = ctx.tol
    result = SuiteResult()
    for space, rng in sweep(ctx, TRIPOTENT_FACTORS, 0.03, 2):
        label = str(space.label)
        x = space.random_element(rng)
        w = range_tripotent_approx(x, ctx.sampling.range_max_iter, tol)
        check = is_tripotent(w, tol)
        result.check(bool(check), check.residual, {"check": "range_tripotent", "factor": label, **elements(x=x)})

        u = random_tripotent_in(space, rng, tol=tol)
        v = extend_to_complete(u, rng, tol=tol, max_attempts=ctx.sampling.extend_max_attempts)
        ranks = peirce_frame(v, tol).ranks
        leq = relation("leq", u, v, tol)
        result.check(ranks[2] == 0, 0.0, {"check": "complete", "factor": label, "ranks": list(ranks)})
        result.check(leq.holds, leq.residual, {"check": "above", "factor": label, **elements(u=u, v=v)})
    return result
