"""Suites for the projection lattices of M_n."""

from __future__ import annotations

from src.campaign.base import SuiteContext, SuiteResult
from src.campaign.registry import register_suite
from src.campaign.suites.common import MODULAR_M4_TRIPLES, seed_of
from src.lattice import (
    LatticeReport,
    complement,
    complement_laws,
    identity,
    is_common_complement,
    join,
    lattice_equal,
    meet,
    modular_law_exact,
    modular_law_sample,
    orthomodular_sample,
    perspectivity_check,
    property_f_sample,
    random_projection,
    zero,
)

LATTICE_SIZES = (2, 3, 4)


def _record(result: SuiteResult, report: LatticeReport) -> None:
    result.check(
        report.holds,
        report.max_residual,
        {
            "law": report.law,
            "n": report.n,
            "trials": report.trials,
            "failures": report.failures,
            "hits": report.hits,
            "first_failure": report.witness,
        },
    )


@register_suite("lattice-modular-law")
def lattice_modular_law(ctx: SuiteContext) -> SuiteResult:
    """(e ∨ f) ∧ g = e ∨ (f ∧ g) whenever e <= g; M4 gets the large budget."""
    result = SuiteResult()
    for n in LATTICE_SIZES:
        trials = ctx.budget(50.0, MODULAR_M4_TRIPLES) if n == 4 else ctx.budget(1.0, 10)
        _record(result, modular_law_sample(n, trials, seed_of(ctx.rng(n)), ctx.tol))
    return result


@register_suite("lattice-modular-exact")
def lattice_modular_exact(ctx: SuiteContext) -> SuiteResult:
    """The modular law in rational arithmetic, bit-exact."""
    result = SuiteResult()
    for n in LATTICE_SIZES:
        report = modular_law_exact(n, ctx.budget(0.1, 5), seed_of(ctx.rng(n)))
        result.check(report.holds and report.max_residual == 0.0, report.max_residual, {"n": n, "hits": report.hits})
    return result


@register_suite("lattice-orthomodular")
def lattice_orthomodular(ctx: SuiteContext) -> SuiteResult:
    result = SuiteResult()
    for n in LATTICE_SIZES:
        _record(result, orthomodular_sample(n, ctx.budget(1.0, 10), seed_of(ctx.rng(n)), ctx.tol))
    return result


@register_suite("lattice-property-f")
def lattice_property_f(ctx: SuiteContext) -> SuiteResult:
    """A subprojection of full rank is the projection itself."""
    result = SuiteResult()
    for n in LATTICE_SIZES:
        report = property_f_sample(n, ctx.budget(1.0, 10), seed_of(ctx.rng(n)), ctx.tol)
        _record(result, report)
        result.check(report.hits > 0, 0.0, {"check": "non_vacuous", "n": n})
    return result


@register_suite("lattice-unitary-covariance")
def lattice_unitary_covariance(ctx: SuiteContext) -> SuiteResult:
    """Join, meet and orthocomplement commute with unitary conjugation."""
    result = SuiteResult()
    for n in LATTICE_SIZES:
        _record(result, unitary_covariance_sample(n, ctx.budget(0.5, 10), seed_of(ctx.rng(n)), ctx.tol))
    return result


@register_suite("lattice-perspectivity")
def lattice_perspectivity(ctx: SuiteContext) -> SuiteResult:
    """Projections of M_n are perspective iff their ranks agree; witnesses are common complements."""
    tol = ctx.tol
    result = SuiteResult()
    for trial in range(ctx.budget(0.5, 10)):
        rng = ctx.rng(trial)
        n = int(rng.integers(2, 5))
        rank_p = int(rng.integers(0, n + 1))
        rank_q = rank_p if rng.random() < 0.6 else int(rng.integers(0, n + 1))
        p = random_projection(n, rank_p, rng)
        q = p if rng.random() < 0.1 else random_projection(n, rank_q, rng)
        verdict = perspectivity_check(p, q, seed_of(rng), tol)
        context = {"n": n, "rank_p": p.rank, "rank_q": q.rank}
        result.check(verdict.holds == (p.rank == q.rank), 0.0, {"check": "rank", **context})
        if verdict.holds:
            witnessed = verdict.witness is not None and is_common_complement(p, q, verdict.witness, tol)
            result.check(witnessed, 0.0, {"check": "common_complement", **context})
    return result


@register_suite("lattice-complement-laws")
def lattice_complement_laws(ctx: SuiteContext) -> SuiteResult:
    """p ∧ p⊥ = 0, p ∨ p⊥ = I, p ∨ p = p, and two distinct lines of M2 span it."""
    tol = ctx.tol
    result = SuiteResult()
    for trial in range(ctx.budget(0.5, 10)):
        rng = ctx.rng(trial)
        n = int(rng.integers(1, 6))
        p = random_projection(n, int(rng.integers(0, n + 1)), rng)
        context = {"n": n, "rank": p.rank}
        result.check(complement_laws(p, tol), 0.0, {"check": "complement", **context})
        result.check(lattice_equal(join(p, p, tol), p, tol), 0.0, {"check": "idempotent_join", **context})
        result.check(lattice_equal(complement(complement(p)), p, tol), 0.0, {"check": "involution", **context})

        a, b = random_projection(2, 1, rng), random_projection(2, 1, rng)
        lines = {"join_is_identity": lattice_equal(join(a, b, tol), identity(2), tol)}
        lines["meet_is_zero"] = lattice_equal(meet(a, b, tol), zero(2), tol)
        for check, ok in lines.items():
            result.check(ok, 0.0, {"check": check, "distance": a.distance(b)})
    return result
