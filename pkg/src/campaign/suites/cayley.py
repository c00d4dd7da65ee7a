"""Suites for the Cayley-Dickson ladder A0..A3."""

from __future__ import annotations

import numpy as np

from src.campaign.base import COUNTEREXAMPLE_EXPECTED, SuiteContext, SuiteResult
from src.campaign.registry import register_suite
from src.campaign.suites.common import CD_IDENTITY_SAMPLES, seed_of
from src.cayley_dickson import (
    MAX_LEVEL,
    cd_basis,
    cd_unit,
    from_element,
    identity_suite,
    iso_A1_to_C2,
    iso_A2_to_M2,
    iso_M2_to_A2,
    random_cd,
    star,
    to_element,
)
from src.factors import spin_norm
from src.numeric import op_norm

# (left, right, sign, result) with e_left ⊡ e_right = sign * e_result in A2
BASIS_TABLE = (
    (3, 2, 1, 4),
    (4, 3, 1, 2),
    (2, 4, 1, 3),
    (2, 3, -1, 4),
    (2, 2, -1, 1),
    (3, 3, -1, 1),
    (4, 4, -1, 1),
)


@register_suite("cd-identities")
def cd_identities(ctx: SuiteContext) -> SuiteResult:
    """Every identity expected at a level holds on random samples."""
    result = SuiteResult()
    samples = ctx.budget(2.0, CD_IDENTITY_SAMPLES)
    for level in range(MAX_LEVEL + 1):
        report = identity_suite(level, samples, seed_of(ctx.rng(level)), ctx.tol)
        for name, check in report.checks.items():
            if check.expected:
                result.check(
                    check.holds(ctx.tol),
                    check.residual,
                    {"check": name, "level": level, "residual": check.residual, "sample": check.witness},
                )
    return result


@register_suite("cd-violations", COUNTEREXAMPLE_EXPECTED)
def cd_violations(ctx: SuiteContext) -> SuiteResult:
    """A2 is not commutative and A3 is not associative, while A1 stays commutative."""
    result = SuiteResult()
    samples = ctx.budget(0.5, 8)
    reports = {level: identity_suite(level, samples, seed_of(ctx.rng(level)), ctx.tol) for level in (1, 2, 3)}

    for level, name in ((2, "commutativity"), (3, "associativity")):
        check = reports[level].checks[name]
        if check.met(ctx.tol):
            result.counterexample(
                {"claim": f"{name} fails at level {level}", "residual": check.residual, "sample": check.witness}
            )
        else:
            result.missing_counterexample(f"{name} at level {level}")

    commutative = reports[1].checks["commutativity"]
    result.check(commutative.holds(ctx.tol), commutative.residual, {"check": "commutativity", "level": 1})
    return result


@register_suite("cd-basis-table")
def cd_basis_table(ctx: SuiteContext) -> SuiteResult:
    result = SuiteResult()
    for left, right, sign, target in BASIS_TABLE:
        product = cd_basis(2, left) @ cd_basis(2, right)
        residual = product.distance(cd_basis(2, target) * sign)
        result.residual(f"e{left}*e{right}", residual, ctx.tol)
    return result


@register_suite("cd-isomorphisms")
def cd_isomorphisms(ctx: SuiteContext) -> SuiteResult:
    """A2 = M2 as *-algebras and as triples; A1 = C ⊕ C with the sup norm."""
    tol = ctx.tol
    result = SuiteResult()
    space = to_element(cd_unit(2)).space
    for trial in range(ctx.budget(0.1, 4)):
        rng = ctx.rng(trial)
        x, y, z = (random_cd(2, rng) for _ in range(3))
        X, Y, Z = (iso_A2_to_M2(a) for a in (x, y, z))
        scale = max(1.0, op_norm(X) * op_norm(Y) * op_norm(Z))
        triple = iso_A2_to_M2(from_element(space.triple(to_element(x), to_element(y), to_element(z))))
        matrix_triple = 0.5 * (X @ Y.conj().T @ Z + Z @ Y.conj().T @ X)
        residuals = {
            "multiplicative": op_norm(iso_A2_to_M2(x @ y) - X @ Y) / max(1.0, op_norm(X) * op_norm(Y)),
            "star": op_norm(iso_A2_to_M2(star(x)) - X.conj().T) / max(1.0, op_norm(X)),
            "norm": abs(spin_norm(to_element(x)) - op_norm(X)) / max(1.0, op_norm(X)),
            "inverse": iso_M2_to_A2(X).distance(x) / max(1.0, op_norm(X)),
            "triple": op_norm(triple - matrix_triple) / scale,
        }
        for name, value in residuals.items():
            result.residual(f"A2_{name}", value, tol)

        a, b = random_cd(1, rng), random_cd(1, rng)
        ia, ib = np.array(iso_A1_to_C2(a)), np.array(iso_A1_to_C2(b))
        norm = spin_norm(to_element(a))
        residuals = {
            "multiplicative": float(np.max(np.abs(np.array(iso_A1_to_C2(a @ b)) - ia * ib)))
            / max(1.0, norm * float(np.max(np.abs(ib)))),
            "star": float(np.max(np.abs(np.array(iso_A1_to_C2(star(a))) - np.conj(ia)))),
            "sup_norm": abs(norm - float(np.max(np.abs(ia)))) / max(1.0, norm),
        }
        for name, value in residuals.items():
            result.residual(f"A1_{name}", value, tol)
    return result
