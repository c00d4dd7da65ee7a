"""Residuals of the equivalent descriptions of the tripotent relations.

Every function returns a mapping ``name -> normalized residual``; a
description holds when its residual is at most eq_tol. Campaign suites
check that the descriptions of one relation hold or fail together.
"""

from __future__ import annotations

from typing import Dict, Optional

import numpy as np

from src.numeric import (
    DEFAULT_TOLERANCE,
    ToleranceConfig,
    hermitian_eig,
    inclusion_residual,
    op_norm,
    projector_distance,
)
from src.triples.operators import L_operator, is_tripotent
from src.triples.peirce import peirce_frame
from src.triples.space import Element, TripleSpace, ensure_same_space


def _commutes_to(A: np.ndarray, B: np.ndarray, target: np.ndarray) -> float:
    """max(||AB - target||, ||BA - target||)."""
    return max(op_norm(A @ B - target), op_norm(B @ A - target))


def orthogonality_characterizations(
    u: Element, e: Element, tol: ToleranceConfig = DEFAULT_TOLERANCE
) -> Dict[str, float]:
    """Seven equivalent descriptions of u ⊥ e."""
    ensure_same_space(u, e)
    fu, fe = peirce_frame(u, tol), peirce_frame(e, tol)
    scale = max(1.0, u.norm2, e.norm2)
    return {
        "u_in_E0(e)": np.linalg.norm(u.coords - fe.P0 @ u.coords) / scale,
        "e_in_E0(u)": np.linalg.norm(e.coords - fu.P0 @ e.coords) / scale,
        "E2_in_E0_crossed": max(
            inclusion_residual(fu.E2, fe.E0)[0], inclusion_residual(fe.E2, fu.E0)[0]
        ),
        "projections_commute": max(
            _commutes_to(fu.P2, fe.P0, fu.P2), _commutes_to(fu.P0, fe.P2, fe.P2)
        ),
        "L(e,u)=0": op_norm(L_operator(e, u)) / scale**2,
        "L(u,e)=0": op_norm(L_operator(u, e)) / scale**2,
        "u±e_tripotents": max(
            is_tripotent(u + e, tol).residual, is_tripotent(u - e, tol).residual
        ) / scale**3,
    }


def peirce2_inclusion_characterizations(
    u: Element, e: Element, tol: ToleranceConfig = DEFAULT_TOLERANCE
) -> Dict[str, float]:
    """Four equivalent descriptions of u <=2 e."""
    ensure_same_space(u, e)
    fu, fe = peirce_frame(u, tol), peirce_frame(e, tol)
    return {
        "u_in_E2(e)": np.linalg.norm(u.coords - fe.P2 @ u.coords) / max(1.0, u.norm2),
        "projections_commute": max(
            _commutes_to(fu.P2, fe.P2, fu.P2),
            op_norm(fu.P1 @ fe.P1 - fe.P1 @ fu.P1),
            _commutes_to(fu.P0, fe.P0, fe.P0),
        ),
        "E2_in_E2_and_E0_in_E0": max(
            inclusion_residual(fu.E2, fe.E2)[0], inclusion_residual(fe.E0, fu.E0)[0]
        ),
        "E2_in_E2": inclusion_residual(fu.E2, fe.E2)[0],
    }


def peirce2_equivalence_characterizations(
    u: Element, e: Element, tol: ToleranceConfig = DEFAULT_TOLERANCE
) -> Dict[str, float]:
    """Four equivalent descriptions of u ~2 e."""
    ensure_same_space(u, e)
    fu, fe = peirce_frame(u, tol), peirce_frame(e, tol)
    both_ways = max(
        np.linalg.norm(u.coords - fe.P2 @ u.coords) / max(1.0, u.norm2),
        np.linalg.norm(e.coords - fu.P2 @ e.coords) / max(1.0, e.norm2),
    )
    return {
        "sim2": both_ways,
        "E2_equal": projector_distance(fu.E2, fe.E2),
        "projections_equal": max(op_norm(fu.projection(j) - fe.projection(j)) for j in (0, 1, 2)),
        "L_equal": op_norm(L_operator(u, u) - L_operator(e, e)),
    }


def order_characterizations(
    u: Element,
    e: Element,
    tol: ToleranceConfig = DEFAULT_TOLERANCE,
    samples: int = 8,
    seed: Optional[int] = 0,
) -> Dict[str, float]:
    """Eight equivalent descriptions of u <= e."""
    ensure_same_space(u, e)
    space = u.space
    scale = max(1.0, u.norm2, e.norm2)
    fu, fe = peirce_frame(u, tol), peirce_frame(e, tol)
    rest = e - u

    def gap(x: Element, y: Element) -> float:
        return x.distance(y) / scale**3

    rest_check = is_tripotent(rest, tol)
    orthogonal = op_norm(L_operator(rest, u)) / scale**2
    projection_in_E2e = max(
        np.linalg.norm(u.coords - fe.P2 @ u.coords) / scale,
        gap(space.triple(u, e, u), u),
        gap(space.triple(e, u, e), u),
    )

    rng = np.random.default_rng(seed)
    subalgebra = inclusion_residual(fu.E2, fe.E2)[0]
    basis = fu.E2.basis
    for _ in range(samples if basis.shape[1] else 0):
        x = Element(space, basis @ rng.standard_normal(basis.shape[1]))
        y = Element(space, basis @ rng.standard_normal(basis.shape[1]))
        norms = max(1.0, x.norm2 * y.norm2, x.norm2)
        subalgebra = max(
            subalgebra,
            space.triple(x, e, y).distance(space.triple(x, u, y)) / (norms * scale),
            space.triple(e, x, e).distance(space.triple(u, x, u)) / (norms * scale**2),
        )

    return {
        "e-u_orthogonal_tripotent": max(rest_check.residual / scale**3, orthogonal),
        "{u,e,u}=u": gap(space.triple(u, e, u), u),
        "{u,u,e}=u": gap(space.triple(u, u, e), u),
        "P2(u)e=u": np.linalg.norm(fu.P2 @ e.coords - u.coords) / scale,
        "L(e-u,u)=0": op_norm(L_operator(rest, u)) / scale**2,
        "L(u,e-u)=0": op_norm(L_operator(u, rest)) / scale**2,
        "projection_in_E2(e)": projection_in_E2e,
        "E2(u)_subalgebra": subalgebra,
    }


def peirce_arithmetic_residuals(
    u: Element,
    rng: np.random.Generator,
    tol: ToleranceConfig = DEFAULT_TOLERANCE,
) -> Dict[str, float]:
    """Peirce multiplication rules on random elements of the Peirce spaces.

    {E_j, E_k, E_l} lies in E_{j-k+l}, vanishes when j-k+l is outside
    {0,1,2}, and {E2, E0, E} = {E0, E2, E} = 0.
    """
    space = u.space
    frame = peirce_frame(u, tol)
    samples = {}
    for j in (0, 1, 2):
        sub = frame.subspace(j)
        if sub.rank:
            coeffs = rng.standard_normal(sub.rank) + 1j * rng.standard_normal(sub.rank)
            samples[j] = Element(space, sub.basis @ coeffs)

    residuals: Dict[str, float] = {}
    for j, xj in samples.items():
        for k, xk in samples.items():
            for l, xl in samples.items():
                p = space.triple(xj, xk, xl)
                scale = max(1.0, xj.norm2 * xk.norm2 * xl.norm2)
                m = j - k + l
                if m in (0, 1, 2):
                    outside = p.coords - frame.projection(m) @ p.coords
                    residuals[f"{{E{j},E{k},E{l}}}⊂E{m}"] = float(np.linalg.norm(outside)) / scale
                else:
                    residuals[f"{{E{j},E{k},E{l}}}=0"] = p.norm2 / scale

    z = space.random_element(rng)
    for j, k in ((2, 0), (0, 2)):
        if j in samples and k in samples:
            p = space.triple(samples[j], samples[k], z)
            scale = max(1.0, samples[j].norm2 * samples[k].norm2 * z.norm2)
            residuals[f"{{E{j},E{k},E}}=0"] = p.norm2 / scale
    return residuals


def triple_axiom_residuals(space: TripleSpace, rng: np.random.Generator) -> Dict[str, float]:
    """Jordan identity, outer symmetry, linearity and positivity of L(a,a)."""
    a, b, x, y, z, w = (space.random_element(rng) for _ in range(6))
    t = space.triple
    lam = complex(rng.standard_normal(), rng.standard_normal())

    jordan_lhs = t(a, b, t(x, y, z))
    jordan_rhs = t(t(a, b, x), y, z) - t(x, t(b, a, y), z) + t(x, y, t(a, b, z))
    scale5 = max(1.0, np.prod([v.norm2 for v in (a, b, x, y, z)]))
    scale3 = max(1.0, x.norm2 * y.norm2 * z.norm2)

    L = L_operator(a, a)
    eigenvalues, _ = hermitian_eig(L, ToleranceConfig(eq_tol=1e-6))
    return {
        "jordan_identity": jordan_lhs.distance(jordan_rhs) / scale5,
        "outer_symmetry": t(x, y, z).distance(t(z, y, x)) / scale3,
        "outer_linearity": t(x * lam + w, y, z).distance(t(x, y, z) * lam + t(w, y, z))
        / max(scale3, w.norm2 * y.norm2 * z.norm2),
        "middle_conjugate_linearity": t(x, y * lam, z).distance(t(x, y, z) * np.conj(lam))
        / max(1.0, abs(lam) * scale3),
        "L(a,a)_hermitian": op_norm(L - L.conj().T) / max(1.0, a.norm2**2),
        "L(a,a)_positive": max(0.0, -float(eigenvalues[0])) / max(1.0, a.norm2**2),
    }
