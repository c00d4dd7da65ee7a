"""The preorders <=, <=2, <=0, orthogonality and the induced equivalences."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from src.errors import NotTripotent
from src.numeric import DEFAULT_TOLERANCE, ToleranceConfig, inclusion_residual, op_norm
from src.triples.operators import L_operator, is_tripotent
from src.triples.peirce import peirce_frame
from src.triples.space import Element, ensure_same_space

RELATION_KINDS = ("leq", "leq2", "leq0", "perp", "sim2", "sim0")


@dataclass(frozen=True)
class RelationVerdict:
    """Verdict of a relation query between two tripotents.

    Attributes:
        kind: One of ``RELATION_KINDS``.
        holds: Whether the relation holds; equivalent to residual <= eq_tol.
        residual: Normalized residual of the primary test.
        witness: A violating vector when the relation fails.
        cross_residual: Residual of the independent cross-check, if any.
    """

    kind: str
    holds: bool
    residual: float
    witness: Optional[Element] = None
    cross_residual: Optional[float] = None

    def __bool__(self) -> bool:
        return self.holds


def _require_tripotent(x: Element, name: str, tol: ToleranceConfig) -> None:
    check = is_tripotent(x, tol)
    if not check:
        raise NotTripotent(
            f"{name} is not a tripotent (residual {check.residual:.3e})", residual=check.residual
        )


def _verdict(
    kind: str,
    residual: float,
    tol: ToleranceConfig,
    witness: Optional[Element] = None,
    cross_residual: Optional[float] = None,
) -> RelationVerdict:
    holds = residual <= tol.eq_tol
    return RelationVerdict(kind, holds, residual, None if holds else witness, cross_residual)


def _leq(u: Element, e: Element, tol: ToleranceConfig) -> RelationVerdict:
    space = u.space
    gap = u - space.triple(u, e, u)
    residual = tol.scaled(gap.norm2, u.norm2, e.norm2)
    frame_u = peirce_frame(u, tol)
    cross = tol.scaled(float(np.linalg.norm(frame_u.P2 @ e.coords - u.coords)), u.norm2, e.norm2)
    return _verdict("leq", residual, tol, gap, cross)


def _leq2(u: Element, e: Element, tol: ToleranceConfig) -> RelationVerdict:
    frame_e = peirce_frame(e, tol)
    gap = u - frame_e.project(2, u)
    return _verdict("leq2", tol.scaled(gap.norm2, u.norm2), tol, gap)


def _leq0(u: Element, e: Element, tol: ToleranceConfig) -> RelationVerdict:
    E0_e = peirce_frame(e, tol).E0
    E0_u = peirce_frame(u, tol).E0
    residual, witness = inclusion_residual(E0_e, E0_u)
    return _verdict("leq0", residual, tol, Element(u.space, witness))


def _perp(u: Element, e: Element, tol: ToleranceConfig) -> RelationVerdict:
    L = L_operator(e, u)
    residual = tol.scaled(op_norm(L), u.norm2, e.norm2)
    cross = max(is_tripotent(u + e, tol).residual, is_tripotent(u - e, tol).residual)
    column = int(np.argmax(np.linalg.norm(L, axis=0)))
    witness = Element(u.space, L[:, column])
    return _verdict("perp", residual, tol, witness, cross)


def _two_sided(kind: str, base, u: Element, e: Element, tol: ToleranceConfig) -> RelationVerdict:
    forward = base(u, e, tol)
    backward = base(e, u, tol)
    failing = forward if not forward.holds else backward
    residual = max(forward.residual, backward.residual)
    return _verdict(kind, residual, tol, failing.witness)


def relation(
    kind: str,
    u: Element,
    e: Element,
    tol: ToleranceConfig = DEFAULT_TOLERANCE,
) -> RelationVerdict:
    """Decide a relation between tripotents u and e.

    ``leq`` is {u,e,u} = u, cross-checked by P2(u)e = u; ``leq2`` is
    u in E2(e); ``leq0`` is E0(e) inside E0(u); ``perp`` is L(e,u) = 0,
    cross-checked by u + e and u - e being tripotents; ``sim2`` and
    ``sim0`` are the two-sided versions.

    Raises:
        ValueError: Unknown kind.
        SpaceMismatch: Elements of different spaces.
        NotTripotent: If u or e is not a tripotent.
    """
    if kind not in RELATION_KINDS:
        raise ValueError(f"Unknown relation kind {kind!r}; expected one of {RELATION_KINDS}")
    ensure_same_space(u, e)
    _require_tripotent(u, "u", tol)
    _require_tripotent(e, "e", tol)

    if kind == "leq":
        return _leq(u, e, tol)
    if kind == "leq2":
        return _leq2(u, e, tol)
    if kind == "leq0":
        return _leq0(u, e, tol)
    if kind == "perp":
        return _perp(u, e, tol)
    if kind == "sim2":
        return _two_sided("sim2", _leq2, u, e, tol)
    return _two_sided("sim0", _leq0, u, e, tol)
