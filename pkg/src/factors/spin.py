"""Spin factors: C^n with {x,y,z} = <x,y>z + <z,y>x - <x,z̄>ȳ."""

from __future__ import annotations

from typing import Optional

import numpy as np

from src.errors import BadSize, InfeasibleRank, NotTripotent
from src.numeric import DEFAULT_TOLERANCE, ToleranceConfig
from src.triples.space import Element, FactorLabel, TripleSpace, ensure_same_space

SPIN_TYPES = ("zero", "unitary", "minimal")


class SpinFactor(TripleSpace):
    """Spin factor of dimension n with coordinatewise conjugation."""

    def __init__(self, n: int, label: Optional[FactorLabel] = None) -> None:
        if n < 1:
            raise BadSize(f"Spin factor needs n >= 1, got {n}")
        self.n = n
        super().__init__(n, label or FactorLabel("spin", (n,)))

    def _product(self, x: np.ndarray, y: np.ndarray, z: np.ndarray) -> np.ndarray:
        yc = np.conj(y)
        xy = np.sum(x * yc, axis=-1, keepdims=True)
        zy = np.sum(z * yc, axis=-1, keepdims=True)
        xz = np.sum(x * z, axis=-1, keepdims=True)
        return xy * z + zy * x - xz * yc

    def norm(self, x: Element) -> float:
        return spin_norm(x)

    def sample_tripotent(self, rng: np.random.Generator) -> Element:
        kind = "minimal" if self.n >= 2 and rng.random() < 0.5 else "unitary"
        return random_spin_tripotent(self, kind, rng)


def spin_norm(x: Element) -> float:
    """||x||² = <x,x> + sqrt(<x,x>² - |<x,x̄>|²)."""
    inner = float(np.vdot(x.coords, x.coords).real)
    bilinear = abs(complex(np.sum(x.coords * x.coords)))
    return float(np.sqrt(inner + np.sqrt(max(inner**2 - bilinear**2, 0.0))))


def spin_conjugate(x: Element) -> Element:
    return Element(x.space, np.conj(x.coords))


def _is_spin(x: Element) -> SpinFactor:
    if not isinstance(x.space, SpinFactor):
        raise BadSize(f"{x.space.label} is not a spin factor")
    return x.space


def classify_spin_tripotent(u: Element, tol: ToleranceConfig = DEFAULT_TOLERANCE) -> str:
    """Type of a spin tripotent: ``zero``, ``unitary`` or ``minimal``.

    Unitary tripotents are αz with z real and ||z||₂ = 1 (ū parallel to u);
    minimal ones have ||u||₂² = 1/2 and u orthogonal to ū.

    Raises:
        NotTripotent: If u has neither form.
    """
    _is_spin(u)
    norm_sq = float(np.vdot(u.coords, u.coords).real)
    bilinear = abs(complex(np.sum(u.coords * u.coords)))
    if norm_sq <= tol.eq_tol:
        return "zero"
    if abs(norm_sq - 1.0) <= tol.eq_tol and abs(bilinear - 1.0) <= tol.eq_tol:
        return "unitary"
    if abs(norm_sq - 0.5) <= tol.eq_tol and bilinear <= tol.eq_tol:
        return "minimal"
    raise NotTripotent(
        f"Not a spin tripotent (||u||² = {norm_sq:.6f}, |<u,ū>| = {bilinear:.6f})"
    )


def _unit_multiple(x: np.ndarray, y: np.ndarray, tol: ToleranceConfig) -> bool:
    """x = αy for a complex unit α."""
    yy = np.vdot(y, y).real
    if yy <= tol.eq_tol:
        return bool(np.linalg.norm(x) <= tol.eq_tol)
    alpha = np.vdot(y, x) / yy
    return abs(abs(alpha) - 1.0) <= tol.eq_tol and bool(np.linalg.norm(x - alpha * y) <= tol.eq_tol)


def spin_relation(kind: str, u: Element, e: Element, tol: ToleranceConfig = DEFAULT_TOLERANCE) -> bool:
    """Closed-form verdicts between spin tripotents.

    u <= e iff u = e, or e is unitary, u minimal and e = u + αū;
    u <=2 e iff u <=0 e iff e is unitary or u = αe;
    u ⊥ e iff both are minimal and e = αū.
    """
    ensure_same_space(u, e)
    tu, te = classify_spin_tripotent(u, tol), classify_spin_tripotent(e, tol)
    a, b = u.coords, e.coords

    if kind in ("sim2", "sim0"):
        base = "leq2" if kind == "sim2" else "leq0"
        return spin_relation(base, u, e, tol) and spin_relation(base, e, u, tol)

    if kind == "perp":
        if tu == "zero" or te == "zero":
            return True
        return tu == te == "minimal" and _unit_multiple(b, np.conj(a), tol)

    if tu == "zero":
        return True
    if te == "zero":
        return False

    if kind == "leq":
        if np.linalg.norm(a - b) <= tol.eq_tol:
            return True
        return te == "unitary" and tu == "minimal" and _unit_multiple(b - a, np.conj(a), tol)
    if kind in ("leq2", "leq0"):
        return te == "unitary" or _unit_multiple(a, b, tol)
    raise ValueError(f"Unknown relation kind {kind!r}")


def random_spin_tripotent(factor: SpinFactor, kind: str, rng_seed=None) -> Element:
    """Unitary αz (z real unit) or minimal α(a + ib)/2 (a, b real orthonormal).

    Raises:
        InfeasibleRank: Minimal tripotents need n >= 2.
    """
    rng = np.random.default_rng(rng_seed)
    n = factor.n
    phase = np.exp(2j * np.pi * rng.random())
    if kind == "unitary":
        z = rng.standard_normal(n)
        return Element(factor, phase * z / np.linalg.norm(z))
    if kind == "minimal":
        if n < 2:
            raise InfeasibleRank("spin(1) has no tripotent with u orthogonal to ū")
        Q, _ = np.linalg.qr(rng.standard_normal((n, 2)))
        return Element(factor, phase * (Q[:, 0] + 1j * Q[:, 1]) / 2)
    raise ValueError(f"Unknown spin tripotent kind {kind!r}")


def unitary_above_minimal(u: Element, alpha: complex = 1.0) -> Element:
    """u + αū, the unitary tripotents above a minimal spin tripotent."""
    return u + spin_conjugate(u) * alpha
