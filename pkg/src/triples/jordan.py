"""The JB*-algebra structure of E2(e) at a tripotent e."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from src.numeric import DEFAULT_TOLERANCE, Subspace, ToleranceConfig
from src.triples.peirce import PeirceFrame, peirce_frame
from src.triples.space import Element


@dataclass(frozen=True, eq=False)
class JordanStructure:
    """Product x∘y = {x,e,y} and involution x* = {e,x,e} on E2(e)."""

    unit: Element
    frame: PeirceFrame

    @property
    def algebra(self) -> Subspace:
        return self.frame.E2

    def product(self, x: Element, y: Element) -> Element:
        return self.unit.space.triple(x, self.unit, y)

    def involution(self, x: Element) -> Element:
        return self.unit.space.triple(self.unit, x, self.unit)

    def random_element(self, rng: np.random.Generator) -> Element:
        basis = self.algebra.basis
        coeffs = (rng.standard_normal(basis.shape[1]) + 1j * rng.standard_normal(basis.shape[1])) / np.sqrt(2)
        return Element(self.unit.space, basis @ coeffs)

    def is_projection(self, x: Element, tol: ToleranceConfig = DEFAULT_TOLERANCE) -> bool:
        """x∘x = x = x* inside E2(e)."""
        square = self.product(x, x)
        star = self.involution(x)
        return (
            self.algebra.contains(x.coords, tol)
            and tol.within(square.distance(x), x.norm2)
            and tol.within(star.distance(x), x.norm2)
        )


def jordan_at(e: Element, tol: ToleranceConfig = DEFAULT_TOLERANCE) -> JordanStructure:
    """Jordan product and involution of the Peirce-2 algebra of e.

    Raises:
        NotTripotent: If e is not a tripotent.
    """
    return JordanStructure(unit=e, frame=peirce_frame(e, tol))
