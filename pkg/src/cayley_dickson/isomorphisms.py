"""Low-level coincidences: A1 = C ⊕ C, A2 = M2, and A_n as a spin factor."""

from __future__ import annotations

from functools import lru_cache
from typing import Tuple

import numpy as np

from src.cayley_dickson.algebra import MAX_LEVEL, CDElement
from src.errors import BadSize, LevelMismatch
from src.factors.spin import SpinFactor
from src.triples.space import Element, FactorLabel

# Images of e1..e4. With the doubling product e3⊡e2 = e4, so e3 goes to
# [[0,-1],[1,0]] for the map to be multiplicative.
_M2_IMAGES = np.array(
    [
        [[1, 0], [0, 1]],
        [[1j, 0], [0, -1j]],
        [[0, -1], [1, 0]],
        [[0, 1j], [1j, 0]],
    ],
    dtype=complex,
)


def _require_level(x: CDElement, level: int) -> None:
    if x.level != level:
        raise LevelMismatch(f"Expected a level-{level} element, got level {x.level}")


def iso_A2_to_M2(x: CDElement) -> np.ndarray:
    """Biquaternion to 2x2 matrix; multiplicative and *-preserving.

    Raises:
        LevelMismatch: If x is not of level 2.
    """
    _require_level(x, 2)
    return np.einsum("k,kij->ij", x.coords, _M2_IMAGES)


def iso_M2_to_A2(M: np.ndarray) -> CDElement:
    """Inverse of ``iso_A2_to_M2``; the images are orthonormal for tr(XY*)/2."""
    M = np.asarray(M, dtype=complex)
    if M.shape != (2, 2):
        raise BadSize(f"Expected a 2x2 matrix, got {M.shape}")
    return CDElement(2, 0.5 * np.einsum("kij,ij->k", _M2_IMAGES.conj(), M))


def iso_A1_to_C2(x: CDElement) -> Tuple[complex, complex]:
    """(x1, x2) ↦ (x1 + i x2, x1 - i x2).

    Raises:
        LevelMismatch: If x is not of level 1.
    """
    _require_level(x, 1)
    x1, x2 = x.coords
    return complex(x1 + 1j * x2), complex(x1 - 1j * x2)


@lru_cache(maxsize=None)
def as_spin(level: int) -> SpinFactor:
    """A_level with coordinatewise conjugation, as the spin factor C^(2^level)."""
    if not 0 <= level <= MAX_LEVEL:
        raise BadSize(f"Cayley-Dickson level must be in 0..{MAX_LEVEL}, got {level}")
    return SpinFactor(2**level, label=FactorLabel("cayley_dickson", (level,)))


def to_element(x: CDElement) -> Element:
    return Element(as_spin(x.level), x.coords)


def from_element(x: Element) -> CDElement:
    level = int(np.log2(x.space.dim))
    if 2**level != x.space.dim:
        raise BadSize(f"Dimension {x.space.dim} is not a power of two")
    return CDElement(level, x.coords)
