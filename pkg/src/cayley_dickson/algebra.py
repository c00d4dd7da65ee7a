"""Cayley-Dickson doubling: C, C^2, biquaternions, complex octonions.

Elements of level n are coordinate vectors of length 2**n in doubling
order, so (x1, x2) splits the vector into halves. The raw functions act on
the last axis of arrays of any batch shape.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from src.errors import BadSize, LevelMismatch

MAX_LEVEL = 3


def diamond_array(x: np.ndarray) -> np.ndarray:
    """(x1, x2)⋄ = (x1⋄, -x2): every coordinate but the first changes sign."""
    out = -np.asarray(x, dtype=complex)
    out[..., 0] = -out[..., 0]
    return out


def star_array(x: np.ndarray) -> np.ndarray:
    return np.conj(diamond_array(x))


def multiply_array(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """(x1,x2)⊡(y1,y2) = (x1y1 - y2x2⋄, x1⋄y2 + y1x2), batched."""
    x = np.asarray(x, dtype=complex)
    y = np.asarray(y, dtype=complex)
    size = x.shape[-1]
    if size != y.shape[-1]:
        raise LevelMismatch(f"Cannot multiply lengths {size} and {y.shape[-1]}")
    if size == 1:
        return x * y
    h = size // 2
    x1, x2 = x[..., :h], x[..., h:]
    y1, y2 = y[..., :h], y[..., h:]
    first = multiply_array(x1, y1) - multiply_array(y2, diamond_array(x2))
    second = multiply_array(diamond_array(x1), y2) + multiply_array(y1, x2)
    return np.concatenate(np.broadcast_arrays(first, second), axis=-1)


def unit_array(level: int) -> np.ndarray:
    one = np.zeros(2**level, dtype=complex)
    one[0] = 1.0
    return one


@dataclass(frozen=True, eq=False)
class CDElement:
    """Element of the level-``level`` Cayley-Dickson algebra."""

    level: int
    coords: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        if not 0 <= self.level <= MAX_LEVEL:
            raise BadSize(f"Cayley-Dickson level must be in 0..{MAX_LEVEL}, got {self.level}")
        coords = np.asarray(self.coords, dtype=complex).reshape(-1)
        if coords.shape[0] != 2**self.level:
            raise BadSize(f"Level {self.level} needs {2**self.level} coordinates, got {coords.shape[0]}")
        if not np.all(np.isfinite(coords)):
            raise ValueError("Cayley-Dickson coordinates must be finite")
        object.__setattr__(self, "coords", coords)

    def _same_level(self, other: "CDElement") -> None:
        if other.level != self.level:
            raise LevelMismatch(f"Levels differ: {self.level} vs {other.level}")

    def __add__(self, other: "CDElement") -> "CDElement":
        self._same_level(other)
        return CDElement(self.level, self.coords + other.coords)

    def __sub__(self, other: "CDElement") -> "CDElement":
        self._same_level(other)
        return CDElement(self.level, self.coords - other.coords)

    def __neg__(self) -> "CDElement":
        return CDElement(self.level, -self.coords)

    def __mul__(self, scalar: complex) -> "CDElement":
        return CDElement(self.level, complex(scalar) * self.coords)

    __rmul__ = __mul__

    def __matmul__(self, other: "CDElement") -> "CDElement":
        return cd_product(self, other)

    def distance(self, other: "CDElement") -> float:
        self._same_level(other)
        return float(np.linalg.norm(self.coords - other.coords))

    @property
    def is_scalar(self) -> bool:
        return bool(np.allclose(self.coords[1:], 0.0))


def cd_product(x: CDElement, y: CDElement) -> CDElement:
    """x ⊡ y.

    Raises:
        LevelMismatch: If the levels differ.
    """
    x._same_level(y)
    return CDElement(x.level, multiply_array(x.coords, y.coords))


def diamond(x: CDElement) -> CDElement:
    return CDElement(x.level, diamond_array(x.coords))


def star(x: CDElement) -> CDElement:
    return CDElement(x.level, star_array(x.coords))


def bar(x: CDElement) -> CDElement:
    return CDElement(x.level, np.conj(x.coords))


def cd_inner(x: CDElement, y: CDElement) -> complex:
    """<x, y>, linear in x."""
    x._same_level(y)
    return complex(np.sum(x.coords * np.conj(y.coords)))


def cd_unit(level: int) -> CDElement:
    return CDElement(level, unit_array(level))


def cd_basis(level: int, k: int) -> CDElement:
    """Canonical basis vector e_k, 1-based so that e_1 is the unit."""
    if not 1 <= k <= 2**level:
        raise BadSize(f"Basis index {k} out of range for level {level}")
    coords = np.zeros(2**level, dtype=complex)
    coords[k - 1] = 1.0
    return CDElement(level, coords)


def embed(x: CDElement) -> CDElement:
    """x ↦ (x, 0) one level up.

    Raises:
        BadSize: At the top level.
    """
    return CDElement(x.level + 1, np.concatenate([x.coords, np.zeros_like(x.coords)]))


def random_cd(level: int, rng: np.random.Generator) -> CDElement:
    d = 2**level
    return CDElement(level, (rng.standard_normal(d) + 1j * rng.standard_normal(d)) / np.sqrt(2))
