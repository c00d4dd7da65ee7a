"""Triple spaces, their elements, direct sums and subtriples."""

from __future__ import annotations

import itertools
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from functools import cached_property
from typing import List, Optional, Sequence, Tuple

import numpy as np

from src.errors import BadSize, SpaceMismatch
from src.numeric import DEFAULT_TOLERANCE, ToleranceConfig, hermitian_eig

_subtriple_ids = itertools.count(1)


@dataclass(frozen=True)
class FactorLabel:
    """Identifier of a triple space.

    Attributes:
        kind: Factor kind (``rectangular``, ``spin``, ``h3o``, ...).
        sizes: Size parameters of the kind.
        parts: Component labels of a direct sum.
        tag: Disambiguates spaces that have no size parameters of their own.
    """

    kind: str
    sizes: Tuple[int, ...] = ()
    parts: Tuple["FactorLabel", ...] = ()
    tag: str = ""

    def __str__(self) -> str:
        if self.parts:
            return " ⊕ ".join(str(p) for p in self.parts)
        inner = ",".join(str(s) for s in self.sizes)
        suffix = f"#{self.tag}" if self.tag else ""
        return f"{self.kind}({inner}){suffix}"


class TripleSpace(ABC):
    """Finite-dimensional JB*-triple in orthonormal complex coordinates.

    Subclasses implement ``_product`` on coordinate arrays of shape
    ``(..., dim)`` with numpy broadcasting. The coordinate inner product is
    the standard Hermitian one; coordinates are chosen so that L(a,a) is
    Hermitian with respect to it.
    """

    def __init__(self, dim: int, label: FactorLabel) -> None:
        if dim < 1:
            raise BadSize(f"Triple space dimension must be positive, got {dim}")
        self.dim = dim
        self.label = label

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.label}, dim={self.dim})"

    @abstractmethod
    def _product(self, x: np.ndarray, y: np.ndarray, z: np.ndarray) -> np.ndarray:
        """Batched {x,y,z} on coordinates, conjugate-linear in y."""
        raise NotImplementedError

    def product_array(self, x: np.ndarray, y: np.ndarray, z: np.ndarray) -> np.ndarray:
        return self._product(
            np.asarray(x, dtype=complex), np.asarray(y, dtype=complex), np.asarray(z, dtype=complex)
        )

    @cached_property
    def tensor(self) -> np.ndarray:
        """Structure tensor ``T[j,k,l,i] = {e_j, e_k, e_l}_i``."""
        return self._build_tensor()

    def _build_tensor(self) -> np.ndarray:
        eye = np.eye(self.dim, dtype=complex)
        d = self.dim
        return self._product(
            eye.reshape(d, 1, 1, d), eye.reshape(1, d, 1, d), eye.reshape(1, 1, d, d)
        )

    def triple(self, x: "Element", y: "Element", z: "Element") -> "Element":
        ensure_same_space(x, y, z)
        return Element(self, self._product(x.coords, y.coords, z.coords))

    def element(self, coords: Sequence[complex]) -> "Element":
        return Element(self, np.asarray(coords, dtype=complex))

    def zero(self) -> "Element":
        return Element(self, np.zeros(self.dim, dtype=complex))

    def basis_element(self, k: int) -> "Element":
        coords = np.zeros(self.dim, dtype=complex)
        coords[k] = 1.0
        return Element(self, coords)

    def inner(self, x: "Element", y: "Element") -> complex:
        ensure_same_space(x, y)
        return complex(np.vdot(y.coords, x.coords))

    def norm(self, x: "Element") -> float:
        """Triple norm, sqrt of the largest eigenvalue of L(x,x)."""
        L = np.einsum("jkli,j,k->il", self.tensor, x.coords, x.coords.conj())
        eigenvalues, _ = hermitian_eig(L, ToleranceConfig(eq_tol=1e-6))
        return float(np.sqrt(max(eigenvalues[-1], 0.0)))

    def random_coords(self, rng: np.random.Generator) -> np.ndarray:
        return (rng.standard_normal(self.dim) + 1j * rng.standard_normal(self.dim)) / np.sqrt(2)

    def random_element(self, rng: np.random.Generator) -> "Element":
        return Element(self, self.random_coords(rng))

    def sample_tripotent(self, rng: np.random.Generator) -> Optional["Element"]:
        """Factor-specific random tripotent, or None if the space has none."""
        return None


@dataclass(frozen=True, eq=False)
class Element:
    """Coordinate vector in a triple space."""

    space: TripleSpace
    coords: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        coords = np.asarray(self.coords, dtype=complex).reshape(-1)
        if coords.shape[0] != self.space.dim:
            raise BadSize(
                f"{self.space.label} expects {self.space.dim} coordinates, got {coords.shape[0]}"
            )
        if not np.all(np.isfinite(coords)):
            raise ValueError("Element coordinates must be finite")
        object.__setattr__(self, "coords", coords)

    def _coerce(self, other: "Element") -> np.ndarray:
        ensure_same_space(self, other)
        return other.coords

    def __add__(self, other: "Element") -> "Element":
        return Element(self.space, self.coords + self._coerce(other))

    def __sub__(self, other: "Element") -> "Element":
        return Element(self.space, self.coords - self._coerce(other))

    def __neg__(self) -> "Element":
        return Element(self.space, -self.coords)

    def __mul__(self, scalar: complex) -> "Element":
        return Element(self.space, complex(scalar) * self.coords)

    __rmul__ = __mul__

    def __truediv__(self, scalar: complex) -> "Element":
        return Element(self.space, self.coords / complex(scalar))

    @property
    def norm2(self) -> float:
        """Coordinate (Hilbertian) norm."""
        return float(np.linalg.norm(self.coords))

    @property
    def norm(self) -> float:
        return self.space.norm(self)

    def is_zero(self, tol: ToleranceConfig = DEFAULT_TOLERANCE) -> bool:
        return self.norm2 <= tol.rank_tol

    def distance(self, other: "Element") -> float:
        return float(np.linalg.norm(self.coords - self._coerce(other)))


def ensure_same_space(*elements: Element) -> None:
    first = elements[0].space
    for other in elements[1:]:
        if other.space is not first and other.space.label != first.label:
            raise SpaceMismatch(f"Elements of {first.label} and {other.space.label} mixed")


class DirectSum(TripleSpace):
    """Coordinatewise triple product on a finite family of spaces."""

    def __init__(self, parts: Sequence[TripleSpace]) -> None:
        if not parts:
            raise BadSize("direct_sum needs at least one space")
        self.parts: List[TripleSpace] = list(parts)
        self.offsets = np.cumsum([0] + [p.dim for p in self.parts])
        label = FactorLabel("direct_sum", parts=tuple(p.label for p in self.parts))
        super().__init__(int(self.offsets[-1]), label)

    def _slices(self) -> List[slice]:
        return [slice(int(a), int(b)) for a, b in zip(self.offsets[:-1], self.offsets[1:])]

    def _product(self, x: np.ndarray, y: np.ndarray, z: np.ndarray) -> np.ndarray:
        x, y, z = np.broadcast_arrays(x, y, z)
        return np.concatenate(
            [part._product(x[..., s], y[..., s], z[..., s]) for part, s in zip(self.parts, self._slices())],
            axis=-1,
        )

    def _build_tensor(self) -> np.ndarray:
        T = np.zeros((self.dim,) * 4, dtype=complex)
        for part, s in zip(self.parts, self._slices()):
            T[s, s, s, s] = part.tensor
        return T

    def norm(self, x: Element) -> float:
        return max(p.norm(c) for p, c in zip(self.parts, self.components(x)))

    def components(self, x: Element) -> List[Element]:
        ensure_same_space(x, self.zero())
        return [Element(p, x.coords[s]) for p, s in zip(self.parts, self._slices())]

    def combine(self, components: Sequence[Element]) -> Element:
        if len(components) != len(self.parts):
            raise BadSize(f"Expected {len(self.parts)} components, got {len(components)}")
        for part, c in zip(self.parts, components):
            ensure_same_space(c, part.zero())
        return Element(self, np.concatenate([c.coords for c in components]))

    def sample_tripotent(self, rng: np.random.Generator) -> Optional[Element]:
        samples = [p.sample_tripotent(rng) for p in self.parts]
        if any(s is None for s in samples):
            return None
        return self.combine(samples)


class Subtriple(TripleSpace):
    """Subtriple spanned by orthonormal coordinate vectors of a parent space."""

    def __init__(self, parent: TripleSpace, basis: np.ndarray, name: str = "") -> None:
        self.parent = parent
        self.basis = np.asarray(basis, dtype=complex)
        tag = name or f"sub{next(_subtriple_ids)}"
        super().__init__(
            self.basis.shape[1],
            FactorLabel("subtriple", (self.basis.shape[1],), parts=(), tag=f"{parent.label}/{tag}"),
        )

    def _product(self, x: np.ndarray, y: np.ndarray, z: np.ndarray) -> np.ndarray:
        B = self.basis
        lifted = self.parent._product(x @ B.T, y @ B.T, z @ B.T)
        return lifted @ B.conj()

    def _build_tensor(self) -> np.ndarray:
        B = self.basis
        return np.einsum(
            "abci,aj,bk,cl,im->jklm", self.parent.tensor, B, B.conj(), B, B.conj(), optimize=True
        )

    def closure_residual(self) -> float:
        """Largest component of a basis triple product outside the span."""
        B = self.basis
        full = np.einsum("abci,aj,bk,cl->jkli", self.parent.tensor, B, B.conj(), B, optimize=True)
        projected = np.einsum("jklm,im->jkli", np.einsum("jkli,im->jklm", full, B.conj()), B)
        return float(np.max(np.abs(full - projected))) if full.size else 0.0

    def lift(self, x: Element) -> Element:
        ensure_same_space(x, self.zero())
        return Element(self.parent, self.basis @ x.coords)

    def restrict(self, x: Element) -> Element:
        ensure_same_space(x, self.parent.zero())
        return Element(self, self.basis.conj().T @ x.coords)


def direct_sum(spaces: Sequence[TripleSpace]) -> TripleSpace:
    """Coordinatewise direct sum; a single space is returned unchanged."""
    if len(spaces) == 1:
        return spaces[0]
    return DirectSum(spaces)


def subtriple(
    space: TripleSpace,
    basis: np.ndarray,
    name: str = "",
    tol: ToleranceConfig = DEFAULT_TOLERANCE,
) -> Subtriple:
    """Subtriple on the span of ``basis`` columns.

    Raises:
        BadSize: If the columns are not orthonormal or the span is not
            closed under the triple product.
    """
    B = np.asarray(basis, dtype=complex)
    if B.ndim != 2 or B.shape[0] != space.dim or B.shape[1] == 0:
        raise BadSize(f"Subtriple basis must be {space.dim} x r with r >= 1")
    if not tol.within(float(np.max(np.abs(B.conj().T @ B - np.eye(B.shape[1]))))):
        raise BadSize("Subtriple basis columns are not orthonormal")
    sub = Subtriple(space, B, name)
    residual = sub.closure_residual()
    if not tol.within(residual):
        raise BadSize("Span is not closed under the triple product", residual=residual)
    return sub
