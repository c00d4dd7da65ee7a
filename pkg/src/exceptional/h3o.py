"""Hermitian 3x3 complex-octonion matrices as a JB*-triple (dim 27)."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, Sequence, Tuple

import numpy as np

from src.errors import BadSize, NoConvergence
from src.exceptional.octonion_matrix import (
    H3O_DIM,
    coords_to_hermitian,
    hermitian_to_coords,
    octonion_matmul,
)
from src.factors.registry import make_factor
from src.numeric import DEFAULT_TOLERANCE, Subspace, ToleranceConfig, subspace_equal
from src.triples.peirce import peirce_frame
from src.triples.space import Element, FactorLabel, TripleSpace
from src.triples.tripotents import range_tripotent_approx
from src.utils.logger import get_logger, log_event

logger = get_logger("exceptional.h3o")


def _jordan_direct(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    X, Y = coords_to_hermitian(x), coords_to_hermitian(y)
    return hermitian_to_coords(0.5 * (octonion_matmul(X, Y) + octonion_matmul(Y, X)))


class H3O(TripleSpace):
    """{x,y,z} = (x∘y*)∘z + x∘(y*∘z) - (x∘z)∘y*, x∘y = (x⊡y + y⊡x)/2.

    For hermitian matrices y* is entrywise conjugation, i.e. conjugation
    of the coordinates. Products go through a cached Jordan tensor.
    """

    def __init__(self) -> None:
        super().__init__(H3O_DIM, FactorLabel("h3o"))

    @cached_property
    def jordan_tensor(self) -> np.ndarray:
        """``J[p,q,r]``: coordinate r of e_p ∘ e_q."""
        eye = np.eye(H3O_DIM, dtype=complex)
        return _jordan_direct(eye[:, None, :], eye[None, :, :])

    def jordan_array(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        return np.einsum("...p,...q,pqr->...r", x, y, self.jordan_tensor)

    def _product(self, x: np.ndarray, y: np.ndarray, z: np.ndarray) -> np.ndarray:
        j = self.jordan_array
        ys = np.conj(y)
        return j(j(x, ys), z) + j(x, j(ys, z)) - j(j(x, z), ys)

    def _build_tensor(self) -> np.ndarray:
        J = self.jordan_tensor
        return (
            np.einsum("jkm,mli->jkli", J, J)
            + np.einsum("klm,jmi->jkli", J, J)
            - np.einsum("jlm,mki->jkli", J, J)
        )

    def unit(self) -> Element:
        coords = np.zeros(H3O_DIM, dtype=complex)
        coords[:3] = 1.0
        return Element(self, coords)

    def from_octonion_matrix(self, M: np.ndarray) -> Element:
        """Element from a (3, 3, 8) array; only the upper triangle is read."""
        M = np.asarray(M, dtype=complex)
        if M.shape != (3, 3, 8):
            raise BadSize(f"Expected a (3, 3, 8) octonion matrix, got {M.shape}")
        return Element(self, hermitian_to_coords(M))

    def to_octonion_matrix(self, x: Element) -> np.ndarray:
        return coords_to_hermitian(x.coords)

    def sample_tripotent(self, rng: np.random.Generator) -> Element:
        """Diagonal model tripotents with phases, or a rounded random element."""
        if rng.random() < 0.5:
            try:
                return range_tripotent_approx(self.random_element(rng))
            except NoConvergence:
                pass
        support = rng.random(3) < 0.5
        if not support.any():
            support[int(rng.integers(3))] = True
        phases = np.exp(2j * np.pi * rng.random(3)) * support
        return h3o_diagonal(self, phases)


def h3o_jordan(x: Element, y: Element) -> Element:
    space = _h3o_space(x)
    return Element(space, space.jordan_array(x.coords, y.coords))


def h3o_jordan_direct(x: Element, y: Element) -> Element:
    """Jordan product evaluated on octonion matrices, without the tensor."""
    return Element(_h3o_space(x), _jordan_direct(x.coords, y.coords))


def h3o_triple(x: Element, y: Element, z: Element) -> Element:
    return _h3o_space(x).triple(x, y, z)


def _h3o_space(x: Element) -> H3O:
    if not isinstance(x.space, H3O):
        raise BadSize(f"{x.space.label} is not h3o")
    return x.space


def h3o_diagonal(space: H3O, values: Sequence[complex]) -> Element:
    """diag(v1, v2, v3); a tripotent when every |v_i| is 0 or 1."""
    values = np.asarray(values, dtype=complex)
    if values.shape != (3,):
        raise BadSize("h3o_diagonal needs three values")
    coords = np.zeros(H3O_DIM, dtype=complex)
    coords[:3] = values
    return Element(space, coords)


def h3o_tripotent(space: H3O, kind: str, index: int = 0, phase: complex = 1.0) -> Element:
    """Model tripotents: ``unit``, ``minimal`` (E_kk) or ``complement`` (1 - E_kk)."""
    if kind == "unit":
        values = np.ones(3)
    elif kind in ("minimal", "complement"):
        if not 0 <= index < 3:
            raise BadSize(f"Diagonal index must be 0, 1 or 2, got {index}")
        values = np.zeros(3) if kind == "minimal" else np.ones(3)
        values[index] = 1.0 - values[index]
    else:
        raise ValueError(f"Unknown h3o tripotent kind {kind!r}")
    return h3o_diagonal(space, phase * values)


def spin10_to_h3o(space: H3O, x: np.ndarray) -> Element:
    """C^10 onto M0(E11): [[x1 + i x2, i z], [i z⋄, x1 - i x2]] on the lower block."""
    x = np.asarray(x, dtype=complex)
    if x.shape[-1] != 10:
        raise BadSize(f"Expected 10 spin coordinates, got {x.shape[-1]}")
    M = np.zeros(x.shape[:-1] + (3, 3, 8), dtype=complex)
    M[..., 1, 1, 0] = x[..., 0] + 1j * x[..., 1]
    M[..., 2, 2, 0] = x[..., 0] - 1j * x[..., 1]
    M[..., 1, 2, :] = 1j * x[..., 2:]
    return Element(space, hermitian_to_coords(M))


def c5_to_h3o(space: H3O, x: np.ndarray) -> Element:
    """(x1, x2) ↦ [[0, x1, x2], [x1⋄, 0, 0], [x2⋄, 0, 0]]."""
    x = np.asarray(x, dtype=complex)
    if x.shape[-1] != 16:
        raise BadSize(f"Expected 16 C5 coordinates, got {x.shape[-1]}")
    M = np.zeros(x.shape[:-1] + (3, 3, 8), dtype=complex)
    M[..., 0, 1, :] = x[..., :8]
    M[..., 0, 2, :] = x[..., 8:]
    return Element(space, hermitian_to_coords(M))


def _image_subspace(images: np.ndarray, tol: ToleranceConfig) -> Subspace:
    return Subspace.from_columns(images.T, tol)


@dataclass
class H3OPeirceReport:
    """Peirce structure of E11, 1 - E11 and the unit, with sampled isomorphism residuals."""

    ranks_minimal: Tuple[int, int, int] = (0, 0, 0)
    ranks_complement: Tuple[int, int, int] = (0, 0, 0)
    ranks_unit: Tuple[int, int, int] = (0, 0, 0)
    e1_is_c5_block: bool = False
    e0_is_spin10_block: bool = False
    complement_swaps: bool = False
    c5_residual: float = 0.0
    spin10_residual: float = 0.0
    samples: int = 0
    expected: Dict[str, Tuple[int, int, int]] = field(
        default_factory=lambda: {
            "minimal": (1, 16, 10),
            "complement": (10, 16, 1),
            "unit": (27, 0, 0),
        }
    )

    def holds(self, tol: ToleranceConfig = DEFAULT_TOLERANCE) -> bool:
        return (
            self.ranks_minimal == self.expected["minimal"]
            and self.ranks_complement == self.expected["complement"]
            and self.ranks_unit == self.expected["unit"]
            and self.e1_is_c5_block
            and self.e0_is_spin10_block
            and self.complement_swaps
            and self.c5_residual <= tol.eq_tol
            and self.spin10_residual <= tol.eq_tol
        )


def h3o_peirce_of_minimal(
    samples: int = 1000,
    rng_seed=None,
    tol: ToleranceConfig = DEFAULT_TOLERANCE,
) -> H3OPeirceReport:
    """Peirce spaces of the model tripotents and the C5 / spin(10) identifications."""
    space = make_factor("h3o")
    rng = np.random.default_rng(rng_seed)
    u = h3o_tripotent(space, "minimal")
    frame_u = peirce_frame(u, tol)
    frame_c = peirce_frame(h3o_tripotent(space, "complement"), tol)
    report = H3OPeirceReport(
        ranks_minimal=frame_u.ranks,
        ranks_complement=frame_c.ranks,
        ranks_unit=peirce_frame(space.unit(), tol).ranks,
        samples=samples,
    )

    c5_images = np.stack([c5_to_h3o(space, row).coords for row in np.eye(16)])
    spin_images = np.stack([spin10_to_h3o(space, row).coords for row in np.eye(10)])
    report.e1_is_c5_block = subspace_equal(frame_u.E1, _image_subspace(c5_images, tol), tol)
    report.e0_is_spin10_block = subspace_equal(frame_u.E0, _image_subspace(spin_images, tol), tol)
    report.complement_swaps = (
        subspace_equal(frame_c.E2, frame_u.E0, tol)
        and subspace_equal(frame_c.E1, frame_u.E1, tol)
        and subspace_equal(frame_c.E0, frame_u.E2, tol)
    )

    c5, spin = make_factor("c5"), make_factor("spin", (10,))

    def gaussian(d: int) -> np.ndarray:
        return (rng.standard_normal((samples, d)) + 1j * rng.standard_normal((samples, d))) / np.sqrt(2)

    for name, source, embed in (("c5", c5, c5_images), ("spin10", spin, spin_images)):
        x, y, z = (gaussian(source.dim) for _ in range(3))
        image = source.product_array(x, y, z) @ embed
        direct = space.product_array(x @ embed, y @ embed, z @ embed)
        scale = np.maximum(
            1.0, np.linalg.norm(x, axis=1) * np.linalg.norm(y, axis=1) * np.linalg.norm(z, axis=1)
        )
        residual = float(np.max(np.linalg.norm(image - direct, axis=1) / scale))
        setattr(report, f"{name}_residual", residual)

    log_event(
        logger,
        logging.DEBUG,
        "h3o Peirce report",
        extra={
            "ranks_minimal": report.ranks_minimal,
            "c5_residual": report.c5_residual,
            "spin10_residual": report.spin10_residual,
        },
    )
    return report
