"""Sampled identity suite for the Cayley-Dickson ladder."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional

import numpy as np

from src.cayley_dickson.algebra import (
    MAX_LEVEL,
    diamond_array,
    multiply_array,
    star_array,
    unit_array,
)
from src.cayley_dickson.isomorphisms import as_spin
from src.errors import BadSize
from src.numeric import DEFAULT_TOLERANCE, ToleranceConfig
from src.utils.logger import get_logger, log_event

logger = get_logger("cayley_dickson.identities")

# Residual above which an expected violation counts as exhibited.
VIOLATION_THRESHOLD = 1e-6


@dataclass
class IdentityCheck:
    """Largest scaled residual of one identity over the samples.

    Attributes:
        expected: Whether the identity should hold at this level.
        witness: Coordinates of the worst sample, kept for violations.
    """

    name: str
    expected: bool
    residual: float = 0.0
    witness: Optional[Dict[str, List[List[float]]]] = None

    def holds(self, tol: ToleranceConfig = DEFAULT_TOLERANCE) -> bool:
        return self.residual <= tol.eq_tol

    def met(self, tol: ToleranceConfig = DEFAULT_TOLERANCE) -> bool:
        if self.expected:
            return self.holds(tol)
        return self.residual > VIOLATION_THRESHOLD


@dataclass
class IdentityReport:
    level: int
    samples: int
    checks: Dict[str, IdentityCheck] = field(default_factory=dict)

    def failures(self, tol: ToleranceConfig = DEFAULT_TOLERANCE) -> List[str]:
        return [name for name, check in self.checks.items() if not check.met(tol)]

    def all_met(self, tol: ToleranceConfig = DEFAULT_TOLERANCE) -> bool:
        return not self.failures(tol)

    @property
    def max_residual(self) -> float:
        return max((c.residual for c in self.checks.values() if c.expected), default=0.0)


def _pairs(arr: np.ndarray) -> List[List[float]]:
    return [[float(v.real), float(v.imag)] for v in arr]


def _inner(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    return np.sum(x * np.conj(y), axis=-1, keepdims=True)


def _identity_table(level: int) -> Dict[str, Callable[..., np.ndarray]]:
    """Identity name -> residual vector function of batched (x, y, z)."""
    m, dia, st = multiply_array, diamond_array, star_array
    one = unit_array(level)
    spin = as_spin(level)

    def jordan(a, b):
        return 0.5 * (m(a, b) + m(b, a))

    def up(a):
        return np.concatenate([a, np.zeros_like(a)], axis=-1)

    def scalar_part(a):
        return a[..., :1] * one

    return {
        "unit": lambda x, y, z: np.concatenate([m(one, x) - x, m(x, one) - x], axis=-1),
        "diamond_involution": lambda x, y, z: dia(dia(x)) - x,
        "star_involution": lambda x, y, z: st(st(x)) - x,
        "star_is_conjugated_diamond": lambda x, y, z: np.concatenate(
            [st(x) - np.conj(dia(x)), st(x) - dia(np.conj(x))], axis=-1
        ),
        "diamond_reverses_products": lambda x, y, z: dia(m(x, y)) - m(dia(y), dia(x)),
        "conjugation_multiplicative": lambda x, y, z: np.conj(m(x, y)) - m(np.conj(x), np.conj(y)),
        "embedding": lambda x, y, z: np.concatenate(
            [m(up(x), up(y)) - up(m(x, y)), dia(up(x)) - up(dia(x)), st(up(x)) - up(st(x))],
            axis=-1,
        ),
        "scalar_action": lambda x, y, z: np.concatenate(
            [m(x, scalar_part(y)) - y[..., :1] * x, m(scalar_part(y), x) - y[..., :1] * x], axis=-1
        ),
        "diamond_fixed_is_scalar": lambda x, y, z: 0.5 * (x + dia(x)) - scalar_part(x),
        "norm_is_scalar": lambda x, y, z: m(dia(x), x) - scalar_part(m(dia(x), x)),
        "commutativity": lambda x, y, z: m(x, y) - m(y, x),
        "associativity": lambda x, y, z: m(m(x, y), z) - m(x, m(y, z)),
        "alternativity": lambda x, y, z: np.concatenate(
            [m(x, m(x, y)) - m(m(x, x), y), m(m(y, x), x) - m(y, m(x, x))], axis=-1
        ),
        "linearized_alternativity": lambda x, y, z: (
            m(x, m(y, z)) + m(z, m(y, x)) - m(m(x, y), z) - m(m(z, y), x)
        ),
        "inner_product_formula": lambda x, y, z: np.concatenate(
            [
                0.5 * (m(x, st(y)) + m(np.conj(y), dia(x))) - _inner(x, y) * one,
                _inner(x, y) - _inner(dia(x), dia(y)),
            ],
            axis=-1,
        ),
        "unit_is_unitary": lambda x, y, z: np.concatenate(
            [
                spin.product_array(one, one, x) - x,
                spin.product_array(one, x, one) - st(x),
                spin.product_array(x, one, y) - jordan(x, y),
            ],
            axis=-1,
        ),
        "inner_product_via_jordan": lambda x, y, z: (
            0.5 * (jordan(x, st(y)) + jordan(dia(x), np.conj(y))) - _inner(x, y) * one
        ),
        "triple_product_formula": lambda x, y, z: np.concatenate(
            [
                spin.product_array(x, y, z) - 0.5 * (m(x, m(st(y), z)) + m(z, m(st(y), x))),
                spin.product_array(x, y, z) - 0.5 * (m(m(x, st(y)), z) + m(m(z, st(y)), x)),
            ],
            axis=-1,
        ),
        "adjoint_laws": lambda x, y, z: np.concatenate(
            [_inner(m(x, st(z)), y) - _inner(x, m(y, z)), _inner(m(st(z), x), y) - _inner(x, m(z, y))],
            axis=-1,
        ),
    }


def expected_identities(level: int) -> Dict[str, bool]:
    """Which identities hold at ``level``: A1 is commutative, A2 associative."""
    table = {name: True for name in _identity_table(level)}
    table["commutativity"] = level <= 1
    table["associativity"] = level <= 2
    return table


def identity_suite(
    level: int,
    samples: int = 1000,
    rng_seed=None,
    tol: ToleranceConfig = DEFAULT_TOLERANCE,
) -> IdentityReport:
    """Evaluate every identity on ``samples`` random triples at ``level``.

    Residuals are scaled by max(1, ||x|| ||y|| ||z||). Identities expected
    to fail keep the worst sample as witness.

    Raises:
        BadSize: If the level is outside 0..3.
    """
    if not 0 <= level <= MAX_LEVEL:
        raise BadSize(f"Cayley-Dickson level must be in 0..{MAX_LEVEL}, got {level}")
    rng = np.random.default_rng(rng_seed)
    d = 2**level
    x, y, z = ((rng.standard_normal((samples, d)) + 1j * rng.standard_normal((samples, d))) / np.sqrt(2) for _ in range(3))
    scale = np.maximum(
        1.0, np.linalg.norm(x, axis=-1) * np.linalg.norm(y, axis=-1) * np.linalg.norm(z, axis=-1)
    )

    report = IdentityReport(level=level, samples=samples)
    expected = expected_identities(level)
    for name, residual_fn in _identity_table(level).items():
        residuals = np.linalg.norm(residual_fn(x, y, z), axis=-1) / scale
        worst = int(np.argmax(residuals))
        check = IdentityCheck(name=name, expected=expected[name], residual=float(residuals[worst]))
        if not check.expected or not check.holds(tol):
            check.witness = {"x": _pairs(x[worst]), "y": _pairs(y[worst]), "z": _pairs(z[worst])}
        report.checks[name] = check

    log_event(
        logger,
        logging.DEBUG,
        "Identity suite evaluated",
        extra={"level": level, "samples": samples, "failures": report.failures(tol)},
    )
    return report
