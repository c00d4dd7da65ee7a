"""Factor catalogues and small helpers shared by the suite modules."""

from __future__ import annotations

from typing import Any, Dict, Iterator, List, Sequence, Tuple

import numpy as np

from src.campaign.base import SuiteContext
from src.campaign.element_io import element_to_dict
from src.factors.registry import parse_factor_spec
from src.triples.space import Element, TripleSpace

# Spaces for the axiom sweep
AXIOM_FACTORS = (
    "rectangular:1,1",
    "rectangular:1,2",
    "rectangular:2,3",
    "rectangular:4,4",
    "symmetric:6",
    "antisymmetric:5",
    "antisymmetric:6",
    "spin:10",
    "cayley_dickson:0",
    "cayley_dickson:1",
    "cayley_dickson:2",
    "cayley_dickson:3",
    "c5",
    "h3o",
    "spin:3+symmetric:2",
)

# Spaces whose tripotents the engine suites sample
TRIPOTENT_FACTORS = (
    "rectangular:1,2",
    "rectangular:2,3",
    "rectangular:3,3",
    "symmetric:3",
    "antisymmetric:4",
    "antisymmetric:5",
    "spin:5",
    "cayley_dickson:2",
    "c5",
    "h3o",
    "spin:3+symmetric:2",
)

# Sample counts a full run reaches whatever the trial budget
AXIOM_SAMPLES = 1000
HIERARCHY_PAIRS = 10_000
CD_IDENTITY_SAMPLES = 1000
EVEN_RANK_SAMPLES = 1000
FINITENESS_TRIPOTENTS = 20
C5_PAIRS = 200
MODULAR_M4_TRIPLES = 10_000


def spaces(specs: Sequence[str]) -> List[TripleSpace]:
    return [parse_factor_spec(spec) for spec in specs]


def sweep(
    ctx: SuiteContext, specs: Sequence[str], fraction: float, minimum: int = 1
) -> Iterator[Tuple[TripleSpace, np.random.Generator]]:
    """(space, generator) pairs, ``ctx.budget(fraction)`` per space.

    Trial indices run across all spaces, so every pair draws from its own
    stream of the campaign seed.
    """
    count = ctx.budget(fraction, minimum)
    index = 0
    for space in spaces(specs):
        for _ in range(count):
            yield space, ctx.rng(index)
            index += 1


def elements(**named: Element) -> Dict[str, Any]:
    """JSON-ready witness payload of named elements."""
    return {name: element_to_dict(x) for name, x in named.items()}


def seed_of(rng: np.random.Generator) -> int:
    """Integer seed drawn from a trial generator, for APIs that take one."""
    return int(rng.integers(2**32))


def unit_phase(rng: np.random.Generator) -> complex:
    return complex(np.exp(2j * np.pi * rng.random()))
