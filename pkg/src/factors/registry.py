"""Factor construction by kind name."""

from __future__ import annotations

from functools import lru_cache
from typing import Dict, Sequence, Tuple

from src.errors import BadSize
from src.triples.space import FactorLabel, TripleSpace, direct_sum

# kind -> (accepted size counts, description)
FACTOR_KINDS: Dict[str, Tuple[Tuple[int, ...], str]] = {
    "rectangular": ((2,), "m x n complex matrices, {a,b,c} = (ab*c + cb*a)/2"),
    "symmetric": ((1,), "n x n symmetric matrices"),
    "antisymmetric": ((1,), "n x n antisymmetric matrices, n >= 2"),
    "spin": ((1,), "spin factor C^n"),
    "cayley_dickson": ((1,), "Cayley-Dickson level n <= 3 as the spin factor C^(2^n)"),
    "c5": ((0,), "1 x 2 octonion matrices (dim 16)"),
    "h3o": ((0,), "hermitian 3 x 3 octonion matrices (dim 27)"),
}


def make_factor(kind: str, sizes: Sequence[int] = ()) -> TripleSpace:
    """Build (or reuse) the triple space of the given kind.

    Spaces are cached by (kind, sizes) so their structure tensors are
    computed once per process.

    Raises:
        BadSize: Unknown kind, wrong number of sizes or invalid sizes.
    """
    return _make_factor(kind, tuple(int(s) for s in sizes))


@lru_cache(maxsize=None)
def _make_factor(kind: str, sizes: Tuple[int, ...]) -> TripleSpace:
    if kind not in FACTOR_KINDS:
        raise BadSize(f"Unknown factor kind {kind!r}; known: {', '.join(FACTOR_KINDS)}")
    counts, _ = FACTOR_KINDS[kind]
    if len(sizes) not in counts:
        raise BadSize(f"{kind} takes {counts[0]} size(s), got {len(sizes)}")
    if any(s < 0 for s in sizes):
        raise BadSize(f"Sizes must be nonnegative, got {sizes}")

    if kind in ("rectangular", "symmetric", "antisymmetric"):
        from src.factors.matrix import MatrixFactor

        return MatrixFactor(kind, *sizes)
    if kind == "spin":
        from src.factors.spin import SpinFactor

        return SpinFactor(sizes[0])
    if kind == "cayley_dickson":
        from src.cayley_dickson import as_spin

        return as_spin(sizes[0])
    if kind == "c5":
        from src.exceptional import C5

        return C5()
    from src.exceptional import H3O

    return H3O()


def make_from_label(label: FactorLabel) -> TripleSpace:
    """Rebuild a space (including direct sums) from its label.

    Raises:
        BadSize: For subtriple labels, which carry no constructor.
    """
    if label.parts:
        return direct_sum([make_from_label(p) for p in label.parts])
    if label.kind == "subtriple":
        raise BadSize("Subtriples cannot be rebuilt from a label alone")
    return make_factor(label.kind, label.sizes)


def parse_factor_spec(spec: str) -> TripleSpace:
    """Parse ``kind``, ``kind:m,n`` or ``+``-joined specs into a space.

    Examples: ``rectangular:2,3``, ``spin:4``, ``h3o``, ``spin:3+symmetric:2``.

    Raises:
        BadSize: On malformed specs.
    """
    parts = [p.strip() for p in spec.split("+") if p.strip()]
    if not parts:
        raise BadSize("Empty factor spec")
    spaces = []
    for part in parts:
        kind, _, raw = part.partition(":")
        try:
            sizes = tuple(int(s) for s in raw.split(",") if s.strip()) if raw else ()
        except ValueError as exc:
            raise BadSize(f"Bad sizes in factor spec {part!r}") from exc
        spaces.append(make_factor(kind.strip(), sizes))
    return direct_sum(spaces)
