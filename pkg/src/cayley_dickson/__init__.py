"""Cayley-Dickson algebras A0..A3 and their identities."""

from src.cayley_dickson.algebra import (
    MAX_LEVEL,
    CDElement,
    bar,
    cd_basis,
    cd_inner,
    cd_product,
    cd_unit,
    diamond,
    diamond_array,
    embed,
    multiply_array,
    random_cd,
    star,
    star_array,
)
from src.cayley_dickson.identities import (
    IdentityCheck,
    IdentityReport,
    expected_identities,
    identity_suite,
)
from src.cayley_dickson.isomorphisms import (
    as_spin,
    from_element,
    iso_A1_to_C2,
    iso_A2_to_M2,
    iso_M2_to_A2,
    to_element,
)

__all__ = [
    "CDElement",
    "IdentityCheck",
    "IdentityReport",
    "MAX_LEVEL",
    "as_spin",
    "bar",
    "cd_basis",
    "cd_inner",
    "cd_product",
    "cd_unit",
    "diamond",
    "diamond_array",
    "embed",
    "expected_identities",
    "from_element",
    "identity_suite",
    "iso_A1_to_C2",
    "iso_A2_to_M2",
    "iso_M2_to_A2",
    "multiply_array",
    "random_cd",
    "star",
    "star_array",
    "to_element",
]
