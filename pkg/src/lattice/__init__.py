"""Projection lattices of matrix algebras and their sampled laws."""

from src.lattice.modularity import (
    LatticeReport,
    PerspectivityVerdict,
    complement_laws,
    is_common_complement,
    modular_law_exact,
    modular_law_sample,
    orthomodular_sample,
    perspectivity_check,
    property_f_sample,
    random_projection,
    random_subprojection,
    unitary_covariance_sample,
)
from src.lattice.projections import (
    ProjectionLatticeElement,
    complement,
    from_subspace,
    from_vectors,
    identity,
    join,
    lattice_equal,
    lattice_leq,
    meet,
    projection,
    zero,
)

__all__ = [
    "LatticeReport",
    "PerspectivityVerdict",
    "ProjectionLatticeElement",
    "complement",
    "complement_laws",
    "from_subspace",
    "from_vectors",
    "identity",
    "is_common_complement",
    "join",
    "lattice_equal",
    "lattice_leq",
    "meet",
    "modular_law_exact",
    "modular_law_sample",
    "orthomodular_sample",
    "perspectivity_check",
    "property_f_sample",
    "random_projection",
    "random_subprojection",
    "unitary_covariance_sample",
    "zero",
]
