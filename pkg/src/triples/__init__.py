"""Factor-agnostic JB*-triple machinery."""

from src.triples.characterizations import (
    order_characterizations,
    orthogonality_characterizations,
    peirce2_equivalence_characterizations,
    peirce2_inclusion_characterizations,
    peirce_arithmetic_residuals,
    triple_axiom_residuals,
)
from src.triples.jordan import JordanStructure, jordan_at
from src.triples.operators import L_operator, Q_operator, TripotentCheck, is_tripotent
from src.triples.peirce import PeirceFrame, peirce_frame, peirce_ranks
from src.triples.relations import RELATION_KINDS, RelationVerdict, relation
from src.triples.space import (
    DirectSum,
    Element,
    FactorLabel,
    Subtriple,
    TripleSpace,
    direct_sum,
    ensure_same_space,
    subtriple,
)
from src.triples.tripotents import (
    CoincidenceReport,
    FinitenessReport,
    MaximalityReport,
    TripotentClass,
    classify_tripotent,
    extend_to_complete,
    is_finite_tripotent_sampled,
    peirce2_maximality_sample,
    preorder_coincidence,
    random_complete_tripotent,
    random_tripotent_in,
    range_tripotent_approx,
    require_tripotent,
    tripotent_in_subspace,
)

__all__ = [
    "CoincidenceReport",
    "DirectSum",
    "Element",
    "FactorLabel",
    "FinitenessReport",
    "JordanStructure",
    "L_operator",
    "MaximalityReport",
    "PeirceFrame",
    "Q_operator",
    "RELATION_KINDS",
    "RelationVerdict",
    "Subtriple",
    "TripleSpace",
    "TripotentCheck",
    "TripotentClass",
    "classify_tripotent",
    "direct_sum",
    "ensure_same_space",
    "extend_to_complete",
    "is_finite_tripotent_sampled",
    "is_tripotent",
    "jordan_at",
    "order_characterizations",
    "orthogonality_characterizations",
    "peirce2_equivalence_characterizations",
    "peirce2_inclusion_characterizations",
    "peirce2_maximality_sample",
    "peirce_arithmetic_residuals",
    "peirce_frame",
    "peirce_ranks",
    "preorder_coincidence",
    "random_complete_tripotent",
    "random_tripotent_in",
    "range_tripotent_approx",
    "relation",
    "require_tripotent",
    "subtriple",
    "triple_axiom_residuals",
    "tripotent_in_subspace",
]
