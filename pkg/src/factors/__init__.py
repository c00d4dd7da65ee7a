"""Cartan factors of types 1-4 and the factor registry."""

from src.factors.involutive import (
    AntisymLe0Verdict,
    EvenRankReport,
    antisym_even_rank_law,
    antisym_is_complete,
    antisym_le0,
    antisym_unitary,
    symmetric_construct_tripotent,
    transpose_residual,
)
from src.factors.matrix import MATRIX_KINDS, MatrixFactor, random_tripotent, random_unitary
from src.factors.registry import FACTOR_KINDS, make_factor, make_from_label, parse_factor_spec
from src.factors.spin import (
    SpinFactor,
    classify_spin_tripotent,
    random_spin_tripotent,
    spin_conjugate,
    spin_norm,
    spin_relation,
    unitary_above_minimal,
)
from src.factors.von_neumann import (
    MvnVerdict,
    PartialIsometry,
    VnOrderVerdict,
    is_complete_matrix_tripotent,
    is_finite_by_rank,
    mvn_equivalent,
    partial_isometry,
    vn_le0,
    vn_leq2,
    vn_order,
)

__all__ = [
    "AntisymLe0Verdict",
    "EvenRankReport",
    "FACTOR_KINDS",
    "MATRIX_KINDS",
    "MatrixFactor",
    "MvnVerdict",
    "PartialIsometry",
    "SpinFactor",
    "VnOrderVerdict",
    "antisym_even_rank_law",
    "antisym_is_complete",
    "antisym_le0",
    "antisym_unitary",
    "classify_spin_tripotent",
    "is_complete_matrix_tripotent",
    "is_finite_by_rank",
    "make_factor",
    "make_from_label",
    "mvn_equivalent",
    "parse_factor_spec",
    "partial_isometry",
    "random_spin_tripotent",
    "random_tripotent",
    "random_unitary",
    "spin_conjugate",
    "spin_norm",
    "spin_relation",
    "symmetric_construct_tripotent",
    "transpose_residual",
    "unitary_above_minimal",
    "vn_le0",
    "vn_leq2",
    "vn_order",
]
