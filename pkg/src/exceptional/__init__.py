"""The exceptional factors: hermitian 3x3 octonion matrices and C5."""

from src.exceptional.c5 import (
    C5,
    C5Le0Verdict,
    CompletionCheck,
    NoUnitaryReport,
    c5_complete_above,
    c5_completion_check,
    c5_embed,
    c5_le0,
    c5_no_unitary,
    c5_orthogonal_complement_rank,
    c5_tripotent,
    c5_triple,
    c5_triple_matrix_form,
    swap_coordinates,
)
from src.exceptional.h3o import (
    H3O,
    H3OPeirceReport,
    c5_to_h3o,
    h3o_diagonal,
    h3o_jordan,
    h3o_jordan_direct,
    h3o_peirce_of_minimal,
    h3o_tripotent,
    h3o_triple,
    spin10_to_h3o,
)
from src.exceptional.octonion_matrix import (
    H3O_DIM,
    coords_to_hermitian,
    diamond_transpose,
    hermitian_residual,
    hermitian_to_coords,
    octonion_matmul,
)

__all__ = [
    "C5",
    "C5Le0Verdict",
    "CompletionCheck",
    "H3O",
    "H3OPeirceReport",
    "H3O_DIM",
    "NoUnitaryReport",
    "c5_complete_above",
    "c5_completion_check",
    "c5_embed",
    "c5_le0",
    "c5_no_unitary",
    "c5_orthogonal_complement_rank",
    "c5_to_h3o",
    "c5_tripotent",
    "c5_triple",
    "c5_triple_matrix_form",
    "coords_to_hermitian",
    "diamond_transpose",
    "h3o_diagonal",
    "h3o_jordan",
    "h3o_jordan_direct",
    "h3o_peirce_of_minimal",
    "h3o_tripotent",
    "h3o_triple",
    "hermitian_residual",
    "hermitian_to_coords",
    "octonion_matmul",
    "spin10_to_h3o",
]
