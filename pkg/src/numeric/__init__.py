"""Complex dense linear algebra and subspace calculus."""

from src.numeric.linalg import (
    cluster_spectrum,
    hermitian_eig,
    is_projection,
    matrix_rank,
    op_norm,
    projection_leq,
    svd,
)
from src.numeric.subspace import (
    Subspace,
    inclusion_residual,
    orthogonal_complement,
    projector_distance,
    subspace_equal,
    subspace_intersection,
    subspace_leq,
    subspace_sum,
)
from src.numeric.tolerance import DEFAULT_TOLERANCE, ToleranceConfig

__all__ = [
    "DEFAULT_TOLERANCE",
    "Subspace",
    "ToleranceConfig",
    "cluster_spectrum",
    "hermitian_eig",
    "inclusion_residual",
    "is_projection",
    "matrix_rank",
    "op_norm",
    "orthogonal_complement",
    "projection_leq",
    "projector_distance",
    "subspace_equal",
    "subspace_intersection",
    "subspace_leq",
    "subspace_sum",
    "svd",
]
