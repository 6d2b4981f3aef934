from hermrank.linalg.hermitian import (
    PIVOT_POLICIES,
    CongruenceDiagonalization,
    HermitianMatrix,
    Signature,
    congruence_diagonalize,
    signature,
)
from hermrank.linalg.matrix import (
    Matrix,
    conjugate_transpose,
    identity,
    matmul,
    matrix_inverse,
    matrix_rank,
    nullspace,
    row_echelon,
    to_matrix,
    zeros,
)

__all__ = [
    "PIVOT_POLICIES",
    "CongruenceDiagonalization",
    "HermitianMatrix",
    "Matrix",
    "Signature",
    "congruence_diagonalize",
    "conjugate_transpose",
    "identity",
    "matmul",
    "matrix_inverse",
    "matrix_rank",
    "nullspace",
    "row_echelon",
    "signature",
    "to_matrix",
    "zeros",
]
