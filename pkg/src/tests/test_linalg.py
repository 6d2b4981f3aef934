from fractions import Fraction

import numpy as np
import pytest

from hermrank.arith import ONE, ZERO, GaussianRational
from hermrank.errors import DimensionMismatch, DivisionByZero, InvalidInput, NotHermitian
from hermrank.linalg import (
    HermitianMatrix,
    congruence_diagonalize,
    conjugate_transpose,
    identity,
    matmul,
    matrix_inverse,
    matrix_rank,
    nullspace,
    signature,
    to_matrix,
)


def random_hermitian(rng: np.random.Generator, n: int, bound: int = 3, rank: int | None = None) -> HermitianMatrix:
    """정수 Hermitian 행렬. rank 를 주면 V diag V† 로 그 rank 이하를 만든다."""
    if rank is None:
        rows = [[ZERO] * n for _ in range(n)]
        for i in range(n):
            rows[i][i] = GaussianRational(int(rng.integers(-bound, bound + 1)))
            for j in range(i + 1, n):
                c = GaussianRational(int(rng.integers(-bound, bound + 1)), int(rng.integers(-bound, bound + 1)))
                rows[i][j], rows[j][i] = c, c.conj()
        return HermitianMatrix.from_rows(rows)
    v = to_matrix([[int(x) for x in rng.integers(-bound, bound + 1, size=rank)] for _ in range(n)])
    d = [[GaussianRational(int(rng.choice([-2, -1, 1, 2]))) if i == j else ZERO for j in range(rank)] for i in range(rank)]
    return HermitianMatrix.from_rows(matmul(matmul(v, d), conjugate_transpose(v)))


def random_invertible(rng: np.random.Generator, n: int, bound: int = 3):
    while True:
        s = to_matrix([[GaussianRational(int(rng.integers(-bound, bound + 1)), int(rng.integers(-bound, bound + 1))) for _ in range(n)] for _ in range(n)])
        if matrix_rank(s) == n:
            return s


def diag(values):
    n = len(values)
    return [[GaussianRational(values[i]) if i == j else ZERO for j in range(n)] for i in range(n)]


def test_hermitian_matrix_rejects_asymmetric():
    with pytest.raises(NotHermitian):
        HermitianMatrix.from_rows(to_matrix([[1, 2], [3, 1]]))
    with pytest.raises(NotHermitian):
        HermitianMatrix.from_rows([[GaussianRational(0, 1)]])


def test_hermitian_matrix_rejects_ragged():
    with pytest.raises(DimensionMismatch):
        HermitianMatrix.from_rows([[ONE, ZERO], [ZERO]])


def test_signature_of_swap_matrix():
    c = HermitianMatrix.from_rows(to_matrix([[0, 1], [1, 0]]))
    sig = signature(c)
    assert (sig.p, sig.q, sig.z) == (1, 1, 0)
    assert sig.inertia == "(1, 1, 0)"


def test_signature_of_purely_imaginary_off_diagonal():
    c = HermitianMatrix.from_rows([[ZERO, GaussianRational(0, 1)], [GaussianRational(0, -1), ZERO]])
    sig = signature(c)
    assert (sig.p, sig.q, sig.z) == (1, 1, 0)


def test_signature_of_zero_matrix():
    sig = signature(HermitianMatrix.from_rows(to_matrix([[0, 0], [0, 0]])))
    assert (sig.p, sig.q, sig.z) == (0, 0, 2)


def test_diagonalization_identities():
    rng = np.random.default_rng(3)
    for n in (1, 2, 4, 6):
        c = random_hermitian(rng, n)
        cd = congruence_diagonalize(c)
        p = [list(r) for r in cd.transform]
        assert matmul(matmul(conjugate_transpose(p), c.to_rows()), p) == diag(cd.diagonal)
        assert cd.reconstruct() == c.to_rows()
        # (P†)^{-1} D P^{-1} = C
        p_inv = matrix_inverse(p)
        assert matmul(matmul(conjugate_transpose(p_inv), diag(cd.diagonal)), p_inv) == c.to_rows()


def test_signature_rank_matches_matrix_rank():
    rng = np.random.default_rng(11)
    for n, r in [(4, 2), (5, 3), (6, 1)]:
        c = random_hermitian(rng, n, rank=r)
        sig = signature(c)
        assert sig.rank == matrix_rank(c.to_rows())
        assert sig.rank <= r
        assert sig.p + sig.q + sig.z == n


@pytest.mark.parametrize("seed", [0, 1, 2, 3])
def test_sylvester_invariance(seed):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(1, 7))
    c = random_hermitian(rng, n)
    base = signature(c)
    for _ in range(3):
        s = random_invertible(rng, n)
        assert signature(c.congruent(s)) == base


def test_pivot_policies_agree():
    rng = np.random.default_rng(5)
    for _ in range(5):
        c = random_hermitian(rng, 5)
        assert signature(c, "smallest") == signature(c, "first")
        assert congruence_diagonalize(c, "first").reconstruct() == c.to_rows()


def test_unknown_pivot_policy():
    with pytest.raises(InvalidInput):
        congruence_diagonalize(HermitianMatrix.from_rows([[ONE]]), "largest")


def test_matrix_inverse_and_singular():
    m = to_matrix([[2, 1], [1, 1]])
    assert matmul(m, matrix_inverse(m)) == identity(2)
    with pytest.raises(DivisionByZero):
        matrix_inverse(to_matrix([[1, 2], [2, 4]]))


def test_nullspace_is_kernel():
    m = to_matrix([[1, 2, 3], [2, 4, 6]])
    basis = nullspace(m)
    assert len(basis) == 2
    for v in basis:
        assert all(sum((a * x for a, x in zip(row, v)), ZERO) == ZERO for row in m)
    assert matrix_rank(basis) == 2


def test_matrix_rank_edge_cases():
    assert matrix_rank([]) == 0
    assert matrix_rank(to_matrix([[0, 0]])) == 0
    assert matrix_rank(to_matrix([[Fraction(1, 2), 1], [1, 2]])) == 1


@pytest.mark.slow
def test_sylvester_invariance_campaign():
    rng = np.random.default_rng(2024)
    for _ in range(200):
        n = int(rng.integers(1, 13))
        c = random_hermitian(rng, n)
        cd = congruence_diagonalize(c)
        assert cd.reconstruct() == c.to_rows()
        base = cd.signature()
        for _ in range(3):
            assert signature(c.congruent(random_invertible(rng, n))) == base
