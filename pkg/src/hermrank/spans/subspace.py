# src/hermrank/spans/subspace.py
"""
ℂ^{n+1} 의 선형 부분공간 (= ℙⁿ 의 m 차원 사영 부분공간) 과 임의 추출.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np

from hermrank.arith import GaussianRational, gaussian
from hermrank.errors import (
    DimensionMismatch,
    HypothesisViolated,
    InvalidInput,
    RankDeficientParametrization,
)
from hermrank.linalg import matrix_rank, nullspace
from hermrank.poly import SignatureForm
from hermrank.utils.logging_utils import get_logger
from hermrank.utils.seeding import make_rng

log = get_logger(__name__)

Vector = Tuple[GaussianRational, ...]


@dataclass(frozen=True)
class LinearSubspace:
    """
    basis 의 행들이 부분공간을 생성한다 (행 개수 = m+1, 모두 일차독립).
    basis 가 비어 있으면 0 부분공간 (projective_dim = -1).
    """

    ambient: int
    basis: Tuple[Vector, ...]

    def __post_init__(self) -> None:
        if self.ambient < 1:
            raise InvalidInput(f"[LinearSubspace] ambient must be positive, got {self.ambient}")
        rows = tuple(tuple(gaussian(x) for x in row) for row in self.basis)
        for row in rows:
            if len(row) != self.ambient:
                raise DimensionMismatch(f"[LinearSubspace] basis vector of length {len(row)}, ambient {self.ambient}")
        if rows and matrix_rank(rows) != len(rows):
            raise RankDeficientParametrization(f"[LinearSubspace] {len(rows)} basis vectors are linearly dependent")
        object.__setattr__(self, "basis", rows)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], ambient: Optional[int] = None) -> "LinearSubspace":
        if ambient is None:
            if not rows:
                raise InvalidInput("[LinearSubspace.from_rows] ambient required for the zero subspace")
            ambient = len(rows[0])
        return cls(ambient=ambient, basis=tuple(tuple(r) for r in rows))

    @classmethod
    def whole(cls, ambient: int) -> "LinearSubspace":
        return cls(ambient, tuple(tuple(1 if i == j else 0 for j in range(ambient)) for i in range(ambient)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def projective_dim(self) -> int:
        return len(self.basis) - 1

    def rows(self) -> List[List[GaussianRational]]:
        return [list(r) for r in self.basis]

    def contains(self, other: "LinearSubspace") -> bool:
        if other.ambient != self.ambient:
            return False
        if not other.basis:
            return True
        return matrix_rank(self.rows() + other.rows()) == self.dim

    def same_as(self, other: "LinearSubspace") -> bool:
        return self.dim == other.dim and self.contains(other)


def gram_matrix(m: LinearSubspace, form: SignatureForm) -> List[List[GaussianRational]]:
    if m.ambient != form.n:
        raise DimensionMismatch(f"[gram_matrix] subspace ambient {m.ambient} != form n {form.n}")
    return [[form.pairing(u, v) for v in m.basis] for u in m.basis]


def is_nondegenerate(m: LinearSubspace, form: SignatureForm) -> bool:
    if not m.basis:
        return True
    return matrix_rank(gram_matrix(m, form)) == m.dim


def orthogonal_complement(m: LinearSubspace, form: SignatureForm) -> LinearSubspace:
    """{w : <b, w> = 0 for every basis vector b}."""
    if m.ambient != form.n:
        raise DimensionMismatch(f"[orthogonal_complement] subspace ambient {m.ambient} != form n {form.n}")
    if not m.basis:
        return LinearSubspace.whole(m.ambient)
    # <b, w> = Σ ε_j b_j conj(w_j) = 0  ->  A x = 0 with x = conj(w)
    eps = form.eigenvalues
    a = [[row[j] * eps[j] for j in range(m.ambient)] for row in m.basis]
    kernel = nullspace(a, m.ambient)
    return LinearSubspace(m.ambient, tuple(tuple(x.conj() for x in v) for v in kernel))


def random_vectors(
    rng: np.random.Generator,
    count: int,
    ambient: int,
    bound: int,
    complex_coords: bool = False,
) -> List[List[GaussianRational]]:
    re = rng.integers(-bound, bound + 1, size=(count, ambient))
    if complex_coords:
        im = rng.integers(-bound, bound + 1, size=(count, ambient))
        return [[GaussianRational(int(re[i, j]), int(im[i, j])) for j in range(ambient)] for i in range(count)]
    return [[GaussianRational(int(re[i, j])) for j in range(ambient)] for i in range(count)]


def random_subspace(
    ambient: int,
    m: int,
    rng: np.random.Generator,
    bound: int = 10**6,
    complex_coords: bool = False,
    max_attempts: int = 20,
) -> LinearSubspace:
    """ℙ^{ambient-1} 안의 임의 m 차원 사영 부분공간."""
    if not (0 <= m <= ambient - 1):
        raise InvalidInput(f"[random_subspace] need 0 <= m <= {ambient - 1}, got {m}")
    for attempt in range(max_attempts):
        rows = random_vectors(rng, m + 1, ambient, bound, complex_coords)
        if matrix_rank(rows) == m + 1:
            return LinearSubspace(ambient, tuple(tuple(r) for r in rows))
        log.warning(f"degenerate random basis (attempt {attempt + 1}), redrawing")
    raise RankDeficientParametrization(f"[random_subspace] no full-rank draw in {max_attempts} attempts")


def random_hyperplane(ambient: int, rng: np.random.Generator, bound: int = 10**6, complex_coords: bool = False) -> LinearSubspace:
    return random_subspace(ambient, ambient - 2, rng, bound, complex_coords)


def random_flag(ambient: int, rng: np.random.Generator, bound: int = 10**6, complex_coords: bool = False) -> List[LinearSubspace]:
    """M_0 ⊂ M_1 ⊂ ... ⊂ M_{ambient-1} (projective dim 0 ... ambient-1)."""
    full = random_subspace(ambient, ambient - 1, rng, bound, complex_coords)
    return [LinearSubspace(ambient, full.basis[: k + 1]) for k in range(ambient)]


def _pad(rows: Sequence[Sequence[GaussianRational]], ambient: int) -> Tuple[Vector, ...]:
    zero = GaussianRational(0)
    return tuple(tuple(row) + (zero,) * (ambient - len(row)) for row in rows)


def random_orthogonal_pair(
    m1: int,
    m2: int,
    form: SignatureForm,
    seed: int,
    bound: int = 10**6,
    complex_coords: bool = False,
    max_attempts: int = 20,
) -> Tuple[LinearSubspace, LinearSubspace]:
    """
    M1 ⊥ M2, 둘 다 form 제한이 non-degenerate 인 (m1, m2) 차원 사영 부분공간.

    non-degenerate block (앞 r+s 좌표) 안에서 만든다: M1 을 block 에서 임의로 뽑고,
    block 안의 M1^⊥ basis 의 임의 일차결합으로 M2 를 만든 뒤 null 좌표 t 개를 0 으로 채운다.
    """
    if m1 < 0 or m2 < 0:
        raise InvalidInput(f"[random_orthogonal_pair] dimensions must be non-negative, got {m1}, {m2}")
    if m1 + m2 > form.r + form.s - 2:
        raise HypothesisViolated(
            f"[random_orthogonal_pair] m1+m2={m1 + m2} exceeds r+s-2={form.r + form.s - 2}"
        )
    rng = make_rng(seed)
    block = SignatureForm(form.r, form.s, 0)
    k = block.n

    for attempt in range(max_attempts):
        s1 = random_subspace(k, m1, rng, bound, complex_coords)
        if not is_nondegenerate(s1, block):
            log.warning(f"degenerate M1 draw (attempt {attempt + 1}), redrawing")
            continue
        w = orthogonal_complement(s1, block)
        coeffs = random_vectors(rng, m2 + 1, w.dim, bound, complex_coords)
        rows = [
            [sum((c * v[j] for c, v in zip(row, w.basis)), GaussianRational(0)) for j in range(k)]
            for row in coeffs
        ]
        if matrix_rank(rows) != m2 + 1:
            log.warning(f"rank-deficient M2 draw (attempt {attempt + 1}), redrawing")
            continue
        s2 = LinearSubspace(k, tuple(tuple(r) for r in rows))
        if not is_nondegenerate(s2, block):
            log.warning(f"degenerate M2 draw (attempt {attempt + 1}), redrawing")
            continue
        return LinearSubspace(form.n, _pad(s1.basis, form.n)), LinearSubspace(form.n, _pad(s2.basis, form.n))
    raise HypothesisViolated(f"[random_orthogonal_pair] no nondegenerate pair in {max_attempts} attempts")
