# src/hermrank/linalg/hermitian.py
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from hermrank.arith import I, ONE, ZERO, GaussianRational, gaussian, sign
from hermrank.errors import DimensionMismatch, InvalidInput, NotHermitian
from hermrank.linalg.matrix import Matrix, identity, matmul, conjugate_transpose
from hermrank.utils.logging_utils import get_logger

log = get_logger(__name__)


@dataclass(frozen=True)
class HermitianMatrix:
    """
    정방 Hermitian 행렬. entries[j][i] == conj(entries[i][j]) 를 생성 시 검사한다.
    """

    entries: Tuple[Tuple[GaussianRational, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(gaussian(x) for x in row) for row in self.entries)
        n = len(rows)
        if n == 0:
            raise DimensionMismatch("[HermitianMatrix] dim must be positive")
        for i, row in enumerate(rows):
            if len(row) != n:
                raise DimensionMismatch(f"[HermitianMatrix] row {i} has length {len(row)}, expected {n}")
        for i in range(n):
            for j in range(i, n):
                if rows[j][i] != rows[i][j].conj():
                    raise NotHermitian(
                        f"[HermitianMatrix] entry ({j},{i}) != conj(({i},{j}))",
                        found=rows[j][i],
                        expected=rows[i][j].conj(),
                    )
        object.__setattr__(self, "entries", rows)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "HermitianMatrix":
        return cls(tuple(tuple(row) for row in rows))

    @property
    def dim(self) -> int:
        return len(self.entries)

    def to_rows(self) -> Matrix:
        return [list(row) for row in self.entries]

    def congruent(self, s: Sequence[Sequence[GaussianRational]]) -> "HermitianMatrix":
        """S† C S."""
        return HermitianMatrix.from_rows(matmul(matmul(conjugate_transpose(s), self.to_rows()), s))


@dataclass(frozen=True)
class Signature:
    p: int
    q: int
    z: int

    @property
    def rank(self) -> int:
        return self.p + self.q

    @property
    def inertia(self) -> str:
        return f"({self.p}, {self.q}, {self.z})"

    def __str__(self) -> str:
        return self.inertia


@dataclass(frozen=True)
class CongruenceDiagonalization:
    """
    P† C P = diag(D).
    inverse_adjoint 는 L = (P†)^{-1} 이며 C = L diag(D) L† 이 성립한다.
    """

    transform: Tuple[Tuple[GaussianRational, ...], ...]
    diagonal: Tuple[Fraction, ...]
    inverse_adjoint: Tuple[Tuple[GaussianRational, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.diagonal)

    def signature(self) -> Signature:
        signs = [sign(d) for d in self.diagonal]
        p = sum(1 for s in signs if s > 0)
        q = sum(1 for s in signs if s < 0)
        return Signature(p=p, q=q, z=len(signs) - p - q)

    def reconstruct(self) -> Matrix:
        """L diag(D) L† 를 다시 계산 (검증용)."""
        n = self.dim
        l_rows = [list(r) for r in self.inverse_adjoint]
        ld = [[l_rows[i][k] * self.diagonal[k] for k in range(n)] for i in range(n)]
        return matmul(ld, conjugate_transpose(l_rows))


PIVOT_POLICIES = ("smallest", "first")


def _pick_diagonal_pivot(m: Matrix, k: int, n: int, policy: str = "smallest") -> Optional[int]:
    best, best_size = None, None
    for i in range(k, n):
        d = m[i][i]
        if d:
            if policy == "first":
                return i
            size = d.bit_size()
            if best_size is None or size < best_size:
                best, best_size = i, size
    return best


def _find_off_diagonal(m: Matrix, k: int, n: int) -> Optional[Tuple[int, int]]:
    for i in range(k, n):
        row = m[i]
        for j in range(i + 1, n):
            if row[j]:
                return i, j
    return None


def congruence_diagonalize(c: HermitianMatrix, pivot: str = "smallest") -> CongruenceDiagonalization:
    """
    대칭 소거(symmetric elimination)로 P† C P = diag(D) 를 정확히 계산한다.

    - 0 이 아닌 대각 pivot 이 있으면 bit-size 가 가장 작은 것을 앞으로 보내고
      행/열을 동시에 소거한다.
    - 대각이 모두 0 이고 c = C[i][j] != 0 이면 e_i <- e_i + λ e_j
      (Re(c) != 0 이면 λ = 1, 아니면 λ = i) 로 대각에 2·Re(λc) != 0 을 만든다.

    pivot="first" 는 bit-size 비교 없이 처음 만나는 0 이 아닌 대각을 쓴다.

    모든 연산은 Gaussian rational 안에서 닫혀 있다 (제곱근 없음).
    """
    if pivot not in PIVOT_POLICIES:
        raise InvalidInput(f"[congruence_diagonalize] unknown pivot policy {pivot!r} (choose from {list(PIVOT_POLICIES)})")
    n = c.dim
    m = c.to_rows()
    p = identity(n)
    l = identity(n)
    diag: List[Fraction] = [Fraction(0)] * n

    for k in range(n):
        piv = _pick_diagonal_pivot(m, k, n, pivot)
        if piv is None:
            hit = _find_off_diagonal(m, k, n)
            if hit is None:
                break
            i, j = hit
            lam = ONE if m[i][j].re else I
            lam_c = lam.conj()
            log.debug(f"off-diagonal repair at ({i},{j}) lambda={lam}")
            # column i += λ column j, row i += conj(λ) row j
            for r in range(k, n):
                if m[r][j]:
                    m[r][i] = m[r][i] + lam * m[r][j]
            for s in range(k, n):
                if m[j][s]:
                    m[i][s] = m[i][s] + lam_c * m[j][s]
            for r in range(n):
                if p[r][j]:
                    p[r][i] = p[r][i] + lam * p[r][j]
                if l[r][i]:
                    l[r][j] = l[r][j] - lam_c * l[r][i]
            piv = i

        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            for row in m:
                row[k], row[piv] = row[piv], row[k]
            for mat in (p, l):
                for row in mat:
                    row[k], row[piv] = row[piv], row[k]

        d = m[k][k].re
        diag[k] = d
        row_k = m[k]
        targets = [j for j in range(k + 1, n) if row_k[j]]
        if not targets:
            continue
        inv_d = Fraction(1) / d
        # Schur complement (상삼각만 갱신 후 켤레로 채움)
        for a in targets:
            factor = m[a][k] * inv_d
            row_a = m[a]
            for b in targets:
                if b < a:
                    continue
                row_a[b] = row_a[b] - factor * row_k[b]
            for b in targets:
                if b > a:
                    m[b][a] = row_a[b].conj()
            row_a[a] = GaussianRational._raw(row_a[a].re, Fraction(0))
        for j in targets:
            mu = row_k[j] * inv_d
            mu_c = mu.conj()
            for r in range(n):
                if p[r][k]:
                    p[r][j] = p[r][j] - mu * p[r][k]
                if l[r][j]:
                    l[r][k] = l[r][k] + mu_c * l[r][j]
        for j in targets:
            m[k][j] = ZERO
            m[j][k] = ZERO

    return CongruenceDiagonalization(
        transform=tuple(tuple(r) for r in p),
        diagonal=tuple(diag),
        inverse_adjoint=tuple(tuple(r) for r in l),
    )


def signature(c: HermitianMatrix, pivot: str = "smallest") -> Signature:
    """Sylvester 관성법칙에 의해 pivot 순서와 무관하게 잘 정의된다."""
    return congruence_diagonalize(c, pivot).signature()
