# src/hermrank/linalg/matrix.py
"""
Gaussian-rational 밀집 행렬 유틸리티 (정확 산술 Gaussian elimination).

행렬은 list[list[GaussianRational]] (row-major) 로 다룬다.
"""
from __future__ import annotations

from typing import List, Sequence

from hermrank.arith import ONE, ZERO, GaussianRational, gaussian
from hermrank.errors import DimensionMismatch, DivisionByZero

Matrix = List[List[GaussianRational]]


def to_matrix(rows: Sequence[Sequence]) -> Matrix:
    """int / Fraction / GaussianRational 로 된 2차원 시퀀스를 복사해 Matrix 로."""
    out = [[gaussian(x) for x in row] for row in rows]
    if out and any(len(r) != len(out[0]) for r in out):
        raise DimensionMismatch("[to_matrix] ragged rows")
    return out


def identity(n: int) -> Matrix:
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def zeros(rows: int, cols: int) -> Matrix:
    return [[ZERO] * cols for _ in range(rows)]


def shape(m: Sequence[Sequence]) -> tuple[int, int]:
    return len(m), (len(m[0]) if m else 0)


def conjugate_transpose(m: Sequence[Sequence[GaussianRational]]) -> Matrix:
    rows, cols = shape(m)
    return [[m[i][j].conj() for i in range(rows)] for j in range(cols)]


def matmul(a: Sequence[Sequence[GaussianRational]], b: Sequence[Sequence[GaussianRational]]) -> Matrix:
    ar, ac = shape(a)
    br, bc = shape(b)
    if ac != br:
        raise DimensionMismatch(f"[matmul] {ar}x{ac} @ {br}x{bc}")
    out = zeros(ar, bc)
    for i in range(ar):
        row = a[i]
        acc = [ZERO] * bc
        for k in range(ac):
            x = row[k]
            if not x:
                continue
            bk = b[k]
            for j in range(bc):
                if bk[j]:
                    acc[j] = acc[j] + x * bk[j]
        out[i] = acc
    return out


def row_echelon(m: Sequence[Sequence[GaussianRational]]) -> tuple[Matrix, List[int]]:
    """
    분수 보존 Gaussian elimination 으로 reduced row echelon form 을 만든다.

    반환: (rref, pivot_cols)
    """
    a = [list(row) for row in m]
    rows, cols = shape(a)
    pivots: List[int] = []
    piv_r = 0
    for piv_c in range(cols):
        if piv_r >= rows:
            break
        for i_row in range(piv_r, rows):
            if a[i_row][piv_c]:
                break
        else:
            continue
        if i_row != piv_r:
            a[piv_r], a[i_row] = a[i_row], a[piv_r]
        inv = a[piv_r][piv_c].inverse()
        a[piv_r] = [x * inv if x else x for x in a[piv_r]]
        prow = a[piv_r]
        for r in range(rows):
            if r == piv_r:
                continue
            fr = a[r][piv_c]
            if not fr:
                continue
            a[r] = [x - fr * p if p else x for x, p in zip(a[r], prow)]
        pivots.append(piv_c)
        piv_r += 1
    return a, pivots


def matrix_rank(m: Sequence[Sequence]) -> int:
    """정확 rank. 0행/0열 행렬의 rank 는 0."""
    if not m or not m[0]:
        return 0
    a = [[gaussian(x) for x in row] for row in m]
    rows, cols = shape(a)
    rank = 0
    for piv_c in range(cols):
        if rank >= rows:
            break
        for i_row in range(rank, rows):
            if a[i_row][piv_c]:
                break
        else:
            continue
        if i_row != rank:
            a[rank], a[i_row] = a[i_row], a[rank]
        prow = a[rank]
        inv = prow[piv_c].inverse()
        for r in range(rank + 1, rows):
            fr = a[r][piv_c]
            if not fr:
                continue
            f = fr * inv
            row = a[r]
            for c in range(piv_c, cols):
                if prow[c]:
                    row[c] = row[c] - f * prow[c]
        rank += 1
    return rank


def nullspace(m: Sequence[Sequence[GaussianRational]], cols: int | None = None) -> Matrix:
    """
    M x = 0 의 정확한 kernel basis (각 원소는 길이 cols 인 벡터).
    행이 없는 행렬은 cols 를 명시해야 한다.
    """
    if not m:
        if cols is None:
            raise DimensionMismatch("[nullspace] empty matrix needs explicit column count")
        return identity(cols)
    rref, pivots = row_echelon(m)
    _, ncols = shape(rref)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis: Matrix = []
    for fc in free:
        v = [ZERO] * ncols
        v[fc] = ONE
        for r, pc in enumerate(pivots):
            x = rref[r][fc]
            if x:
                v[pc] = -x
        basis.append(v)
    return basis


def matrix_inverse(m: Sequence[Sequence[GaussianRational]]) -> Matrix:
    """Gauss-Jordan 정확 역행렬. 특이행렬이면 DivisionByZero."""
    n, c = shape(m)
    if n != c:
        raise DimensionMismatch(f"[matrix_inverse] non-square {n}x{c}")
    aug = [list(row) + identity(n)[i] for i, row in enumerate(m)]
    rref, pivots = row_echelon(aug)
    if pivots[:n] != list(range(n)):
        raise DivisionByZero("[matrix_inverse] singular matrix")
    return [row[n:] for row in rref[:n]]
