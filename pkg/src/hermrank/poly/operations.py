# src/hermrank/poly/operations.py
"""
Hermitian 다항식 연산.

- evaluate_polarized : f(z, w̄)
- multiply_by_form   : B · ‖z‖²_{r,s,t}
- homogenize / dehomogenize
- coefficient_matrix : bihomogeneous f -> Hermitian 계수 행렬
- restrict_to_subspace : holomorphic 성분들을 선형 부분공간으로 제한
"""
from __future__ import annotations

from typing import Dict, List, Optional, Sequence, Tuple

from hermrank.arith import ONE, ZERO, GaussianRational, gaussian
from hermrank.errors import (
    DimensionMismatch,
    InvalidInput,
    NotBihomogeneous,
    RankDeficientParametrization,
    ZeroPolynomial,
)
from hermrank.linalg import HermitianMatrix, matrix_rank
from hermrank.poly.forms import SignatureForm
from hermrank.poly.monomials import MonomialBasis, MultiIndex, add, unit
from hermrank.poly.polynomial import HermitianPoly, HoloPoly, Pair, Polynomial


def _powers(xs: Sequence[GaussianRational], top: Sequence[int]) -> List[List[GaussianRational]]:
    out = []
    for x, k in zip(xs, top):
        row = [ONE]
        for _ in range(k):
            row.append(row[-1] * x)
        out.append(row)
    return out


def _max_exponents(f: Polynomial) -> Tuple[List[int], List[int]]:
    top_a = [0] * f.n
    top_b = [0] * f.n
    for a, b in f.terms:
        for j in range(f.n):
            top_a[j] = max(top_a[j], a[j])
            top_b[j] = max(top_b[j], b[j])
    return top_a, top_b


def evaluate_polarized(f: Polynomial, z: Sequence, w: Sequence) -> GaussianRational:
    """f(z, w̄) = Σ c_{αβ} z^α conj(w)^β."""
    if len(z) != f.n or len(w) != f.n:
        raise DimensionMismatch(
            f"[evaluate_polarized] expected points of length {f.n}, got {len(z)} and {len(w)}"
        )
    zs = [gaussian(x) for x in z]
    ws = [gaussian(x).conj() for x in w]
    top_a, top_b = _max_exponents(f)
    pz = _powers(zs, top_a)
    pw = _powers(ws, top_b)

    acc = ZERO
    for (a, b), c in f.terms.items():
        term = c
        for j in range(f.n):
            if a[j]:
                term = term * pz[j][a[j]]
            if b[j]:
                term = term * pw[j][b[j]]
        acc = acc + term
    return acc


def multiply_by_form(b: HermitianPoly, form: SignatureForm) -> HermitianPoly:
    """B(z, z̄) · Σ ε_j |z_j|²."""
    if b.n != form.n:
        raise DimensionMismatch(f"[multiply_by_form] polynomial has n={b.n}, form has n={form.n}")
    n = b.n
    units = [unit(n, j) for j in range(n)]
    out: Dict[Pair, GaussianRational] = {}
    for (alpha, beta), c in b.terms.items():
        for j, eps in enumerate(form.eigenvalues):
            if not eps:
                continue
            key = (add(alpha, units[j]), add(beta, units[j]))
            out[key] = out.get(key, ZERO) + (c if eps > 0 else -c)
    return HermitianPoly(n, out)


def is_bihomogeneous(f: Polynomial) -> Optional[Tuple[int, int]]:
    degs = {(sum(a), sum(b)) for a, b in f.terms}
    if len(degs) != 1:
        return None
    da, db = next(iter(degs))
    return (da, da) if da == db else None


def homogenize(a: HermitianPoly) -> HermitianPoly:
    """
    z_j = w_j / w_{n+1} 대입 후 |w_{n+1}|^{2d} 를 곱한다. d = max(|α|, |β|).
    결과는 n+1 변수, bidegree (d, d).
    """
    if a.is_zero():
        raise ZeroPolynomial("[homogenize] cannot homogenize the zero polynomial")
    d = a.max_degree()
    out = {
        (alpha + (d - sum(alpha),), beta + (d - sum(beta),)): c
        for (alpha, beta), c in a.terms.items()
    }
    return HermitianPoly(a.n + 1, out)


def dehomogenize(f: Polynomial) -> Polynomial:
    """마지막 변수에 1 을 대입 (homogenize 의 section)."""
    if f.n < 2:
        raise InvalidInput("[dehomogenize] need at least 2 variables")
    out: Dict[Pair, GaussianRational] = {}
    for (alpha, beta), c in f.terms.items():
        key = (alpha[:-1], beta[:-1])
        out[key] = out.get(key, ZERO) + c
    cls = HermitianPoly if isinstance(f, HermitianPoly) else Polynomial
    return cls(f.n - 1, out)


def extend_form(form: SignatureForm) -> SignatureForm:
    return form.extend()


def form_pairing(form: SignatureForm, z: Sequence, w: Sequence) -> GaussianRational:
    return form.pairing(z, w)


def support_basis(f: Polynomial) -> MonomialBasis:
    """f 에 나타나는 α, β 단항식만 모은 basis. f 는 bihomogeneous 여야 한다."""
    bideg = is_bihomogeneous(f)
    if bideg is None:
        raise NotBihomogeneous("[support_basis] polynomial is not bihomogeneous")
    mons = {a for a, _ in f.terms} | {b for _, b in f.terms}
    return MonomialBasis.from_monomials(f.n, bideg[0], sorted(mons))


def coefficient_matrix(
    f: Polynomial,
    bidegree: Tuple[int, int],
    basis: Optional[MonomialBasis] = None,
) -> HermitianMatrix:
    """
    C[index(α)][index(β)] = c_{αβ}.
    basis 를 주지 않으면 MonomialBasis(n, e) 전체를 쓴다.
    """
    e, e2 = bidegree
    if e != e2:
        raise NotBihomogeneous(f"[coefficient_matrix] bidegree must be (e, e), got {bidegree}")
    for alpha, beta in f.terms:
        if sum(alpha) != e or sum(beta) != e:
            raise NotBihomogeneous(
                f"[coefficient_matrix] term (alpha={list(alpha)}, beta={list(beta)}) is not of bidegree ({e},{e})"
            )
    if basis is None:
        basis = MonomialBasis(f.n, e)
    elif basis.n != f.n or basis.d != e:
        raise DimensionMismatch(f"[coefficient_matrix] basis ({basis.n}, {basis.d}) does not match ({f.n}, {e})")

    size = len(basis)
    rows = [[ZERO] * size for _ in range(size)]
    for (alpha, beta), c in f.terms.items():
        if alpha not in basis or beta not in basis:
            raise InvalidInput(f"[coefficient_matrix] term ({list(alpha)}, {list(beta)}) outside the given basis")
        rows[basis.index(alpha)][basis.index(beta)] = c
    return HermitianMatrix.from_rows(rows)


def restrict_to_subspace(
    polys: Sequence[HoloPoly],
    basis_rows: Sequence[Sequence],
) -> List[HoloPoly]:
    """
    z = Σ_i u_i · basis_rows[i] 를 대입한다.
    basis_rows 는 (m+1) x (n+1) 이고 행들이 일차독립이어야 한다.
    결과는 u_0..u_m 의 holomorphic 다항식 (차수 보존, 0 이 될 수는 있음).
    """
    if not basis_rows:
        raise RankDeficientParametrization("[restrict_to_subspace] empty parametrization")
    rows = [[gaussian(x) for x in row] for row in basis_rows]
    k = len(rows)
    n = len(rows[0])
    if any(len(row) != n for row in rows):
        raise DimensionMismatch("[restrict_to_subspace] ragged parametrization matrix")
    for p in polys:
        if p.n != n:
            raise DimensionMismatch(f"[restrict_to_subspace] polynomial has n={p.n}, parametrization has {n} columns")
    if matrix_rank(rows) != k:
        raise RankDeficientParametrization(
            f"[restrict_to_subspace] parametrization rows are linearly dependent ({k} rows)"
        )

    # z_j(u) = Σ_i rows[i][j] u_i
    linear = [HoloPoly.linear([rows[i][j] for i in range(k)]) for j in range(n)]
    cache: Dict[Tuple[int, int], HoloPoly] = {}

    def power(j: int, e: int) -> HoloPoly:
        key = (j, e)
        if key not in cache:
            cache[key] = HoloPoly.constant(k, ONE) if e == 0 else power(j, e - 1) * linear[j]
        return cache[key]

    out: List[HoloPoly] = []
    for p in polys:
        acc = HoloPoly(k)
        for alpha, c in p.terms.items():
            term = HoloPoly.constant(k, c)
            for j, e in enumerate(alpha):
                if e:
                    term = term * power(j, e)
            acc = acc + term
        out.append(acc)
    return out


def monomial_vector(basis: MonomialBasis) -> List[HoloPoly]:
    """basis 의 각 단항식 z^α 를 HoloPoly 로."""
    return [HoloPoly(basis.n, {m: ONE}) for m in basis.monomials]
