# src/hermrank/sos/decomposer.py
"""
A(z, z̄)·‖z‖²_{r,s,t} 의 rank / signature 와 weighted SOS 분해.

f = Σ_k d_k |g_k|²  (d_k: 0 이 아닌 유리수, g_k: 같은 차수의 holomorphic 다항식)

A·‖z‖² 가 bihomogeneous 가 아니면 먼저 동차화한다:
homogenize(A)·‖w‖²_{r,s,t+1} 는 homogenize(A·‖z‖²_{r,s,t}) 와 같고,
분해는 ℙⁿ 에서의 사상 (n+1 변수) 으로 얻어진다.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, NamedTuple, Sequence, Tuple

from hermrank.arith import GaussianRational, gaussian, sign, to_float
from hermrank.errors import DimensionMismatch, InvalidInput, ZeroPolynomial, ZeroProduct
from hermrank.linalg import congruence_diagonalize
from hermrank.poly import (
    HermitianPoly,
    HoloPoly,
    Polynomial,
    SignatureForm,
    coefficient_matrix,
    dehomogenize,
    homogenize,
    is_bihomogeneous,
    multiply_by_form,
    support_basis,
)
from hermrank.utils.logging_utils import get_logger

log = get_logger(__name__)


class SOSRank(NamedTuple):
    R: int
    p: int
    q: int


@dataclass(frozen=True)
class HermitianProduct:
    """rank 계산에 실제로 쓰이는 bihomogeneous 곱과, 그때의 form."""

    poly: HermitianPoly
    form: SignatureForm
    homogenized: bool
    source_n: int

    @property
    def degree(self) -> int:
        bideg = is_bihomogeneous(self.poly)
        return bideg[0] if bideg else 0


def hermitian_product(a: HermitianPoly, form: SignatureForm) -> HermitianProduct:
    if a.is_zero():
        raise ZeroPolynomial("[hermitian_product] A must be non-zero")
    product = multiply_by_form(a, form)
    if product.is_zero():
        raise ZeroProduct(f"[hermitian_product] A·‖z‖²_{{{form}}} vanishes identically")
    if is_bihomogeneous(product) is not None:
        return HermitianProduct(poly=product, form=form, homogenized=False, source_n=a.n)

    log.debug(f"product is not bihomogeneous, homogenizing (n={a.n} -> {a.n + 1})")
    extended = form.extend()
    return HermitianProduct(
        poly=multiply_by_form(homogenize(a), extended),
        form=extended,
        homogenized=True,
        source_n=a.n,
    )


def sos_rank(a: HermitianPoly, form: SignatureForm, pivot: str = "smallest") -> SOSRank:
    prod = hermitian_product(a, form)
    basis = support_basis(prod.poly)
    c = coefficient_matrix(prod.poly, (basis.d, basis.d), basis)
    sig = congruence_diagonalize(c, pivot).signature()
    return SOSRank(R=sig.rank, p=sig.p, q=sig.q)


@dataclass(frozen=True)
class WeightedSOSDecomposition:
    """
    f = Σ d_k |g_k|². 양의 weight 가 먼저, 음의 weight 가 나중에 온다.

    homogenized=True 이면 g_k 는 source_n + 1 변수이고, form 은 확장된 (r, s, t+1) 이다.
    """

    weights: Tuple[Fraction, ...]
    polys: Tuple[HoloPoly, ...]
    form: SignatureForm
    homogenized: bool = False
    source_n: int = 0

    def __post_init__(self) -> None:
        if len(self.weights) != len(self.polys):
            raise InvalidInput("[WeightedSOSDecomposition] weights/polys length mismatch")
        if any(w == 0 for w in self.weights):
            raise InvalidInput("[WeightedSOSDecomposition] zero weight")
        if not self.source_n:
            n = self.polys[0].n if self.polys else self.form.n
            object.__setattr__(self, "source_n", n - 1 if self.homogenized else n)

    @property
    def p(self) -> int:
        return sum(1 for w in self.weights if w > 0)

    @property
    def q(self) -> int:
        return sum(1 for w in self.weights if w < 0)

    @property
    def R(self) -> int:
        return len(self.weights)

    @property
    def n(self) -> int:
        return self.polys[0].n if self.polys else self.form.n

    def expand(self) -> Polynomial:
        """Σ d_k g_k(z) conj(g_k(z)) 를 계수 맵으로 전개."""
        acc = Polynomial(self.n)
        for d, g in zip(self.weights, self.polys):
            acc = acc + g.conj_product(g).scale(d)
        return acc

    def dehomogenized_polys(self) -> Tuple[HoloPoly, ...]:
        """마지막 변수에 1 을 넣은 P_k. 동차화하지 않은 분해면 polys 그대로."""
        if not self.homogenized:
            return self.polys
        out = []
        for g in self.polys:
            terms = {}
            for alpha, c in g.terms.items():
                key = alpha[:-1]
                terms[key] = terms.get(key, 0) + c
            out.append(HoloPoly(g.n - 1, terms))
        return tuple(out)


def decompose(a: HermitianPoly, form: SignatureForm, pivot: str = "smallest") -> WeightedSOSDecomposition:
    prod = hermitian_product(a, form)
    basis = support_basis(prod.poly)
    c = coefficient_matrix(prod.poly, (basis.d, basis.d), basis)
    cd = congruence_diagonalize(c, pivot)

    # C = L diag(D) L†  =>  g_k = Σ_α L[α][k] z^α
    pos: List[Tuple[Fraction, HoloPoly]] = []
    neg: List[Tuple[Fraction, HoloPoly]] = []
    for k, d in enumerate(cd.diagonal):
        if d == 0:
            continue
        g = HoloPoly(
            basis.n,
            {basis.monomial(i): cd.inverse_adjoint[i][k] for i in range(basis.size)},
        )
        (pos if d > 0 else neg).append((d, g))

    items = pos + neg
    return WeightedSOSDecomposition(
        weights=tuple(d for d, _ in items),
        polys=tuple(g for _, g in items),
        form=prod.form,
        homogenized=prod.homogenized,
        source_n=prod.source_n,
    )


def verify_decomposition(f: Polynomial, dec: WeightedSOSDecomposition) -> bool:
    """
    Σ d_k g_k(z) conj(g_k(w)) 를 전개해 f 와 계수 단위로 비교한다.
    동차화된 분해는 affine 곱(변수 n 개)과도 비교할 수 있다.
    """
    try:
        expanded = dec.expand()
    except DimensionMismatch as exc:
        log.debug(f"expansion failed: {exc}")
        return False
    if f.n == expanded.n:
        return expanded == f
    if dec.homogenized and f.n == expanded.n - 1:
        return dehomogenize(expanded) == f
    return False


@dataclass(frozen=True)
class InducedMap:
    """F̃ = (g_1, ..., g_R) 와 target weight (d_1, ..., d_R)."""

    components: Tuple[HoloPoly, ...]
    weights: Tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if not self.components:
            raise InvalidInput("[InducedMap] needs at least one component")
        if len(self.components) != len(self.weights):
            raise InvalidInput("[InducedMap] components/weights length mismatch")
        if any(g.is_zero() for g in self.components):
            raise InvalidInput("[InducedMap] zero component")
        ns = {g.n for g in self.components}
        if len(ns) != 1:
            raise InvalidInput(f"[InducedMap] components live in different dimensions {sorted(ns)}")

    @property
    def n(self) -> int:
        return self.components[0].n

    @property
    def R(self) -> int:
        return len(self.components)

    @property
    def degree(self) -> int:
        degs = set().union(*(g.degrees() for g in self.components))
        return max(degs)

    @property
    def target_signature(self) -> Tuple[int, int]:
        p = sum(1 for w in self.weights if w > 0)
        return p, len(self.weights) - p

    def evaluate(self, z: Sequence) -> List[GaussianRational]:
        return [g.evaluate(z) for g in self.components]


def induced_map(dec: WeightedSOSDecomposition) -> InducedMap:
    if dec.R < 1:
        raise InvalidInput("[induced_map] decomposition has rank 0")
    return InducedMap(components=dec.polys, weights=dec.weights)


def weighted_pairing(fmap: InducedMap, z: Sequence, w: Sequence) -> GaussianRational:
    """Σ d_k g_k(z) conj(g_k(w))."""
    gz = fmap.evaluate(z)
    gw = fmap.evaluate(w)
    acc = gaussian(0)
    for d, a, b in zip(fmap.weights, gz, gw):
        acc = acc + a * b.conj() * d
    return acc


def unit_weight_display(dec: WeightedSOSDecomposition, digits: int = 6) -> List[str]:
    """
    ±|√|d_k|·g_k|² 형태의 float 렌더링. 손실이 있으므로 표시용으로만 쓴다.
    """
    from hermrank.polyio.formatter import format_monomial

    lines = []
    for d, g in zip(dec.weights, dec.polys):
        scale = math.sqrt(abs(to_float(d)))
        parts = []
        for alpha, c in g.sorted_terms():
            z = c.to_complex() * scale
            if z.imag == 0:
                coef = f"{z.real:.{digits}g}"
            else:
                coef = f"({z.real:.{digits}g}{z.imag:+.{digits}g}i)"
            mono = format_monomial(alpha)
            parts.append(coef if mono == "1" else f"{coef}*{mono}")
        lead = "+" if sign(d) > 0 else "-"
        lines.append(f"{lead}|{' + '.join(parts)}|^2")
    return lines
