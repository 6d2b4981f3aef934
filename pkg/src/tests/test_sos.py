from fractions import Fraction

import numpy as np
import pytest

from hermrank.arith import ZERO, GaussianRational
from hermrank.errors import InvalidInput, ZeroPolynomial
from hermrank.linalg import matrix_rank, signature
from hermrank.poly import (
    HermitianPoly,
    HoloPoly,
    SignatureForm,
    coefficient_matrix,
    homogenize,
    multiply_by_form,
    support_basis,
)
from hermrank.sos import (
    WeightedSOSDecomposition,
    decompose,
    hermitian_product,
    induced_map,
    sos_rank,
    unit_weight_display,
    verify_decomposition,
    weighted_pairing,
)

E2 = SignatureForm.euclidean(2)


def z(n, j):
    return tuple(1 if i == j else 0 for i in range(n))


def abs_sq(n, j, c=1):
    return {(z(n, j), z(n, j)): c}


def random_bihomogeneous(rng, n, d, bound=3):
    from hermrank.poly import homogeneous_monomials

    mons = list(homogeneous_monomials(n, d))
    terms = {}
    for i, a in enumerate(mons):
        terms[(a, a)] = int(rng.integers(-bound, bound + 1))
        for b in mons[i + 1:]:
            c = GaussianRational(int(rng.integers(-bound, bound + 1)), int(rng.integers(-bound, bound + 1)))
            terms[(a, b)] = c
            terms[(b, a)] = c.conj()
    return HermitianPoly(n, terms)


def test_rank_of_one_is_n():
    for n in (1, 2, 5):
        assert tuple(sos_rank(HermitianPoly.constant(n, 1), SignatureForm.euclidean(n))) == (n, n, 0)


def test_rank_of_difference_of_squares():
    a = HermitianPoly(2, {**abs_sq(2, 0), **abs_sq(2, 1, -1)})
    assert tuple(sos_rank(a, E2)) == (2, 1, 1)


def test_rank_of_single_square():
    a = HermitianPoly(2, abs_sq(2, 0))
    assert tuple(sos_rank(a, E2)) == (2, 2, 0)


def test_zero_polynomial_rejected():
    with pytest.raises(ZeroPolynomial):
        sos_rank(HermitianPoly(2), E2)


def test_decompose_identity():
    dec = decompose(HermitianPoly.constant(2, 1), E2)
    assert dec.weights == (1, 1)
    assert dec.polys == (HoloPoly(2, {(1, 0): 1}), HoloPoly(2, {(0, 1): 1}))
    assert (dec.p, dec.q, dec.R) == (2, 0, 2)
    assert not dec.homogenized


def test_decompose_single_square():
    dec = decompose(HermitianPoly(2, abs_sq(2, 0)), E2)
    assert dec.weights == (1, 1)
    assert dec.polys == (HoloPoly(2, {(2, 0): 1}), HoloPoly(2, {(1, 1): 1}))


def test_decompose_indefinite_cross_term():
    # (z1 ~z2 + z2 ~z1)(|z1|^2 + |z2|^2): coefficient matrix [[0,1,0],[1,0,1],[0,1,0]]
    a = HermitianPoly(2, {((1, 0), (0, 1)): 1, ((0, 1), (1, 0)): 1})
    dec = decompose(a, E2)
    assert (dec.p, dec.q) == (1, 1)
    assert dec.weights[0] > 0 > dec.weights[1]
    assert verify_decomposition(multiply_by_form(a, E2), dec)


def test_decompose_swap_form_weights():
    # f = z1 ~z2 + z2 ~z1 directly as a weighted decomposition: ½|z1+z2|² - ½|z1-z2|²
    dec = WeightedSOSDecomposition(
        weights=(Fraction(1, 2), Fraction(-1, 2)),
        polys=(HoloPoly.linear([1, 1]), HoloPoly.linear([1, -1])),
        form=E2,
    )
    f = HermitianPoly(2, {((1, 0), (0, 1)): 1, ((0, 1), (1, 0)): 1})
    assert verify_decomposition(f, dec)
    fmap = induced_map(dec)
    assert fmap.target_signature == (1, 1)


def test_verify_detects_mutations():
    a = HermitianPoly(2, {((1, 0), (0, 1)): GaussianRational(0, 1), ((0, 1), (1, 0)): GaussianRational(0, -1), **abs_sq(2, 0)})
    f = multiply_by_form(a, E2)
    dec = decompose(a, E2)
    assert verify_decomposition(f, dec)

    bumped = WeightedSOSDecomposition(
        weights=(dec.weights[0] + 1,) + dec.weights[1:], polys=dec.polys, form=dec.form
    )
    assert not verify_decomposition(f, bumped)

    dropped = WeightedSOSDecomposition(weights=dec.weights[1:], polys=dec.polys[1:], form=dec.form)
    assert not verify_decomposition(f, dropped)


def test_weighted_decomposition_validation():
    with pytest.raises(InvalidInput):
        WeightedSOSDecomposition(weights=(Fraction(1),), polys=(), form=E2)
    with pytest.raises(InvalidInput):
        WeightedSOSDecomposition(weights=(Fraction(0),), polys=(HoloPoly.linear([1, 0]),), form=E2)


def test_general_polynomial_is_homogenized():
    # A = 1 + |z1|^2 on C^1
    a = HermitianPoly(1, {((0,), (0,)): 1, ((1,), (1,)): 1})
    form = SignatureForm.euclidean(1)
    prod = hermitian_product(a, form)
    assert prod.homogenized
    assert prod.form == SignatureForm(1, 0, 1)
    assert prod.poly.n == 2

    dec = decompose(a, form)
    assert dec.homogenized and dec.source_n == 1
    assert dec.R == 2
    # 동차화된 곱과 affine 곱 모두 재현된다
    assert verify_decomposition(prod.poly, dec)
    assert verify_decomposition(multiply_by_form(a, form), dec)
    assert [g.n for g in dec.dehomogenized_polys()] == [1, 1]


def test_rank_equals_matrix_rank_on_random_inputs():
    rng = np.random.default_rng(17)
    for _ in range(6):
        n = int(rng.integers(2, 4))
        b = random_bihomogeneous(rng, n, 1)
        if b.is_zero():
            continue
        dec = decompose(b, SignatureForm.euclidean(n))
        prod = hermitian_product(b, SignatureForm.euclidean(n)).poly
        basis = support_basis(prod)
        c = coefficient_matrix(prod, (basis.d, basis.d), basis)
        assert verify_decomposition(prod, dec)
        assert dec.R == matrix_rank(c.to_rows())
        assert dec.R >= n


def test_rank_is_independent_of_basis_order():
    rng = np.random.default_rng(23)
    b = random_bihomogeneous(rng, 3, 1)
    prod = multiply_by_form(b, SignatureForm.euclidean(3))
    basis = support_basis(prod)
    c = coefficient_matrix(prod, (basis.d, basis.d), basis)
    k = c.dim
    reverse = [[GaussianRational(1) if i + j == k - 1 else ZERO for j in range(k)] for i in range(k)]
    assert signature(c.congruent(reverse)) == signature(c)


def test_homogenization_preserves_rank_of_bihomogeneous():
    rng = np.random.default_rng(29)
    for form in (SignatureForm(3, 0, 0), SignatureForm(2, 1, 0), SignatureForm(1, 1, 1)):
        b = random_bihomogeneous(rng, 3, 1)
        assert sos_rank(b, form) == sos_rank(homogenize(b), form.extend())


def test_lower_bound_on_forms():
    rng = np.random.default_rng(31)
    for form in (SignatureForm(4, 0, 0), SignatureForm(3, 1, 0), SignatureForm(2, 1, 1)):
        b = random_bihomogeneous(rng, 4, 1)
        assert sos_rank(b, form).R >= form.r + form.s


def test_polarized_orthogonality():
    rng = np.random.default_rng(37)
    form = SignatureForm(2, 1, 0)
    b = random_bihomogeneous(rng, 3, 1)
    fmap = induced_map(decompose(b, form))
    for _ in range(10):
        w = [GaussianRational(int(rng.integers(-5, 6)), int(rng.integers(-5, 6))) for _ in range(3)]
        if not w[2]:
            w[2] = GaussianRational(1)
        zz = [GaussianRational(int(rng.integers(-5, 6)), int(rng.integers(-5, 6))) for _ in range(2)]
        # <z, w> = z1 ~w1 + z2 ~w2 - z3 ~w3 = 0 을 z3 로 맞춘다
        z3 = (zz[0] * w[0].conj() + zz[1] * w[1].conj()) / w[2].conj()
        point = zz + [z3]
        assert form.pairing(point, w) == 0
        assert weighted_pairing(fmap, point, w) == 0


def test_unit_weight_display():
    dec = decompose(HermitianPoly.constant(2, 1), E2)
    assert unit_weight_display(dec) == ["+|1*z1|^2", "+|1*z2|^2"]


def _oracle_family(n, d, count, seed):
    from hermrank.harness import FamilySpec, generate_family

    spec = FamilySpec(
        kind="random-bihomogeneous",
        n=n,
        form=SignatureForm.euclidean(n),
        degree=d,
        count=count,
        seed=seed,
        coeff_range=3,
        max_terms=6,
        complex_coeffs=True,
    )
    return list(generate_family(spec))


def _check_oracle(b, form):
    prod = hermitian_product(b, form).poly
    dec = decompose(b, form)
    basis = support_basis(prod)
    c = coefficient_matrix(prod, (basis.d, basis.d), basis)
    assert verify_decomposition(prod, dec)
    assert dec.R == matrix_rank(c.to_rows())
    assert dec.R >= form.r + form.s


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
@pytest.mark.parametrize("d", [1, 2])
def test_decomposition_oracle_up_to_six_variables(n, d):
    for b in _oracle_family(n, d, count=2, seed=100 * n + d):
        _check_oracle(b, SignatureForm.euclidean(n))


@pytest.mark.slow
def test_decomposition_oracle_full_corpus():
    # n = 2..6, bidegree (1,1)/(2,2), form 2 개 x 5 = 100 instances
    for n in range(2, 7):
        for d in (1, 2):
            for form in (SignatureForm.euclidean(n), SignatureForm(n - 1, 1, 0)):
                for b in _oracle_family(n, d, count=5, seed=7 + 10 * n + d):
                    _check_oracle(b, form)
