from hermrank.poly.forms import SignatureForm
from hermrank.poly.monomials import MonomialBasis, MultiIndex, grlex_key, homogeneous_monomials, monomials_up_to, term_key
from hermrank.poly.operations import (
    coefficient_matrix,
    dehomogenize,
    evaluate_polarized,
    extend_form,
    form_pairing,
    homogenize,
    is_bihomogeneous,
    monomial_vector,
    multiply_by_form,
    restrict_to_subspace,
    support_basis,
)
from hermrank.poly.polynomial import HermitianPoly, HoloPoly, Pair, Polynomial

__all__ = [
    "HermitianPoly",
    "HoloPoly",
    "MonomialBasis",
    "MultiIndex",
    "Pair",
    "Polynomial",
    "SignatureForm",
    "coefficient_matrix",
    "dehomogenize",
    "evaluate_polarized",
    "extend_form",
    "form_pairing",
    "grlex_key",
    "homogeneous_monomials",
    "homogenize",
    "is_bihomogeneous",
    "monomial_vector",
    "monomials_up_to",
    "multiply_by_form",
    "restrict_to_subspace",
    "support_basis",
    "term_key",
]
