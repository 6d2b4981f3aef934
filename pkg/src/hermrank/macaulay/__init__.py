from hermrank.macaulay.representation import (
    LemmaCheck,
    MacaulayRep,
    dim_prop_bound,
    find_n_ab,
    iterated_lower_bound,
    lemma_nab,
    lemma_nab_range,
    lower_op,
    macaulay_rep,
    n_ab,
    n_ab_closed_form,
    n_ab_representation,
    reconstruct,
)

__all__ = [
    "LemmaCheck",
    "MacaulayRep",
    "dim_prop_bound",
    "find_n_ab",
    "iterated_lower_bound",
    "lemma_nab",
    "lemma_nab_range",
    "lower_op",
    "macaulay_rep",
    "n_ab",
    "n_ab_closed_form",
    "n_ab_representation",
    "reconstruct",
]
