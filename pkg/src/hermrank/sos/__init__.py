from hermrank.sos.decomposer import (
    HermitianProduct,
    InducedMap,
    SOSRank,
    WeightedSOSDecomposition,
    decompose,
    hermitian_product,
    induced_map,
    sos_rank,
    unit_weight_display,
    verify_decomposition,
    weighted_pairing,
)

__all__ = [
    "HermitianProduct",
    "InducedMap",
    "SOSRank",
    "WeightedSOSDecomposition",
    "decompose",
    "hermitian_product",
    "induced_map",
    "sos_rank",
    "unit_weight_display",
    "verify_decomposition",
    "weighted_pairing",
]
