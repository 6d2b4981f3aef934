from hermrank.spans.checks import (
    SpanConfig,
    SpanReport,
    check_dim_prop,
    check_hyperplane_restriction,
    check_orthogonal_span_bound,
    dim_prop_target,
    make_span_config,
    pairing_vanishes,
    span_dim,
)
from hermrank.spans.subspace import (
    LinearSubspace,
    gram_matrix,
    is_nondegenerate,
    orthogonal_complement,
    random_flag,
    random_hyperplane,
    random_orthogonal_pair,
    random_subspace,
)

__all__ = [
    "LinearSubspace",
    "SpanConfig",
    "SpanReport",
    "check_dim_prop",
    "check_hyperplane_restriction",
    "check_orthogonal_span_bound",
    "dim_prop_target",
    "gram_matrix",
    "is_nondegenerate",
    "make_span_config",
    "orthogonal_complement",
    "pairing_vanishes",
    "random_flag",
    "random_hyperplane",
    "random_orthogonal_pair",
    "random_subspace",
    "span_dim",
]
