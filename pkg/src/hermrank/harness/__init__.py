from hermrank.harness.configs import (
    FAMILY_KINDS,
    MONOMIAL_EXHAUSTIVE,
    RANDOM_BIHOMOGENEOUS,
    RANDOM_GENERAL,
    FamilySpec,
)
from hermrank.harness.families import (
    BaseFamily,
    FamilyInstance,
    MonomialExhaustiveFamily,
    RandomBihomogeneousFamily,
    RandomGeneralFamily,
    canonical_hash,
    generate_family,
    make_family,
)
from hermrank.harness.metrics import profile_buckets, rank_histogram
from hermrank.harness.report import Report
from hermrank.harness.spec_factory import list_presets, make_family_spec, make_form_sweep
from hermrank.harness.verification import (
    FamilyVerifier,
    InstanceResult,
    check_variant,
    run_verification,
    verify_instance,
)

__all__ = [
    "BaseFamily",
    "FAMILY_KINDS",
    "FamilyInstance",
    "FamilySpec",
    "FamilyVerifier",
    "InstanceResult",
    "MONOMIAL_EXHAUSTIVE",
    "MonomialExhaustiveFamily",
    "RANDOM_BIHOMOGENEOUS",
    "RANDOM_GENERAL",
    "RandomBihomogeneousFamily",
    "RandomGeneralFamily",
    "Report",
    "canonical_hash",
    "check_variant",
    "generate_family",
    "list_presets",
    "make_family",
    "make_family_spec",
    "make_form_sweep",
    "profile_buckets",
    "rank_histogram",
    "run_verification",
    "verify_instance",
]
