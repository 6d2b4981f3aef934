from hermrank.gaps.profiles import (
    GapProfile,
    RankClass,
    RankClassification,
    TheoremVariant,
    allowed_from_Ia,
    classify_rank,
    complement_within,
    forbidden_intervals_Ia,
    format_profile_table,
    gap_profile,
    gap_thm_hypothesis,
    gap_thm_witness,
    k0,
    merge_intervals,
)

__all__ = [
    "GapProfile",
    "RankClass",
    "RankClassification",
    "TheoremVariant",
    "allowed_from_Ia",
    "classify_rank",
    "complement_within",
    "forbidden_intervals_Ia",
    "format_profile_table",
    "gap_profile",
    "gap_thm_hypothesis",
    "gap_thm_witness",
    "k0",
    "merge_intervals",
]
