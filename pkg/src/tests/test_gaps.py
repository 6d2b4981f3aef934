import pytest

from hermrank.errors import InvalidInput, TrivialSignature
from hermrank.gaps import (
    GapProfile,
    RankClass,
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

GENERAL = TheoremVariant.GENERAL_THM
HOMO = TheoremVariant.HOMO_THM
CONJ = TheoremVariant.CONJECTURE_SOS


def test_general_profile_n20():
    p = gap_profile(20, 0, GENERAL)
    assert p.k0 == 3
    assert p.allowed == ((20, 22), (38, 44), (54, 66))
    assert p.tail == 68
    assert p.forbidden == ((1, 19), (23, 37), (45, 53), (67, 67))


def test_homo_profile_n12():
    p = gap_profile(12, 0, HOMO)
    assert p.k0 == 2
    assert p.allowed == ((12, 12), (22, 24))
    assert p.tail == 30
    assert p.forbidden == ((1, 11), (13, 21), (25, 29))


def test_general_profile_n9():
    p = gap_profile(9, 0, GENERAL)
    assert p.k0 == 1
    assert p.allowed == ((9, 11),)
    assert p.tail == 16


def test_conjecture_profile_n10():
    p = gap_profile(10, 0, CONJ)
    assert p.k0 == 3
    assert p.allowed == ((10, 10), (19, 20), (27, 30))
    assert p.tail == 33


def test_k0_zero_gives_no_gaps_beyond_floor():
    p = gap_profile(5, 0, GENERAL)
    assert p.k0 == 0
    assert p.allowed == ()
    assert p.tail == 5
    assert p.forbidden == ((1, 4),)


def test_corollary_matches_general_for_nondegenerate_forms():
    for n in range(2, 201):
        a = gap_profile(n, 0, TheoremVariant.COROLLARY_SOS)
        b = gap_profile(n, 0, GENERAL)
        assert (a.k0, a.allowed, a.tail, a.forbidden) == (b.k0, b.allowed, b.tail, b.forbidden)


def test_general_is_homogenized_homo():
    for n in range(3, 80):
        for tau in range(0, 4):
            if tau >= n - 1:
                continue
            g = gap_profile(n, tau, GENERAL)
            h = gap_profile(n + 1, tau + 1, HOMO)
            assert (g.k0, g.allowed, g.tail, g.forbidden) == (h.k0, h.allowed, h.tail, h.forbidden)


def test_remark_intervals_are_narrower():
    r = gap_profile(20, 0, TheoremVariant.COROLLARY_REMARK)
    assert r.allowed == ((20, 20), (38, 40), (54, 60))
    assert r.tail == 68


@pytest.mark.parametrize("variant", list(TheoremVariant))
def test_allowed_and_forbidden_partition_below_tail(variant):
    for n in range(3, 120):
        p = gap_profile(n, 0, variant)
        covered = []
        for lo, hi in p.allowed + p.forbidden:
            covered.extend(range(lo, hi + 1))
        assert sorted(covered) == list(range(1, p.tail))
        for r in range(1, p.tail + 3):
            assert p.is_allowed(r) == (p.gap_of(r) is None)


def test_trivial_signature():
    with pytest.raises(TrivialSignature):
        gap_profile(3, 2, HOMO)
    with pytest.raises(TrivialSignature):
        k0(4, 3, GENERAL)


def test_invalid_profile_arguments():
    with pytest.raises(InvalidInput):
        gap_profile(0, 0, GENERAL)
    with pytest.raises(InvalidInput):
        gap_profile(10, -1, GENERAL)
    with pytest.raises(InvalidInput):
        gap_profile(10, 1, CONJ)


@pytest.mark.parametrize(
    "name, expected",
    [
        ("general", GENERAL),
        ("GeneralThm", GENERAL),
        ("homo", HOMO),
        ("Homo-Thm", HOMO),
        ("conjecture", CONJ),
        ("corollary", TheoremVariant.COROLLARY_SOS),
        ("remark", TheoremVariant.COROLLARY_REMARK),
    ],
)
def test_variant_parse(name, expected):
    assert TheoremVariant.parse(name) is expected


def test_variant_parse_rejects_unknown():
    with pytest.raises(InvalidInput):
        TheoremVariant.parse("bogus")


def test_forbidden_intervals_for_c12():
    assert forbidden_intervals_Ia(12, 0) == [(12, 20), (24, 28)]
    with pytest.raises(InvalidInput):
        forbidden_intervals_Ia(1, 0)


def test_allowed_from_intervals_matches_homo_profile():
    allowed, tail = allowed_from_Ia(12, 0)
    assert allowed == [(12, 12), (22, 24)]
    assert tail == 30
    for n in range(4, 60):
        p = gap_profile(n, 0, HOMO)
        allowed, tail = allowed_from_Ia(n, 0)
        if p.k0 == 0:
            continue
        assert tuple(allowed) == p.allowed
        assert tail == p.tail


def test_gap_thm_hypothesis_and_witness():
    assert gap_thm_hypothesis(11, 15, 0, 0)
    assert not gap_thm_hypothesis(11, 22, 0, 0)
    assert gap_thm_witness(11, 15, 0) == 0
    assert gap_thm_witness(11, 25, 0) == 1
    assert gap_thm_witness(11, 22, 0) is None


def test_classify_homo_c12():
    p = gap_profile(12, 0, HOMO)

    tail = classify_rank(30, p)
    assert tail.kind is RankClass.ALLOWED
    assert tail.interval is None
    assert tail.label == "tail"

    first = classify_rank(12, p)
    assert first.allowed and first.interval == 1 and first.label == "k=1"

    second = classify_rank(23, p)
    assert second.interval == 2 and second.label == "k=2"

    bad = classify_rank(13, p)
    assert bad.kind is RankClass.FORBIDDEN
    assert bad.gap == (13, 21)
    assert bad.label == "violation"

    assert classify_rank(0, p).kind is RankClass.BELOW_RANGE


def test_classify_conjecture_is_observational():
    p = gap_profile(10, 0, CONJ)
    assert classify_rank(25, p).label == "counterexample-candidate"
    assert classify_rank(25, p).gap == (21, 26)
    assert classify_rank(33, p).label == "conjecture-consistent"
    assert classify_rank(10, p).label == "conjecture-consistent"


def test_interval_helpers():
    assert merge_intervals([(8, 9), (1, 3), (4, 5), (7, 6)]) == [(1, 5), (8, 9)]
    assert complement_within([(3, 4)], 1, 6) == [(1, 2), (5, 6)]
    assert complement_within([(1, 6)], 1, 6) == []
    assert complement_within([], 2, 3) == [(2, 3)]


def test_format_profile_table():
    text = format_profile_table(gap_profile(20, 0, GENERAL))
    lines = text.splitlines()
    assert lines[0] == "GeneralThm  n=20  tau=0  k0=3"
    assert sum("allowed" in line for line in lines) == 3
    assert sum("forbidden" in line for line in lines) == 4
    assert "tail" in lines[-1] and "68" in lines[-1]


def test_interval_index_survives_merged_intervals():
    # I_2 = [38, 44] 와 I_3 = [54, 66] 이 하나로 합쳐진 profile
    p = GapProfile(n=20, tau=0, variant=GENERAL, k0=3, allowed=((20, 22), (38, 66)), tail=68)
    assert p.interval_index(40) == 2
    assert p.interval_index(54) == 3
    assert p.interval_index(50) is None
    assert p.interval_index(70) is None
    assert classify_rank(60, p).label == "k=3"


@pytest.mark.parametrize("variant", list(TheoremVariant))
def test_interval_index_matches_unmerged_ranges(variant):
    for n in range(3, 41):
        for tau in range(0, 3 if not variant.requires_nondegenerate else 1):
            if tau >= n - 1:
                continue
            p = gap_profile(n, tau, variant)
            for r in range(1, p.tail):
                k = p.interval_index(r)
                if not p.is_allowed(r):
                    assert k is None
                    continue
                assert 1 <= k <= p.k0
                if variant is GENERAL:
                    assert k * n - k * (k - 1 + tau) <= r <= k * n + k * (2 + tau)
                elif variant is HOMO:
                    assert k * n - k * (k - 1 + tau) <= r <= k * n + k * tau


def test_format_profile_table_labels_each_k():
    lines = format_profile_table(gap_profile(20, 0, GENERAL)).splitlines()
    allowed = [line.split() for line in lines if line.lstrip().startswith("allowed")]
    assert [row[1] for row in allowed] == ["1", "2", "3"]
