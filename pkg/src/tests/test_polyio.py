import json
from fractions import Fraction
from pathlib import Path

import numpy as np
import pytest

from hermrank.arith import GaussianRational
from hermrank.errors import NotHermitian, PolySyntaxError, SchemaError, UnknownVariable
from hermrank.gaps import TheoremVariant, gap_profile
from hermrank.poly import HermitianPoly, HoloPoly, SignatureForm, monomials_up_to
from hermrank.polyio import (
    decomposition_from_json,
    decomposition_to_json,
    format_holomorphic,
    format_poly,
    from_json,
    json_line,
    parse_holomorphic,
    parse_poly,
    parse_polynomial,
    poly_from_json,
    poly_to_json,
    profile_from_json,
    profile_to_json,
    read_json,
    span_report_from_json,
    span_report_to_json,
    write_json,
)
from hermrank.polyio.parser import byte_offset
from hermrank.sos import decompose, hermitian_product
from hermrank.spans import SpanReport

GOLDEN = Path(__file__).parent / "golden"


@pytest.mark.parametrize(
    "text",
    [
        "1",
        "z1*~z1 + z2*~z2",
        "i*z1*~z2 - i*z2*~z1",
        "(1+2i)*z1*~z2 + (1-2i)*z2*~z1",
        "-3 + 1/2*z1*~z1",
    ],
)
def test_format_is_canonical(text):
    assert format_poly(parse_poly(text, 2)) == text


def test_parse_expands_products_and_powers():
    f = parse_poly("(z1 + z2)*(~z1 + ~z2)", 2)
    g = parse_poly("z1*~z1 + z1*~z2 + z2*~z1 + z2*~z2", 2)
    assert f == g
    assert parse_poly("z1^2*~z1^2", 1) == parse_poly("(z1*~z1)^2", 1)


def test_conj_alias():
    assert parse_poly("z1*conj(z1)", 1) == parse_poly("z1*~z1", 1)
    assert parse_poly("z1 * conj( z2 ) + z2*conj(z1)", 2) == parse_poly("z1*~z2 + z2*~z1", 2)


def test_leading_minus_and_imaginary_literals():
    f = parse_polynomial("-z1 + 2i*~z1 + i", 1)
    assert f.coeff((1,), (0,)) == GaussianRational(-1)
    assert f.coeff((0,), (1,)) == GaussianRational(0, 2)
    assert f.coeff((0,), (0,)) == GaussianRational(0, 1)


def test_parse_poly_rejects_non_hermitian():
    with pytest.raises(NotHermitian):
        parse_poly("z1*~z2", 2)
    # 일반 다항식으로는 읽힌다
    assert len(parse_polynomial("z1*~z2", 2)) == 1


def test_unknown_variable_offset():
    with pytest.raises(UnknownVariable) as info:
        parse_poly("z1 + z3", 2)
    assert info.value.offset == 5


def test_offsets_are_bytes():
    # UTF-8 에서 3 바이트
    assert byte_offset("‖z1", 1) == 3
    assert byte_offset("z1", 2) == 2
    with pytest.raises(UnknownVariable) as info:
        parse_poly("(1) + ~z9", 1)
    assert info.value.offset == 6


@pytest.mark.parametrize("text", ["", "   ", "z1 + * z2", "z1 ^", "(z1", "z1*~z1)", "1/0"])
def test_syntax_errors(text):
    with pytest.raises(PolySyntaxError) as info:
        parse_poly(text, 2)
    assert 0 <= info.value.offset <= len(text.encode("utf-8"))


def test_holomorphic_roundtrip():
    g = parse_holomorphic("(z1 + z2)^2", 2)
    assert g == HoloPoly(2, {(2, 0): 1, (1, 1): 2, (0, 2): 1})
    assert format_holomorphic(g) == "z1^2 + 2*z1*z2 + z2^2"
    with pytest.raises(PolySyntaxError):
        parse_holomorphic("z1*~z1", 1)


def test_poly_json_roundtrip():
    f = parse_poly("(1+2i)*z1*~z2 + (1-2i)*z2*~z1 + 1/3", 2)
    data = poly_to_json(f)
    assert data["n"] == 2
    assert data["terms"][0] == {"alpha": [0, 0], "beta": [0, 0], "re": "1/3", "im": "0"}
    assert poly_from_json(data) == f
    assert from_json(json.loads(json_line(data))) == f


@pytest.mark.parametrize(
    "data, pointer",
    [
        ({"terms": []}, "/n"),
        ({"n": 0, "terms": []}, "/n"),
        ({"n": 1, "terms": {}}, "/terms"),
        ({"n": 1, "terms": [{"alpha": [1], "beta": [1], "re": 1, "im": "0"}]}, "/terms/0/re"),
        ({"n": 1, "terms": [{"alpha": [1, 0], "beta": [1], "re": "1", "im": "0"}]}, "/terms/0/alpha"),
        ({"n": 1, "terms": [{"alpha": [1], "beta": [-1], "re": "1", "im": "0"}]}, "/terms/0/beta/0"),
        ({"n": 1, "terms": [{"alpha": [1], "beta": [1], "re": "1/0", "im": "0"}]}, "/terms/0/re"),
        (
            {
                "n": 1,
                "terms": [
                    {"alpha": [1], "beta": [1], "re": "1", "im": "0"},
                    {"alpha": [1], "beta": [1], "re": "2", "im": "0"},
                ],
            },
            "/terms/1",
        ),
    ],
)
def test_poly_json_schema_errors(data, pointer):
    with pytest.raises(SchemaError) as info:
        poly_from_json(data)
    assert info.value.pointer == pointer


def test_unknown_schema_and_bad_json():
    with pytest.raises(SchemaError) as info:
        from_json({"schema": "hermrank-nothing/1"})
    assert info.value.pointer == "/schema"
    with pytest.raises(SchemaError):
        read_json("{not json")


def test_golden_identity_decomposition():
    form = SignatureForm.euclidean(2)
    a = parse_poly((GOLDEN / "identity.hp").read_text(encoding="utf-8").strip(), 2)
    assert a == HermitianPoly.constant(2, 1)

    dec = decompose(a, form)
    payload = decomposition_to_json(dec, hermitian_product(a, form).poly)
    golden = (GOLDEN / "identity_decomposition.json").read_text(encoding="utf-8")
    assert json.loads(golden) == payload
    assert write_json(payload) == golden
    assert read_json(GOLDEN / "identity_decomposition.json") == dec


def test_decomposition_json_roundtrip(tmp_path):
    a = parse_poly("z1*~z1 - z2*~z2 + i*z1*~z2 - i*z2*~z1", 2)
    dec = decompose(a, SignatureForm(1, 1, 0))
    path = tmp_path / "dec.json"
    write_json(dec, path)
    assert read_json(path) == dec


def test_decomposition_json_errors():
    dec = decompose(HermitianPoly.constant(2, 1), SignatureForm.euclidean(2))
    data = decomposition_to_json(dec)

    bad = dict(data, weights=["1"])
    with pytest.raises(SchemaError) as info:
        decomposition_from_json(bad)
    assert info.value.pointer == "/polys"

    bad = dict(data, polys=["z1", "z1 +"])
    with pytest.raises(SchemaError) as info:
        decomposition_from_json(bad)
    assert info.value.pointer == "/polys/1"

    bad = dict(data, schema="hermrank-gaps/1")
    with pytest.raises(SchemaError) as info:
        decomposition_from_json(bad)
    assert info.value.pointer == "/schema"


def test_profile_json_roundtrip():
    p = gap_profile(20, 0, TheoremVariant.GENERAL_THM)
    data = profile_to_json(p)
    assert data["allowed"] == [[20, 22], [38, 44], [54, 66]]
    assert data["observational"] is False
    assert profile_from_json(data) == p

    with pytest.raises(SchemaError) as info:
        profile_from_json(dict(data, variant="Nope"))
    assert info.value.pointer == "/variant"
    with pytest.raises(SchemaError) as info:
        profile_from_json(dict(data, allowed=[[1, 2, 3]]))
    assert info.value.pointer == "/allowed/0"


def test_span_report_json_keeps_large_seeds():
    r = SpanReport(check="hyperplane", trial=1, seed=2**63 + 5, dims=(1,), measured=(2,), bound=2, extra={"N": 5})
    data = span_report_to_json(r)
    assert data["seed"] == str(2**63 + 5)
    assert span_report_from_json(data) == r
    with pytest.raises(SchemaError) as info:
        span_report_from_json(dict(data, seed=12))
    assert info.value.pointer == "/seed"


def _random_hermitian(rng, n):
    """차수 0..3 이 섞인 Hermitian poly. 대각은 실수, 비대각은 conj 쌍으로 채운다."""
    monos = monomials_up_to(n, int(rng.integers(0, 4)))
    terms = {}
    for _ in range(int(rng.integers(1, 6))):
        a = monos[int(rng.integers(len(monos)))]
        b = monos[int(rng.integers(len(monos)))]
        re = Fraction(int(rng.integers(-50, 51)), int(rng.integers(1, 12)))
        im = Fraction(int(rng.integers(-50, 51)), int(rng.integers(1, 12))) if a != b else Fraction(0)
        c = GaussianRational(re, im)
        if not c:
            continue
        terms[(a, b)] = c
        terms[(b, a)] = c.conj()
    return HermitianPoly(n, terms)


def test_text_and_json_roundtrip_on_random_corpus():
    rng = np.random.default_rng(7)
    for _ in range(1000):
        n = int(rng.integers(1, 7))
        a = _random_hermitian(rng, n)
        assert parse_poly(format_poly(a), n) == a
        assert poly_from_json(json.loads(json_line(poly_to_json(a)))) == a
        assert read_json(write_json(a)) == a
