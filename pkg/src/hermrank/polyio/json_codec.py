# src/hermrank/polyio/json_codec.py
"""
JSON 입출력 (canonical form).

- 유리수는 항상 문자열 ("a" 또는 "a/b"); float 는 이름에 display 가 붙은 손실 필드에만 쓴다.
- canonical text = json.dumps(sort_keys=True, indent=2, ensure_ascii=False) + "\n"
- 스키마 오류는 SchemaError(pointer=RFC 6901 경로)
"""
from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, Optional, Union

from hermrank.arith import GaussianRational, format_rational, parse_rational
from hermrank.errors import DivisionByZero, HermrankError, InvalidInput, SchemaError
from hermrank.gaps import GapProfile, TheoremVariant
from hermrank.poly import HermitianPoly, SignatureForm
from hermrank.polyio.formatter import format_holomorphic
from hermrank.polyio.parser import parse_holomorphic
from hermrank.sos import WeightedSOSDecomposition, unit_weight_display
from hermrank.spans import SpanReport

DECOMPOSITION_SCHEMA = "hermrank-decomposition/1"
PROFILE_SCHEMA = "hermrank-gaps/1"
SPAN_SCHEMA = "hermrank-span/1"
REPORT_SCHEMA = "hermrank-report/1"

PathLike = Union[str, Path]


def canonical_dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def json_line(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, ensure_ascii=False, separators=(",", ":"))


# --- field helpers ---


def _get(data: Any, key: str, pointer: str) -> Any:
    if not isinstance(data, dict):
        raise SchemaError("expected an object", pointer)
    if key not in data:
        raise SchemaError(f"missing field {key!r}", f"{pointer}/{key}")
    return data[key]


def _int(value: Any, pointer: str, minimum: Optional[int] = None) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise SchemaError("expected an integer", pointer)
    if minimum is not None and value < minimum:
        raise SchemaError(f"expected an integer >= {minimum}", pointer)
    return value


def _list(value: Any, pointer: str) -> list:
    if not isinstance(value, list):
        raise SchemaError("expected an array", pointer)
    return value


def _rational(value: Any, pointer: str) -> Fraction:
    if not isinstance(value, str):
        raise SchemaError("rationals must be strings", pointer)
    try:
        return parse_rational(value)
    except DivisionByZero:
        raise SchemaError(f"zero denominator in {value!r}", pointer) from None
    except InvalidInput:
        raise SchemaError(f"malformed rational {value!r}", pointer) from None


def _interval_list(value: Any, pointer: str) -> tuple:
    out = []
    for i, item in enumerate(_list(value, pointer)):
        p = f"{pointer}/{i}"
        pair = _list(item, p)
        if len(pair) != 2:
            raise SchemaError("expected [lo, hi]", p)
        out.append((_int(pair[0], f"{p}/0"), _int(pair[1], f"{p}/1")))
    return tuple(out)


# --- HermitianPoly ---


def poly_to_json(f) -> Dict[str, Any]:
    return {
        "n": f.n,
        "terms": [
            {"alpha": list(a), "beta": list(b), "re": format_rational(c.re), "im": format_rational(c.im)}
            for (a, b), c in f.sorted_terms()
        ],
    }


def poly_from_json(data: Any, pointer: str = "") -> HermitianPoly:
    n = _int(_get(data, "n", pointer), f"{pointer}/n", minimum=1)
    terms = {}
    for i, t in enumerate(_list(_get(data, "terms", pointer), f"{pointer}/terms")):
        p = f"{pointer}/terms/{i}"
        alpha = tuple(_int(x, f"{p}/alpha/{j}", 0) for j, x in enumerate(_list(_get(t, "alpha", p), f"{p}/alpha")))
        beta = tuple(_int(x, f"{p}/beta/{j}", 0) for j, x in enumerate(_list(_get(t, "beta", p), f"{p}/beta")))
        if len(alpha) != n:
            raise SchemaError(f"alpha must have length {n}", f"{p}/alpha")
        if len(beta) != n:
            raise SchemaError(f"beta must have length {n}", f"{p}/beta")
        if (alpha, beta) in terms:
            raise SchemaError("duplicate (alpha, beta) term", p)
        terms[(alpha, beta)] = GaussianRational(_rational(_get(t, "re", p), f"{p}/re"), _rational(_get(t, "im", p), f"{p}/im"))
    return HermitianPoly(n, terms)


# --- SignatureForm ---


def form_to_json(form: SignatureForm) -> Dict[str, int]:
    return {"r": form.r, "s": form.s, "t": form.t}


def form_from_json(data: Any, pointer: str = "") -> SignatureForm:
    r, s, t = (_int(_get(data, k, pointer), f"{pointer}/{k}", 0) for k in ("r", "s", "t"))
    try:
        return SignatureForm(r, s, t)
    except InvalidInput as exc:
        raise SchemaError(str(exc), pointer) from None


# --- WeightedSOSDecomposition ---


def decomposition_to_json(dec: WeightedSOSDecomposition, product=None) -> Dict[str, Any]:
    """product 를 주면 함께 기록 (없으면 Σ d_k|g_k|² 를 전개해서 쓴다)."""
    expanded = product if product is not None else HermitianPoly.from_polynomial(dec.expand())
    return {
        "schema": DECOMPOSITION_SCHEMA,
        "form": form_to_json(dec.form),
        "homogenized": dec.homogenized,
        "source_n": dec.source_n,
        "n": dec.n,
        "R": dec.R,
        "p": dec.p,
        "q": dec.q,
        "weights": [format_rational(w) for w in dec.weights],
        "polys": [format_holomorphic(g) for g in dec.polys],
        "product": poly_to_json(expanded),
        "display": unit_weight_display(dec),
    }


def decomposition_from_json(data: Any, pointer: str = "") -> WeightedSOSDecomposition:
    _check_schema(data, DECOMPOSITION_SCHEMA, pointer)
    n = _int(_get(data, "n", pointer), f"{pointer}/n", 1)
    weights = [_rational(w, f"{pointer}/weights/{i}") for i, w in enumerate(_list(_get(data, "weights", pointer), f"{pointer}/weights"))]
    polys = []
    for i, text in enumerate(_list(_get(data, "polys", pointer), f"{pointer}/polys")):
        p = f"{pointer}/polys/{i}"
        if not isinstance(text, str):
            raise SchemaError("polynomials must be PolyText strings", p)
        try:
            polys.append(parse_holomorphic(text, n))
        except HermrankError as exc:
            raise SchemaError(str(exc), p) from None
    if len(weights) != len(polys):
        raise SchemaError("weights and polys differ in length", f"{pointer}/polys")
    homogenized = _get(data, "homogenized", pointer)
    if not isinstance(homogenized, bool):
        raise SchemaError("expected a boolean", f"{pointer}/homogenized")
    try:
        return WeightedSOSDecomposition(
            weights=tuple(weights),
            polys=tuple(polys),
            form=form_from_json(_get(data, "form", pointer), f"{pointer}/form"),
            homogenized=homogenized,
            source_n=_int(_get(data, "source_n", pointer), f"{pointer}/source_n", 1),
        )
    except InvalidInput as exc:
        raise SchemaError(str(exc), pointer) from None


# --- GapProfile ---


def profile_to_json(profile: GapProfile) -> Dict[str, Any]:
    return {
        "schema": PROFILE_SCHEMA,
        "n": profile.n,
        "tau": profile.tau,
        "variant": profile.variant.value,
        "k0": profile.k0,
        "allowed": [list(i) for i in profile.allowed],
        "tail": profile.tail,
        "forbidden": [list(i) for i in profile.forbidden],
        "observational": profile.variant.observational,
    }


def profile_from_json(data: Any, pointer: str = "") -> GapProfile:
    _check_schema(data, PROFILE_SCHEMA, pointer)
    variant_name = _get(data, "variant", pointer)
    try:
        variant = TheoremVariant(variant_name)
    except ValueError:
        raise SchemaError(f"unknown variant {variant_name!r}", f"{pointer}/variant") from None
    return GapProfile(
        n=_int(_get(data, "n", pointer), f"{pointer}/n", 1),
        tau=_int(_get(data, "tau", pointer), f"{pointer}/tau", 0),
        variant=variant,
        k0=_int(_get(data, "k0", pointer), f"{pointer}/k0", 0),
        allowed=_interval_list(_get(data, "allowed", pointer), f"{pointer}/allowed"),
        tail=_int(_get(data, "tail", pointer), f"{pointer}/tail"),
        forbidden=_interval_list(_get(data, "forbidden", pointer), f"{pointer}/forbidden"),
    )


# --- SpanReport ---


def span_report_to_json(report: SpanReport) -> Dict[str, Any]:
    return {
        "schema": SPAN_SCHEMA,
        "check": report.check,
        "trial": report.trial,
        "seed": str(report.seed),
        "dims": list(report.dims),
        "measured": list(report.measured),
        "bound": report.bound,
        "passed": report.passed,
        "status": report.status,
        "reason": report.reason,
        "attempts": report.attempts,
        "pairing_vanishes": report.pairing_vanishes,
        "extra": dict(report.extra),
    }


def span_report_from_json(data: Any, pointer: str = "") -> SpanReport:
    _check_schema(data, SPAN_SCHEMA, pointer)
    seed_text = _get(data, "seed", pointer)
    if not isinstance(seed_text, str) or not seed_text.isdigit():
        raise SchemaError("seed must be a decimal string", f"{pointer}/seed")
    bound = _get(data, "bound", pointer)
    return SpanReport(
        check=str(_get(data, "check", pointer)),
        trial=_int(_get(data, "trial", pointer), f"{pointer}/trial", 0),
        seed=int(seed_text),
        dims=tuple(_int(x, f"{pointer}/dims/{i}") for i, x in enumerate(_list(_get(data, "dims", pointer), f"{pointer}/dims"))),
        measured=tuple(
            _int(x, f"{pointer}/measured/{i}") for i, x in enumerate(_list(_get(data, "measured", pointer), f"{pointer}/measured"))
        ),
        bound=None if bound is None else _int(bound, f"{pointer}/bound"),
        passed=bool(_get(data, "passed", pointer)),
        status=str(_get(data, "status", pointer)),
        reason=str(data.get("reason", "")),
        attempts=_int(data.get("attempts", 1), f"{pointer}/attempts", 0),
        pairing_vanishes=data.get("pairing_vanishes"),
        extra=dict(data.get("extra") or {}),
    )


# --- harness Report ---


def report_to_json(report) -> Dict[str, Any]:
    return report.to_dict()


def report_from_json(data: Any, pointer: str = ""):
    from hermrank.harness.report import Report

    _check_schema(data, REPORT_SCHEMA, pointer)
    return Report.from_dict(data)


# --- generic entry points ---


def _check_schema(data: Any, expected: str, pointer: str) -> None:
    found = _get(data, "schema", pointer)
    if found != expected:
        raise SchemaError(f"expected schema {expected!r}, found {found!r}", f"{pointer}/schema")


_READERS = {
    DECOMPOSITION_SCHEMA: decomposition_from_json,
    PROFILE_SCHEMA: profile_from_json,
    SPAN_SCHEMA: span_report_from_json,
    REPORT_SCHEMA: report_from_json,
}


def to_json(obj: Any) -> Dict[str, Any]:
    from hermrank.harness.report import Report
    from hermrank.poly import Polynomial

    if isinstance(obj, WeightedSOSDecomposition):
        return decomposition_to_json(obj)
    if isinstance(obj, GapProfile):
        return profile_to_json(obj)
    if isinstance(obj, SpanReport):
        return span_report_to_json(obj)
    if isinstance(obj, Report):
        return report_to_json(obj)
    if isinstance(obj, Polynomial):
        return poly_to_json(obj)
    raise InvalidInput(f"[to_json] no JSON schema for {type(obj).__name__}")


def from_json(data: Any):
    """schema 필드로 타입을 고른다. schema 가 없으면 PolyJSON."""
    if isinstance(data, dict) and "schema" in data:
        reader = _READERS.get(data["schema"])
        if reader is None:
            raise SchemaError(f"unknown schema {data['schema']!r}", "/schema")
        return reader(data)
    return poly_from_json(data)


def write_json(obj: Any, path: Optional[PathLike] = None) -> str:
    """canonical text 를 돌려주고, path 가 있으면 파일로도 쓴다."""
    payload = obj if isinstance(obj, dict) else to_json(obj)
    text = canonical_dumps(payload)
    if path is not None:
        Path(path).write_text(text, encoding="utf-8")
    return text


def read_json(source: Union[PathLike, str]):
    """파일 경로나 JSON 텍스트를 읽어 해당 타입으로."""
    text = source
    if isinstance(source, Path) or (isinstance(source, str) and not source.lstrip().startswith(("{", "["))):
        text = Path(source).read_text(encoding="utf-8")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc.msg}", "") from None
    return from_json(data)
