from hermrank.polyio.formatter import format_holomorphic, format_monomial, format_poly
from hermrank.polyio.json_codec import (
    DECOMPOSITION_SCHEMA,
    PROFILE_SCHEMA,
    REPORT_SCHEMA,
    SPAN_SCHEMA,
    canonical_dumps,
    decomposition_from_json,
    decomposition_to_json,
    form_from_json,
    form_to_json,
    from_json,
    json_line,
    poly_from_json,
    poly_to_json,
    profile_from_json,
    profile_to_json,
    read_json,
    report_from_json,
    report_to_json,
    span_report_from_json,
    span_report_to_json,
    to_json,
    write_json,
)
from hermrank.polyio.parser import PolyParser, parse_holomorphic, parse_poly, parse_polynomial

__all__ = [
    "DECOMPOSITION_SCHEMA",
    "PROFILE_SCHEMA",
    "PolyParser",
    "REPORT_SCHEMA",
    "SPAN_SCHEMA",
    "canonical_dumps",
    "decomposition_from_json",
    "decomposition_to_json",
    "form_from_json",
    "form_to_json",
    "format_holomorphic",
    "format_monomial",
    "format_poly",
    "from_json",
    "json_line",
    "parse_holomorphic",
    "parse_poly",
    "parse_polynomial",
    "poly_from_json",
    "poly_to_json",
    "profile_from_json",
    "profile_to_json",
    "read_json",
    "report_from_json",
    "report_to_json",
    "span_report_from_json",
    "span_report_to_json",
    "to_json",
    "write_json",
]
