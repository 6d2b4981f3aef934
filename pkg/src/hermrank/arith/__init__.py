from hermrank.arith.gaussian import (
    I,
    ONE,
    ZERO,
    GaussianRational,
    conj,
    format_gaussian,
    gaussian,
    parse_gaussian,
)
from hermrank.arith.rational import (
    Rational,
    as_rational,
    bit_size,
    format_rational,
    parse_rational,
    sign,
    to_float,
)

__all__ = [
    "GaussianRational",
    "I",
    "ONE",
    "Rational",
    "ZERO",
    "as_rational",
    "bit_size",
    "conj",
    "format_gaussian",
    "format_rational",
    "gaussian",
    "parse_gaussian",
    "parse_rational",
    "sign",
    "to_float",
]
