# src/hermrank/arith/rational.py
"""
유리수 계수체.

Rational 은 fractions.Fraction 을 그대로 사용한다.
Fraction 은 항상 기약분수 + 양의 분모로 정규화되어 있으므로 canonical form 불변식이
자동으로 보장된다.
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Union

from hermrank.errors import DivisionByZero, InvalidInput

Rational = Fraction
RationalLike = Union[int, Fraction]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def as_rational(x: RationalLike) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool) or not isinstance(x, int):
        raise InvalidInput(f"[as_rational] exact integer or Fraction required, got {type(x).__name__}")
    return Fraction(x)


def sign(x: RationalLike) -> int:
    """정확한 부호 {-1, 0, +1}."""
    if x > 0:
        return 1
    if x < 0:
        return -1
    return 0


def bit_size(x: Fraction) -> int:
    return abs(x.numerator).bit_length() + x.denominator.bit_length()


def to_float(x: RationalLike) -> float:
    """표시용. 정확 계산 경로에서는 쓰지 않는다."""
    return float(as_rational(x))


def format_rational(x: Fraction) -> str:
    """'a/b' 형식. 분모가 1 이면 'a'."""
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text: str) -> Fraction:
    m = _RATIONAL_RE.match(text)
    if not m:
        raise InvalidInput(f"[parse_rational] not a rational literal: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise DivisionByZero(f"[parse_rational] zero denominator: {text!r}")
    return Fraction(num, den)
