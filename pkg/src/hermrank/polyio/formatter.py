# src/hermrank/polyio/formatter.py
"""PolyText 출력. 항 순서는 graded-lex (term_key), parse_poly 로 다시 읽으면 같은 다항식."""
from __future__ import annotations

from typing import List, Tuple

from hermrank.arith import GaussianRational, format_gaussian, format_rational
from hermrank.poly import HoloPoly, MultiIndex, Polynomial


def _power_text(prefix: str, j: int, e: int) -> str:
    return f"{prefix}z{j + 1}" if e == 1 else f"{prefix}z{j + 1}^{e}"


def format_monomial(alpha: MultiIndex, beta: MultiIndex = ()) -> str:
    """z1^2*z2*~z1 형태. 상수 단항식은 '1'."""
    parts = [_power_text("", j, e) for j, e in enumerate(alpha) if e]
    parts += [_power_text("~", j, e) for j, e in enumerate(beta) if e]
    return "*".join(parts) if parts else "1"


def _split_sign(c: GaussianRational) -> Tuple[str, str]:
    """(부호, 절댓값 텍스트). 실수/순허수면 부호를 밖으로 뺀다."""
    if not c.im:
        return ("-" if c.re < 0 else "+"), format_rational(abs(c.re))
    if not c.re:
        txt = format_gaussian(GaussianRational(0, abs(c.im)))
        return ("-" if c.im < 0 else "+"), txt
    return "+", f"({format_gaussian(c)})"


def _join(items: List[Tuple[str, str]]) -> str:
    if not items:
        return "0"
    out = []
    for i, (sgn, body) in enumerate(items):
        if i == 0:
            out.append(body if sgn == "+" else f"-{body}")
        else:
            out.append(f" {sgn} {body}")
    return "".join(out)


def _term(c: GaussianRational, mono: str) -> Tuple[str, str]:
    sgn, coef = _split_sign(c)
    if mono == "1":
        return sgn, coef
    if coef == "1":
        return sgn, mono
    return sgn, f"{coef}*{mono}"


def format_poly(f: Polynomial) -> str:
    return _join([_term(c, format_monomial(a, b)) for (a, b), c in f.sorted_terms()])


def format_holomorphic(g: HoloPoly) -> str:
    return _join([_term(c, format_monomial(a)) for a, c in g.sorted_terms()])
