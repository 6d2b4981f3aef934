# src/hermrank/polyio/parser.py
"""
PolyText 파서.

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := atom ('^' nat)*
    atom   := literal | var | cvar | '(' expr ')'
    var    := 'z' nat                     (1 <= nat <= n)
    cvar   := '~z' nat | 'conj(z' nat ')'
    literal:= rational | rational 'i' | 'i'     (rational = nat ['/' nat])

파싱하면서 바로 Polynomial 로 전개한다.
"""
from __future__ import annotations

from functools import lru_cache
from typing import List

import pyparsing as pp

from hermrank.arith import GaussianRational, parse_rational
from hermrank.errors import DivisionByZero, InvalidInput, PolySyntaxError, UnknownVariable
from hermrank.poly import HermitianPoly, HoloPoly, Polynomial


def byte_offset(text: str, loc: int) -> int:
    return len(text[:loc].encode("utf-8"))


class PolyParser:
    """n 변수용 문법. 같은 n 에 대해서는 parser_for(n) 로 재사용한다."""

    def __init__(self, n: int) -> None:
        if n < 1:
            raise InvalidInput(f"[PolyParser] n must be positive, got {n}")
        self.n = n
        self._text = ""
        self.grammar = self._build()

    # --- parse actions ---

    def _literal(self, s: str, loc: int, toks: pp.ParseResults) -> Polynomial:
        tok = toks[0]
        try:
            if tok.endswith("i"):
                body = tok[:-1]
                value = GaussianRational(0, parse_rational(body) if body else 1)
            else:
                value = GaussianRational(parse_rational(tok))
        except DivisionByZero:
            raise PolySyntaxError(f"[parse_poly] zero denominator in literal {tok!r}", byte_offset(s, loc)) from None
        return Polynomial.constant(self.n, value)

    def _index(self, s: str, loc: int, raw: str) -> int:
        k = int(raw)
        if not (1 <= k <= self.n):
            raise UnknownVariable(f"[parse_poly] unknown variable z{k} (n={self.n})", byte_offset(s, loc))
        return k - 1

    def _var(self, s: str, loc: int, toks: pp.ParseResults) -> Polynomial:
        return Polynomial.variable(self.n, self._index(s, loc, toks["index"]))

    def _cvar(self, s: str, loc: int, toks: pp.ParseResults) -> Polynomial:
        return Polynomial.conj_variable(self.n, self._index(s, loc, toks["index"]))

    @staticmethod
    def _power(toks: pp.ParseResults) -> Polynomial:
        items = list(toks)
        base = items[0]
        for e in items[1:]:
            base = base ** int(e)
        return base

    @staticmethod
    def _product(toks: pp.ParseResults) -> Polynomial:
        items = list(toks)
        acc = items[0]
        for f in items[1:]:
            acc = acc * f
        return acc

    def _sum(self, toks: pp.ParseResults) -> Polynomial:
        items: List = list(toks)
        negate_first = False
        if items and isinstance(items[0], str):
            negate_first = items.pop(0) == "-"
        acc = -items[0] if negate_first else items[0]
        for op, t in zip(items[1::2], items[2::2]):
            acc = acc + t if op == "+" else acc - t
        return acc

    def _build(self) -> pp.ParserElement:
        expr = pp.Forward()
        nat = pp.Regex(r"\d+")
        literal = pp.Regex(r"\d+(?:/\d+)?i?|i").set_parse_action(self._literal)
        var = pp.Regex(r"z(?P<index>\d+)").set_parse_action(self._var)
        cvar = (
            pp.Regex(r"~z(?P<index>\d+)") | pp.Regex(r"conj\(\s*z(?P<index>\d+)\s*\)")
        ).set_parse_action(self._cvar)
        lpar, rpar = pp.Suppress("("), pp.Suppress(")")

        atom = cvar | var | literal | (lpar + expr + rpar)
        factor = (atom + pp.ZeroOrMore(pp.Suppress("^") + nat)).set_parse_action(self._power)
        term = (factor + pp.ZeroOrMore(pp.Suppress("*") + factor)).set_parse_action(self._product)
        addop = pp.one_of("+ -")
        expr <<= (pp.Optional(addop) + term + pp.ZeroOrMore(addop + term)).set_parse_action(self._sum)
        return expr + pp.StringEnd()

    def parse(self, text: str) -> Polynomial:
        if not text.strip():
            raise PolySyntaxError("[parse_poly] empty expression", 0)
        try:
            return self.grammar.parse_string(text, parse_all=True)[0]
        except pp.ParseBaseException as exc:
            raise PolySyntaxError(f"[parse_poly] syntax error: {exc.msg}", byte_offset(text, exc.loc)) from None


@lru_cache(maxsize=64)
def parser_for(n: int) -> PolyParser:
    return PolyParser(n)


def parse_polynomial(text: str, n: int) -> Polynomial:
    """Hermitian 검사 없이 일반 다항식으로."""
    return parser_for(n).parse(text)


def parse_poly(text: str, n: int) -> HermitianPoly:
    return HermitianPoly.from_polynomial(parse_polynomial(text, n))


def parse_holomorphic(text: str, n: int) -> HoloPoly:
    f = parse_polynomial(text, n)
    out = {}
    for (alpha, beta), c in f.terms.items():
        if any(beta):
            raise PolySyntaxError(f"[parse_holomorphic] conjugated variable in holomorphic polynomial {text!r}", 0)
        out[alpha] = c
    return HoloPoly(n, out)
