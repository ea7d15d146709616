"""Parser for quaternion polynomial expressions such as ``t^2 - (i+j)*t - k``.

Grammar, loosest binding first::

    expr   := term (("+" | "-") term)*
    term   := factor (("*" | "/") factor | factor)*     # juxtaposition multiplies
    factor := ("+" | "-") factor | power
    power  := atom ("^" INT)?
    atom   := INT | "t" | "i" | "j" | "k" | "(" expr ")"

Products are expanded left to right with the non-commutative quaternion
product, so ``(t-j)*(t-i)`` and ``(t-i)*(t-j)`` differ.  Division is only
by nonzero rational constants.  Both ``-`` and the Unicode minus are
accepted.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import NonPolynomialError, PolySyntaxError
from .poly import QuatPoly, format_poly
from .scalar import Quaternion

__all__ = ["parse_poly", "format_poly", "PolyExpression"]

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z_])|(?P<op>[-+*/^()]))")
_MINUS_VARIANTS = str.maketrans({"−": "-", "–": "-", "·": "*"})

_UNITS = {
    "t": QuatPoly.t(),
    "i": QuatPoly.constant(Quaternion(0, 1)),
    "j": QuatPoly.constant(Quaternion(0, 0, 1)),
    "k": QuatPoly.constant(Quaternion(0, 0, 0, 1)),
}


@dataclass(frozen=True)
class _Tok:
    kind: str  # "num" | "name" | "op" | "end"
    text: str
    pos: int


def _tokenize(text: str) -> list[_Tok]:
    toks = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m:
            raise PolySyntaxError(f"unexpected character {text[pos]!r}", text, pos)
        kind = m.lastgroup
        start = m.start(kind)
        toks.append(_Tok(kind, m.group(kind), start))
        pos = m.end()
    toks.append(_Tok("end", "", n))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    @property
    def cur(self) -> _Tok:
        return self.toks[self.i]

    def take(self) -> _Tok:
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def fail(self, msg, tok=None, cls=PolySyntaxError):
        tok = tok or self.cur
        raise cls(msg, self.text, tok.pos)

    def expect(self, op: str):
        if self.cur.kind != "op" or self.cur.text != op:
            self.fail(f"expected {op!r}")
        self.take()

    def parse(self) -> QuatPoly:
        if self.cur.kind == "end":
            self.fail("empty expression")
        value = self.expr()
        if self.cur.kind != "end":
            self.fail(f"unexpected {self.cur.text!r}")
        return value

    def expr(self) -> QuatPoly:
        value = self.term()
        while self.cur.kind == "op" and self.cur.text in "+-":
            op = self.take().text
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def _starts_atom(self) -> bool:
        tok = self.cur
        return tok.kind in ("num", "name") or (tok.kind == "op" and tok.text == "(")

    def term(self) -> QuatPoly:
        value = self.factor()
        while True:
            tok = self.cur
            if tok.kind == "op" and tok.text == "*":
                self.take()
                value = value * self.factor()
            elif tok.kind == "op" and tok.text == "/":
                self.take()
                at = self.cur
                divisor = self.factor()
                if divisor.degree != 0 or not divisor.lc.is_real() or not divisor.lc:
                    self.fail("division is only by nonzero rational constants",
                              at, NonPolynomialError)
                value = value * QuatPoly.constant(Fraction(1) / divisor.lc.x0)
            elif self._starts_atom():
                value = value * self.power()
            else:
                return value

    def factor(self) -> QuatPoly:
        tok = self.cur
        if tok.kind == "op" and tok.text in "+-":
            self.take()
            inner = self.factor()
            return -inner if tok.text == "-" else inner
        return self.power()

    def power(self) -> QuatPoly:
        base = self.atom()
        if self.cur.kind == "op" and self.cur.text == "^":
            self.take()
            tok = self.cur
            if tok.kind == "op" and tok.text == "-":
                self.fail("negative exponents do not give a polynomial", tok, NonPolynomialError)
            if tok.kind != "num":
                self.fail("exponent must be a nonnegative integer literal")
            self.take()
            return base ** int(tok.text)
        return base

    def atom(self) -> QuatPoly:
        tok = self.cur
        if tok.kind == "num":
            self.take()
            return QuatPoly.constant(int(tok.text))
        if tok.kind == "name":
            self.take()
            try:
                return _UNITS[tok.text]
            except KeyError:
                self.fail(f"unknown symbol {tok.text!r}; use t, i, j, k", tok)
        if tok.kind == "op" and tok.text == "(":
            self.take()
            value = self.expr()
            self.expect(")")
            return value
        if tok.kind == "end":
            self.fail("unexpected end of input")
        self.fail(f"unexpected {tok.text!r}")


def parse_poly(text: str) -> QuatPoly:
    """Parse an expression in ``t`` with quaternion coefficients.

    >>> str(parse_poly("(t^2+1)*(t-k)"))
    't^3 - k*t^2 + t - k'
    """
    return _Parser(text.translate(_MINUS_VARIANTS)).parse()


@dataclass(frozen=True)
class PolyExpression:
    source: str
    poly: QuatPoly

    @classmethod
    def parse(cls, source: str) -> "PolyExpression":
        return cls(source, parse_poly(source))

    def __str__(self):
        return format_poly(self.poly)
