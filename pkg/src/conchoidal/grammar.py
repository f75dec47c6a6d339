"""The shared polynomial text grammar.

Variables ``x y z t``, integer and ``p/q`` rational literals, ``i`` for the
imaginary unit (Q(i) mode only), operators ``+ - * ^`` with ``^`` followed by
a nonnegative integer literal, parentheses, no implicit multiplication.

Serialization lists terms in descending graded-lex order with minus signs
folded into the coefficients; parse(serialize(p)) == p.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Optional, Tuple

from .errors import ParseError
from .fields import FIELD_Q, FIELD_QI, GaussianRational, Scalar, im_part, re_part
from .multipoly import MultiPoly

GRAMMAR_VARS = ("x", "y", "z", "t")

_OPS = set("+-*^()")


class _Token:
    __slots__ = ("kind", "value", "pos")

    def __init__(self, kind, value, pos):
        self.kind = kind          # 'num' | 'var' | 'imag' | one of + - * ^ ( )
        self.value = value        # Fraction for 'num' (with .denominator), str otherwise
        self.pos = pos

    def __repr__(self):
        return f"_Token({self.kind!r}, {self.value!r}, {self.pos})"


def _tokenize(text: str) -> List[_Token]:
    tokens: List[_Token] = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in _OPS:
            tokens.append(_Token(ch, ch, i))
            i += 1
            continue
        if ch.isdigit():
            start = i
            while i < n and text[i].isdigit():
                i += 1
            num = int(text[start:i])
            den = None
            if i < n and text[i] == "/":
                j = i + 1
                if j >= n or not text[j].isdigit():
                    raise ParseError("expected digits after '/'", j)
                i = j
                while i < n and text[i].isdigit():
                    i += 1
                den = int(text[j:i])
                if den == 0:
                    raise ParseError("zero denominator", j)
            tokens.append(_Token("num", (num, den), start))
            continue
        if ch == "i":
            tokens.append(_Token("imag", "i", i))
            i += 1
            continue
        if ch in GRAMMAR_VARS:
            tokens.append(_Token("var", ch, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    return tokens


class _Parser:
    def __init__(self, tokens: List[_Token], end: int, field: str):
        self.tokens = tokens
        self.k = 0
        self.end = end
        self.field = field

    def peek(self) -> Optional[_Token]:
        return self.tokens[self.k] if self.k < len(self.tokens) else None

    def next_pos(self) -> int:
        tok = self.peek()
        return tok.pos if tok is not None else self.end

    def take(self) -> _Token:
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of input", self.end)
        self.k += 1
        return tok

    def expr(self) -> MultiPoly:
        tok = self.peek()
        negate = False
        if tok is not None and tok.kind == "-":
            self.take()
            negate = True
        result = self.term()
        if negate:
            result = -result
        while True:
            tok = self.peek()
            if tok is None or tok.kind not in "+-":
                return result
            self.take()
            rhs = self.term()
            result = result + rhs if tok.kind == "+" else result - rhs

    def term(self) -> MultiPoly:
        result = self.factor()
        while True:
            tok = self.peek()
            if tok is None or tok.kind != "*":
                return result
            self.take()
            result = result * self.factor()

    def factor(self) -> MultiPoly:
        base = self.atom()
        tok = self.peek()
        if tok is not None and tok.kind == "^":
            self.take()
            etok = self.peek()
            if etok is None or etok.kind != "num" or etok.value[1] is not None:
                raise ParseError("expected a nonnegative integer exponent", self.next_pos())
            self.take()
            base = base ** etok.value[0]
        return base

    def atom(self) -> MultiPoly:
        tok = self.take()
        if tok.kind == "(":
            inner = self.expr()
            closing = self.peek()
            if closing is None or closing.kind != ")":
                raise ParseError("expected ')'", self.next_pos())
            self.take()
            return inner
        if tok.kind == "num":
            num, den = tok.value
            value = Fraction(num) if den is None else Fraction(num, den)
            return MultiPoly.constant(value, GRAMMAR_VARS, self.field)
        if tok.kind == "var":
            return MultiPoly.variable(tok.value, GRAMMAR_VARS, self.field)
        if tok.kind == "imag":
            if self.field != FIELD_QI:
                raise ParseError("imaginary unit 'i' requires the Q(i) field", tok.pos)
            return MultiPoly.constant(GaussianRational(0, 1), GRAMMAR_VARS, self.field)
        raise ParseError(f"unexpected token {tok.value!r}", tok.pos)


def parse_poly(text: str, field: str = FIELD_Q) -> MultiPoly:
    """Parse under the shared grammar into a polynomial over x, y, z, t."""
    tokens = _tokenize(text)
    parser = _Parser(tokens, len(text), field)
    result = parser.expr()
    tok = parser.peek()
    if tok is not None:
        raise ParseError(f"unexpected token {tok.value!r}", tok.pos)
    return result


def parse_scalar(text: str, field: str = FIELD_Q) -> Scalar:
    poly = parse_poly(text, field)
    if not poly.is_constant():
        raise ParseError("expected a scalar", 0)
    return poly.constant_value()


def _fraction_text(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _positive_scalar_text(c: Scalar) -> str:
    """Render a scalar whose display sign has already been folded out."""
    re, im = re_part(c), im_part(c)
    if im == 0:
        return _fraction_text(re)
    if re == 0:
        return "i" if im == 1 else f"{_fraction_text(im)}*i"
    imtext = "i" if im == 1 else ("-i" if im == -1 else f"{_fraction_text(im)}*i")
    if im < 0 and im != -1:
        return f"({_fraction_text(re)}-{_fraction_text(-im)}*i)"
    if im == -1:
        return f"({_fraction_text(re)}-i)"
    return f"({_fraction_text(re)}+{imtext})"


def _display_negative(c: Scalar) -> bool:
    re = re_part(c)
    if re != 0:
        return re < 0
    return im_part(c) < 0


def scalar_to_text(c: Scalar) -> str:
    if _display_negative(c):
        return "-" + _positive_scalar_text(-c)
    return _positive_scalar_text(c)


def _monomial_text(vars: Tuple[str, ...], exp: Tuple[int, ...]) -> str:
    parts = []
    for v, e in zip(vars, exp):
        if e == 1:
            parts.append(v)
        elif e > 1:
            parts.append(f"{v}^{e}")
    return "*".join(parts)


def poly_to_text(poly: MultiPoly) -> str:
    """Canonical graded-lex serialization under the shared grammar."""
    if poly.is_zero():
        return "0"
    pieces = []
    for exp, c in poly.sorted_terms():
        neg = _display_negative(c)
        mag = -c if neg else c
        mono = _monomial_text(poly.vars, exp)
        if not mono:
            body = _positive_scalar_text(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{_positive_scalar_text(mag)}*{mono}"
        pieces.append(("-" if neg else "+", body))
    sign, body = pieces[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in pieces[1:]:
        out += f" {sign} {body}"
    return out
