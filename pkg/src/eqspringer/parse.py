"""A small precedence-climbing parser for polynomial expressions.

Grammar (``^`` binds tightest, then ``*``/``/``, then ``+``/``-``)::

    expr   := term (("+" | "-") term)*
    term   := unary (("*" | "/") unary)*
    unary  := ("-" | "+") unary | power
    power  := atom ("^" INTEGER)?
    atom   := INTEGER | VARIABLE | "(" expr ")"

Variables are ``x<i>``, ``z<j>`` and ``y<p>``.  Division is only allowed by
non-zero constants, which is enough to read back printed rational coefficients.

>>> print(parse_poly("(x1 - z1)*(x2 - z1)", (2, 1)))
x1*x2 - x1*z1 - x2*z1 + z1^2
>>> parse_poly("x1 +", (2, 0))
Traceback (most recent call last):
...
eqspringer.parse.ParseError: expected a number, variable or '(' at position 4
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .exactpoly import Ambient, Polynomial

__all__ = ["ParseError", "parse_poly", "tokenize", "MAX_EXPONENT"]

MAX_EXPONENT = 64

_TOKEN = re.compile(r"\s*(?:(\d+)|([xyz])(\d+)|(.))")


class ParseError(ValueError):
    """Syntax error, unknown variable or oversized exponent; carries ``position``."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


@dataclass(frozen=True)
class Token:
    kind: str  # "int", "var", "op", "end"
    value: object
    pos: int


def tokenize(text: str) -> list[Token]:
    out = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        start = m.start() + len(m.group(0)) - len(m.group(0).lstrip())
        if m.group(1) is not None:
            out.append(Token("int", int(m.group(1)), start))
        elif m.group(2) is not None:
            out.append(Token("var", m.group(2) + str(int(m.group(3))), start))
        else:
            ch = m.group(4)
            if ch not in "+-*/^()":
                raise ParseError(f"unexpected character {ch!r}", start)
            out.append(Token("op", ch, start))
        pos = m.end()
    out.append(Token("end", None, len(text)))
    return out


class _Parser:
    def __init__(self, text: str, ambient: Ambient):
        self.tokens = tokenize(text)
        self.i = 0
        self.ambient = ambient

    def peek(self) -> Token:
        return self.tokens[self.i]

    def take(self) -> Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def at_op(self, chars: str) -> bool:
        tok = self.peek()
        return tok.kind == "op" and tok.value in chars

    def expr(self) -> Polynomial:
        left = self.term()
        while self.at_op("+-"):
            op = self.take().value
            right = self.term()
            left = left + right if op == "+" else left - right
        return left

    def term(self) -> Polynomial:
        left = self.unary()
        while self.at_op("*/"):
            tok = self.take()
            right = self.unary()
            if tok.value == "*":
                left = left * right
            else:
                if not right.is_constant() or right.is_zero():
                    raise ParseError("division only by a non-zero constant", tok.pos)
                left = left / Fraction(right.constant_term())
        return left

    def unary(self) -> Polynomial:
        if self.at_op("-"):
            self.take()
            return -self.unary()
        if self.at_op("+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self) -> Polynomial:
        base = self.atom()
        if self.at_op("^"):
            self.take()
            tok = self.take()
            if tok.kind != "int":
                raise ParseError("exponent must be a non-negative integer", tok.pos)
            if tok.value > MAX_EXPONENT:
                raise ParseError(f"exponent {tok.value} exceeds {MAX_EXPONENT}", tok.pos)
            base = base ** tok.value
        return base

    def atom(self) -> Polynomial:
        tok = self.take()
        if tok.kind == "int":
            return Polynomial.constant(tok.value, self.ambient)
        if tok.kind == "var":
            try:
                return Polynomial.var(tok.value, self.ambient)
            except KeyError:
                raise ParseError(f"unknown variable {tok.value}", tok.pos) from None
        if tok.kind == "op" and tok.value == "(":
            inner = self.expr()
            close = self.take()
            if not (close.kind == "op" and close.value == ")"):
                raise ParseError("expected ')'", close.pos)
            return inner
        raise ParseError("expected a number, variable or '('", tok.pos)


def parse_poly(text: str, ambient) -> Polynomial:
    """Parse ``text`` into a Polynomial over ``ambient`` (``(n, k)`` or ``(n, k, ny)``)."""
    p = _Parser(text, Ambient(*ambient))
    if p.peek().kind == "end":
        raise ParseError("empty expression", 0)
    out = p.expr()
    tok = p.peek()
    if tok.kind != "end":
        raise ParseError(f"unexpected {tok.value!r}", tok.pos)
    return out
