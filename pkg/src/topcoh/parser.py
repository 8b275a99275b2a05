"""Recursive descent parser for polynomial expressions.

Grammar (whitespace ignored)::

    expr     := term (("+" | "-") term)*
    term     := unary (("*" | "/") unary)*
    unary    := ("-" | "+") unary | power
    power    := atom ("^" INT)?
    atom     := INT | IDENT | "(" expr ")"

``/`` is only allowed with a nonzero constant divisor, which is how
rational coefficients such as ``3/4*x`` are written.
"""

from __future__ import annotations

import re
from typing import Iterable

from .errors import ParseError
from .groebner import Ideal
from .ring import Polynomial, Ring

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S))")


def tokenize(text: str) -> list:
    """List of (kind, value, position); kind is 'int', 'name', 'op' or 'end'."""
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # only trailing whitespace left
            break
        if m.group(1) is not None:
            tokens.append(("int", int(m.group(1)), m.start(1)))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), m.start(2)))
        elif m.group(3) is not None:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ParseError(f"unexpected character {ch!r}", m.start(3), text)
            tokens.append(("op", ch, m.start(3)))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, ring: Ring):
        self.text = text
        self.ring = ring
        self.tokens = tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def advance(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, message, tok=None):
        tok = tok or self.peek()
        return ParseError(message, tok[2], self.text)

    def at(self, op):
        kind, value, _ = self.peek()
        return kind == "op" and value == op

    def parse(self) -> Polynomial:
        if self.peek()[0] == "end":
            raise self.error("empty expression")
        result = self.expr()
        if self.peek()[0] != "end":
            raise self.error(f"unexpected {self.peek()[1]!r}")
        return result

    def expr(self):
        result = self.term()
        while self.at("+") or self.at("-"):
            op = self.advance()[1]
            rhs = self.term()
            result = result + rhs if op == "+" else result - rhs
        return result

    def term(self):
        result = self.unary()
        while self.at("*") or self.at("/"):
            op_tok = self.advance()
            rhs = self.unary()
            if op_tok[1] == "*":
                result = result * rhs
            else:
                if not rhs.is_constant() or rhs.is_zero():
                    raise self.error("division only by a nonzero constant", op_tok)
                (c,) = rhs.coefficients.values()
                result = result.scale(self.ring.inverse(c))
        return result

    def unary(self):
        if self.at("-"):
            self.advance()
            return -self.unary()
        if self.at("+"):
            self.advance()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.at("^"):
            self.advance()
            kind, value, _ = self.peek()
            if kind == "op" and value == "-":
                raise self.error("negative exponent")
            if kind != "int":
                raise self.error("exponent must be a non-negative integer")
            self.advance()
            base = base ** value
        return base

    def atom(self):
        kind, value, pos = self.advance()
        if kind == "int":
            return self.ring.constant(value)
        if kind == "name":
            if value not in self.ring.variables:
                raise ParseError(f"unknown variable {value!r}", pos, self.text)
            return self.ring.var(value)
        if kind == "op" and value == "(":
            inner = self.expr()
            if not self.at(")"):
                raise self.error("expected ')'")
            self.advance()
            return inner
        if kind == "end":
            raise ParseError("unexpected end of input", pos, self.text)
        raise ParseError(f"unexpected {value!r}", pos, self.text)


def parse_polynomial(text: str, ring: Ring) -> Polynomial:
    if not isinstance(text, str):
        raise ParseError(f"expected a string, got {type(text).__name__}")
    try:
        return _Parser(text, ring).parse()
    except ZeroDivisionError as exc:
        raise ParseError(str(exc)) from None


def parse_ideal(texts: Iterable[str], ring: Ring) -> Ideal:
    return Ideal(ring, [parse_polynomial(t, ring) for t in texts])


def identifiers(texts: Iterable[str]) -> list:
    """Variable names mentioned in a collection of polynomial strings, sorted."""
    names = set()
    for t in texts:
        names.update(v for kind, v, _ in tokenize(t) if kind == "name")
    return sorted(names)

