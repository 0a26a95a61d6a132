"""Parsing of scalar and polynomial expressions.

Grammar (whitespace-insensitive, juxtaposition means product)::

    expr  := term (("+" | "-") term)*
    term  := unary (["*" | "/"] unary)*
    unary := "-" unary | power
    power := atom ["^" integer]
    atom  := integer | "z" | "e" integer | "e_" integer | "(" expr ")"

``z`` is the fixed primitive root zeta_n of Q(zeta_n), or the class of x
(a primitive element) in a finite field.
"""

from __future__ import annotations

import re

from ..arith.cyclotomic import CyclotomicField
from ..arith.finite_field import FiniteField
from ..errors import DivisionByZero, ParseError

_TOKEN = re.compile(r"\s*(?:(\d+)|(e_?\d+)|(z)|(\*\*|[-+*/^()]))")


def _tokenize(text: str) -> list[str]:
    pos, out = 0, []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected input at {text[pos:pos + 10]!r}")
        tok = m.group(0).strip()
        out.append("^" if tok == "**" else tok)
        pos = m.end()
    return out


class _Parser:
    def __init__(self, text: str, ops):
        self.toks = _tokenize(text)
        self.pos = 0
        self.ops = ops

    def peek(self):
        return self.toks[self.pos] if self.pos < len(self.toks) else None

    def take(self, expected=None):
        tok = self.peek()
        if tok is None or (expected is not None and tok != expected):
            raise ParseError(f"expected {expected or 'token'}, found {tok!r}")
        self.pos += 1
        return tok

    def parse(self):
        if not self.toks:
            raise ParseError("empty expression")
        value = self.expr()
        if self.peek() is not None:
            raise ParseError(f"trailing input {self.peek()!r}")
        return value

    def expr(self):
        value = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()
            rhs = self.term()
            value = self.ops.add(value, rhs) if op == "+" else self.ops.sub(value, rhs)
        return value

    def term(self):
        value = self.unary()
        while True:
            tok = self.peek()
            if tok == "*":
                self.take()
                value = self.ops.mul(value, self.unary())
            elif tok == "/":
                self.take()
                value = self.ops.div(value, self.unary())
            elif tok is not None and tok not in ("+", "-", ")", "^"):
                value = self.ops.mul(value, self.unary())
            else:
                return value

    def unary(self):
        if self.peek() == "-":
            self.take()
            return self.ops.neg(self.unary())
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() == "^":
            self.take()
            neg = False
            if self.peek() == "-":
                self.take()
                neg = True
            tok = self.take()
            if not tok.isdigit():
                raise ParseError(f"exponent must be an integer, found {tok!r}")
            return self.ops.pow(base, -int(tok) if neg else int(tok))
        return base

    def atom(self):
        tok = self.take()
        if tok == "(":
            value = self.expr()
            self.take(")")
            return value
        if tok.isdigit():
            return self.ops.const(int(tok))
        if tok == "z":
            return self.ops.zeta()
        if tok.startswith("e"):
            return self.ops.gen(int(tok.lstrip("e_")))
        raise ParseError(f"unexpected token {tok!r}")


def _field_zeta(field):
    if isinstance(field, CyclotomicField):
        return field.zeta()
    return field.generator()


class _ScalarOps:
    def __init__(self, field):
        self.field = field

    def const(self, c):
        return self.field(c)

    def zeta(self):
        return _field_zeta(self.field)

    def gen(self, k):
        raise ParseError("generators are not allowed in a scalar")

    add = staticmethod(lambda a, b: a + b)
    sub = staticmethod(lambda a, b: a - b)
    mul = staticmethod(lambda a, b: a * b)
    neg = staticmethod(lambda a: -a)

    def div(self, a, b):
        if not b:
            raise DivisionByZero("division by zero in scalar expression")
        return a / b

    def pow(self, a, e):
        if e < 0 and not a:
            raise DivisionByZero("negative power of zero")
        return a**e


class _PolyOps:
    def __init__(self, pres):
        self.pres = pres

    def const(self, c):
        return self.pres.one().scale(c)

    def zeta(self):
        return self.pres.one().scale(_field_zeta(self.pres.field))

    def gen(self, k):
        if not 0 <= k < self.pres.num_gens:
            raise ParseError(f"generator e{k} out of range")
        return self.pres.gen(k)

    add = staticmethod(lambda a, b: a + b)
    sub = staticmethod(lambda a, b: a - b)
    neg = staticmethod(lambda a: -a)

    def mul(self, a, b):
        return self.pres.multiply(a, b)

    def div(self, a, b):
        c = _as_scalar(b)
        if c is None:
            raise ParseError("can only divide by a scalar")
        if not c:
            raise DivisionByZero("division by zero")
        return a.scale(1 / c)

    def pow(self, a, e):
        if e < 0:
            c = _as_scalar(a)
            if c is None:
                raise ParseError("negative powers only for scalars")
            return self.pres.one().scale(c**e)
        return self.pres.power(a, e)


def _as_scalar(poly):
    if not poly.terms:
        return poly.field.zero
    if set(poly.terms) == {(0,) * poly.num_gens}:
        return poly.terms[(0,) * poly.num_gens]
    return None


_FIELD_SUFFIX = re.compile(r"@\s*(?:order\s+(\d+)|F_?(\d+)(?:\^(\d+))?)\s*$")


def parse_scalar(text: str, field=None):
    """Parse ``"z^2+1 @ order 8"`` or ``"3 @ F7"``; without a suffix ``field`` is used."""
    text = str(text).strip()
    m = _FIELD_SUFFIX.search(text)
    if m:
        if m.group(1):
            suffix_field = CyclotomicField(int(m.group(1)))
        else:
            suffix_field = FiniteField(int(m.group(2)), int(m.group(3) or 1))
        if field is not None and suffix_field != field:
            raise ParseError(f"scalar field {suffix_field.describe()} differs from {field.describe()}")
        field = suffix_field
        text = text[: m.start()]
    if field is None:
        raise ParseError("no coefficient field given for scalar")
    return _Parser(text, _ScalarOps(field)).parse()


def parse_expression(text: str, pres):
    """Normal form of a polynomial expression in the generators of ``pres``."""
    return _Parser(text, _PolyOps(pres)).parse()
