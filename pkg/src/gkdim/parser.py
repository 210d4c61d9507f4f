"""Expression grammar for scalars, Laurent polynomials and Ore elements.

    expr    := term (('+' | '-') term)*
    term    := unary (('*' | '/') unary)*
    unary   := ('-' | '+') unary | power
    power   := atom ('^' ['-' | '+'] INT)?
    atom    := INT | 't'INT | 'x'INT | 'x' | '(' expr ')'

``x`` (no index) is the Ore variable and is only legal when the ambient is
an Ore extension.  Division is allowed by units: nonzero scalars and
Laurent monomials.  Expressions are evaluated directly in the ambient.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ExpressionSyntaxError, NegativeOrePower
from .laurent import LaurentPoly, LaurentRing
from .ore import OreElement, OreRing
from .scalars import Field

_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<int>\d+)
  | (?P<tvar>t\d+)
  | (?P<xvar>x\d+)
  | (?P<xore>x(?![\w]))
  | (?P<pow>\^|\*\*)
  | (?P<op>[-+*/()])
    """,
    re.VERBOSE,
)


@dataclass
class Token:
    kind: str
    text: str
    pos: int


def _position(text, pos):
    line = text.count("\n", 0, pos) + 1
    col = pos - (text.rfind("\n", 0, pos) + 1) + 1
    return line, col


def tokenize(text):
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            line, col = _position(text, pos)
            raise ExpressionSyntaxError(f"unexpected character {text[pos]!r}", line, col)
        kind = m.lastgroup
        if kind != "ws":
            out.append(Token(kind if kind != "op" else m.group(), m.group(), pos))
        pos = m.end()
    out.append(Token("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text, ambient):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0
        self.ambient = ambient
        if isinstance(ambient, Field):
            self.field, self.laurent, self.ore = ambient, None, None
        elif isinstance(ambient, LaurentRing):
            self.field, self.laurent, self.ore = ambient.field, ambient, None
        elif isinstance(ambient, OreRing):
            self.field, self.laurent, self.ore = ambient.field, ambient.base, ambient
        else:
            raise TypeError(f"unsupported ambient {ambient!r}")

    # -- helpers ----------------------------------------------------------
    def error(self, message, tok=None, cls=ExpressionSyntaxError):
        tok = tok or self.peek()
        line, col = _position(self.text, tok.pos)
        raise cls(message, line, col)

    def peek(self):
        return self.tokens[self.i]

    def advance(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, kind):
        tok = self.peek()
        if tok.kind != kind:
            self.error(f"expected {kind!r}, found {tok.text or 'end of input'!r}")
        return self.advance()

    def embed(self, scalar):
        if self.ore is not None:
            return self.ore(scalar)
        if self.laurent is not None:
            return self.laurent(scalar)
        return self.field(scalar)

    # -- grammar ----------------------------------------------------------
    def parse(self):
        if self.peek().kind == "end":
            self.error("empty expression")
        value = self.expr()
        if self.peek().kind != "end":
            self.error(f"unexpected {self.peek().text!r}")
        return value

    def expr(self):
        value = self.term()
        while self.peek().kind in ("+", "-"):
            op = self.advance().kind
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.unary()
        while self.peek().kind in ("*", "/"):
            tok = self.advance()
            rhs = self.unary()
            if tok.kind == "*":
                value = value * rhs
            else:
                value = self.divide(value, rhs, tok)
        return value

    def unary(self):
        if self.peek().kind == "-":
            self.advance()
            return -self.unary()
        if self.peek().kind == "+":
            self.advance()
            return self.unary()
        return self.power()

    def power(self):
        start = self.peek()
        base = self.atom()
        if self.peek().kind != "pow":
            return base
        self.advance()
        sign = 1
        if self.peek().kind in ("-", "+"):
            sign = -1 if self.advance().kind == "-" else 1
        tok = self.expect("int")
        k = sign * int(tok.text)
        if k >= 0:
            return base**k
        return self.inverse(base, start) ** (-k)

    def atom(self):
        tok = self.peek()
        if tok.kind == "int":
            self.advance()
            return self.embed(int(tok.text))
        if tok.kind == "tvar":
            self.advance()
            i = int(tok.text[1:])
            if not 1 <= i <= self.field.r:
                self.error(f"{tok.text} is not a transcendental of this field (r={self.field.r})", tok)
            return self.embed(self.field.gen(i))
        if tok.kind == "xvar":
            self.advance()
            if self.laurent is None:
                self.error(f"{tok.text} is not allowed in a scalar expression", tok)
            i = int(tok.text[1:])
            if not 1 <= i <= self.laurent.n:
                self.error(f"{tok.text} is out of range for n={self.laurent.n}", tok)
            g = self.laurent.gen(i)
            return self.ore(g) if self.ore is not None else g
        if tok.kind == "xore":
            self.advance()
            if self.ore is None:
                self.error("the Ore variable x is only allowed over R", tok)
            return self.ore.x
        if tok.kind == "(":
            self.advance()
            value = self.expr()
            self.expect(")")
            return value
        self.error(f"unexpected {tok.text or 'end of input'!r}", tok)

    # -- units ------------------------------------------------------------
    def inverse(self, value, tok):
        if isinstance(value, OreElement):
            if value.deg_x > 0:
                self.error("negative power of an element involving x", tok, NegativeOrePower)
            inner = value.to_laurent()
            if not inner.is_unit():
                self.error("negative power of a non-unit", tok)
            return self.ore(inner.inverse())
        if isinstance(value, LaurentPoly):
            if not value.is_unit():
                self.error("negative power of a non-unit", tok)
            return value.inverse()
        if not value:
            self.error("division by zero", tok)
        return 1 / value

    def divide(self, a, b, tok):
        return a * self.inverse(b, tok)


def parse_expression(text, ambient):
    """Parse ``text`` into an element of ``ambient`` (Field, LaurentRing or OreRing)."""
    return _Parser(text, ambient).parse()


def parse_scalar(text, field):
    return _Parser(text, field).parse()
