"""Parser for polynomial expressions.

Grammar::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := atom ('^' nat)?
    atom   := letter | rational | 'cyc' '(' expr ')' | '(' expr ')'

Rationals are ``p/q`` or integers. Juxtaposition is rejected: ``xy`` is an
unknown identifier, write ``x*y``.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import ParseError
from .field import QQ
from .ncpoly import NcPoly
from .words import DEFAULT_ALPHABET

_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<rat>\d+\s*/\s*\d+|\d+)
  | (?P<ident>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<op>[-+*^()])
    """,
    re.VERBOSE,
)


def _tokenize(text: str):
    pos = 0
    tokens = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", text, pos)
        kind = m.lastgroup
        if kind != "ws":
            tokens.append((kind, m.group(), m.start()))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, alphabet: str, field):
        self.text = text
        self.alphabet = alphabet
        self.field = field
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value):
        kind, val, pos = self.take()
        if val != value:
            found = "end of input" if kind == "end" else repr(val)
            raise ParseError(f"expected {value!r}, found {found}", self.text, pos)

    def expr(self) -> NcPoly:
        sign = 1
        if self.peek()[1] in "+-" and self.peek()[0] == "op":
            sign = -1 if self.take()[1] == "-" else 1
        result = self.term()
        if sign < 0:
            result = -result
        while self.peek()[0] == "op" and self.peek()[1] in ("+", "-"):
            op = self.take()[1]
            rhs = self.term()
            result = result + rhs if op == "+" else result - rhs
        return result

    def term(self) -> NcPoly:
        result = self.factor()
        while self.peek()[1] == "*" and self.peek()[0] == "op":
            self.take()
            result = result * self.factor()
        return result

    def factor(self) -> NcPoly:
        base = self.atom()
        if self.peek()[1] == "^" and self.peek()[0] == "op":
            self.take()
            kind, val, pos = self.take()
            if kind != "rat" or "/" in val:
                raise ParseError("exponent must be a natural number", self.text, pos)
            base = base ** int(val)
        return base

    def atom(self) -> NcPoly:
        kind, val, pos = self.take()
        if kind == "rat":
            num = Fraction(val.replace(" ", ""))
            return NcPoly({"": num}, self.alphabet, self.field)
        if kind == "ident":
            if val == "cyc":
                from .potential import cyclic_symmetrize

                self.expect("(")
                inner = self.expr()
                self.expect(")")
                return cyclic_symmetrize(inner)
            if len(val) == 1 and val in self.alphabet:
                return NcPoly({val: 1}, self.alphabet, self.field)
            raise ParseError(f"unknown identifier {val!r}", self.text, pos)
        if val == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        found = "end of input" if kind == "end" else repr(val)
        raise ParseError(f"unexpected {found}", self.text, pos)


def parse_expression(text: str, alphabet: str = DEFAULT_ALPHABET, field=QQ) -> NcPoly:
    p = _Parser(text, alphabet, field)
    result = p.expr()
    kind, val, pos = p.peek()
    if kind != "end":
        raise ParseError(f"unexpected {val!r}", text, pos)
    return result


def parse_relations(text: str, alphabet: str = DEFAULT_ALPHABET, field=QQ) -> list[NcPoly]:
    """Semicolon- or newline-separated list of expressions."""
    parts = [s for s in re.split(r"[;\n]", text) if s.strip()]
    return [parse_expression(s, alphabet, field) for s in parts]
