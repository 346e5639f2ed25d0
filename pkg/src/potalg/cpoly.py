"""Commutative polynomials in x and y, keyed by exponent pairs."""

from __future__ import annotations

from fractions import Fraction

from .field import QQ, ModInt


class CPoly:
    """Finitely supported map ``(i, j) -> c`` standing for ``c * x^i * y^j``."""

    __slots__ = ("_terms", "field")

    def __init__(self, terms=None, field=QQ):
        self.field = field
        self._terms = {}
        for e, c in (terms or {}).items():
            c = field(c)
            if c:
                self._terms[(int(e[0]), int(e[1]))] = c

    @classmethod
    def _raw(cls, terms, field):
        p = object.__new__(cls)
        p._terms = terms
        p.field = field
        return p

    @classmethod
    def monomial(cls, i: int, j: int, c=1, field=QQ) -> "CPoly":
        return cls({(i, j): c}, field)

    def items(self):
        return self._terms.items()

    def coeff(self, e):
        return self._terms.get(e, self.field.zero)

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def leading(self):
        """Leading exponent and coefficient in lex order with x > y."""
        e = max(self._terms)
        return e, self._terms[e]

    @property
    def total_degree(self) -> int:
        return max((i + j for i, j in self._terms), default=-1)

    def _combine(self, other, sign):
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e, 0) + (c if sign > 0 else -c)
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return CPoly._raw(out, self.field)

    def __add__(self, other):
        if isinstance(other, (int, Fraction, ModInt)):
            other = CPoly({(0, 0): other}, self.field)
        return self._combine(other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, ModInt)):
            other = CPoly({(0, 0): other}, self.field)
        return self._combine(other, -1)

    def __neg__(self):
        return CPoly._raw({e: -c for e, c in self._terms.items()}, self.field)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, ModInt)):
            c = self.field(other)
            if not c:
                return CPoly(field=self.field)
            return CPoly._raw({e: v * c for e, v in self._terms.items()}, self.field)
        out: dict = {}
        for (a, b), c in self._terms.items():
            for (p, q), d in other._terms.items():
                e = (a + p, b + q)
                v = out.get(e, 0) + c * d
                if v:
                    out[e] = v
                else:
                    out.pop(e, None)
        return CPoly._raw(out, self.field)

    __rmul__ = __mul__

    def shift(self, i: int, j: int) -> "CPoly":
        """Multiply by the monomial x^i y^j."""
        return CPoly._raw({(a + i, b + j): c for (a, b), c in self._terms.items()}, self.field)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, ModInt)):
            other = CPoly({(0, 0): other}, self.field)
        if not isinstance(other, CPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __str__(self):
        if not self._terms:
            return "0"
        out = []
        for e in sorted(self._terms, key=lambda e: (e[0] + e[1], e), reverse=True):
            c = self._terms[e]
            mono = "*".join(
                s for s in (_pw("x", e[0]), _pw("y", e[1])) if s
            )
            neg = isinstance(c, Fraction) and c < 0
            mag = -c if neg else c
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if not out:
                out.append(f"-{body}" if neg else body)
            else:
                out.append(f"- {body}" if neg else f"+ {body}")
        return " ".join(out)

    def __repr__(self):
        return f"CPoly({str(self)!r})"


def _pw(v: str, e: int) -> str:
    if e == 0:
        return ""
    return v if e == 1 else f"{v}^{e}"
