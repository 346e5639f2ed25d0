"""Noncommutative polynomials with exact coefficients."""

from __future__ import annotations

from fractions import Fraction
from types import MappingProxyType

from .errors import AlphabetError, EmptyPolynomialError
from .field import QQ, ModInt
from .words import DEFAULT_ALPHABET, MonomialOrder, check_alphabet, word_to_text

_ORDERS: dict[str, MonomialOrder] = {}


def default_order(alphabet: str) -> MonomialOrder:
    o = _ORDERS.get(alphabet)
    if o is None:
        o = _ORDERS[alphabet] = MonomialOrder(alphabet)
    return o


class NcPoly:
    """A finitely supported linear combination of words.

    Instances are immutable; arithmetic returns new objects. Zero
    coefficients are never stored.
    """

    __slots__ = ("_terms", "alphabet", "field", "_hash")

    def __init__(self, terms=None, alphabet: str = DEFAULT_ALPHABET, field=QQ):
        check_alphabet(alphabet)
        letters = set(alphabet)
        clean = {}
        for w, c in (terms or {}).items():
            if not letters.issuperset(w):
                raise AlphabetError(f"word {w!r} uses letters outside {alphabet!r}")
            c = field(c)
            if c:
                clean[w] = c
        self._terms = clean
        self.alphabet = alphabet
        self.field = field
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict, alphabet: str, field) -> "NcPoly":
        # trusted constructor: terms already pruned and converted
        p = object.__new__(cls)
        p._terms = terms
        p.alphabet = alphabet
        p.field = field
        p._hash = None
        return p

    @classmethod
    def zero(cls, alphabet: str = DEFAULT_ALPHABET, field=QQ) -> "NcPoly":
        return cls._raw({}, alphabet, field)

    @classmethod
    def one(cls, alphabet: str = DEFAULT_ALPHABET, field=QQ) -> "NcPoly":
        return cls._raw({"": field.one}, alphabet, field)

    @classmethod
    def word(cls, w: str, coeff=1, alphabet: str = DEFAULT_ALPHABET, field=QQ) -> "NcPoly":
        return cls({w: coeff}, alphabet, field)

    @classmethod
    def parse(cls, text: str, alphabet: str = DEFAULT_ALPHABET, field=QQ) -> "NcPoly":
        from .parse import parse_expression

        return parse_expression(text, alphabet=alphabet, field=field)

    # -- container protocol -------------------------------------------------
    @property
    def terms(self):
        return MappingProxyType(self._terms)

    def items(self):
        return self._terms.items()

    def words(self):
        return self._terms.keys()

    def coeff(self, w: str):
        return self._terms.get(w, self.field.zero)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __iter__(self):
        return iter(self._terms.items())

    # -- structure ------------------------------------------------------------
    def _check(self, other: "NcPoly"):
        if other.alphabet != self.alphabet:
            raise AlphabetError(f"alphabet mismatch: {self.alphabet!r} vs {other.alphabet!r}")
        if other.field != self.field:
            raise AlphabetError(f"field mismatch: {self.field!r} vs {other.field!r}")

    def _lift(self, other) -> "NcPoly":
        if isinstance(other, NcPoly):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction, ModInt)):
            return NcPoly({"": other}, self.alphabet, self.field)
        return NotImplemented

    @property
    def degree(self) -> int:
        """Length of the longest word; -1 for the zero polynomial."""
        return max((len(w) for w in self._terms), default=-1)

    @property
    def valuation(self) -> int:
        """Smallest degree with a nonzero component; -1 for zero."""
        return min((len(w) for w in self._terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({len(w) for w in self._terms}) <= 1

    def homogeneous_component(self, d: int) -> "NcPoly":
        return NcPoly._raw({w: c for w, c in self._terms.items() if len(w) == d}, self.alphabet, self.field)

    def truncate(self, n: int) -> "NcPoly":
        """Drop every word of length >= n."""
        return NcPoly._raw({w: c for w, c in self._terms.items() if len(w) < n}, self.alphabet, self.field)

    def map_words(self, fn) -> "NcPoly":
        """Apply ``fn`` to every word, collecting coefficients."""
        out: dict = {}
        for w, c in self._terms.items():
            nw = fn(w)
            if nw is None:
                continue
            v = out.get(nw)
            v = c if v is None else v + c
            if v:
                out[nw] = v
            else:
                out.pop(nw, None)
        return NcPoly._raw(out, self.alphabet, self.field)

    def leading_term(self, order: MonomialOrder | None = None):
        if not self._terms:
            raise EmptyPolynomialError("leading term of the zero polynomial")
        order = order or default_order(self.alphabet)
        w = max(self._terms, key=order.key)
        return w, self._terms[w]

    def monic(self, order: MonomialOrder | None = None) -> "NcPoly":
        _, c = self.leading_term(order)
        return self * (self.field.one / c)

    # -- arithmetic -----------------------------------------------------------
    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for w, c in other._terms.items():
            v = out.get(w)
            if v is None:
                out[w] = c
            else:
                v = v + c
                if v:
                    out[w] = v
                else:
                    del out[w]
        return NcPoly._raw(out, self.alphabet, self.field)

    __radd__ = __add__

    def __neg__(self):
        return NcPoly._raw({w: -c for w, c in self._terms.items()}, self.alphabet, self.field)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "NcPoly":
        c = self.field(c)
        if not c:
            return NcPoly.zero(self.alphabet, self.field)
        return NcPoly._raw({w: v * c for w, v in self._terms.items()}, self.alphabet, self.field)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, ModInt)):
            return self.scale(other)
        if not isinstance(other, NcPoly):
            return NotImplemented
        return nc_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, ModInt)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power")
        result = NcPoly.one(self.alphabet, self.field)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def lmul_word(self, u: str) -> "NcPoly":
        return NcPoly._raw({u + w: c for w, c in self._terms.items()}, self.alphabet, self.field)

    def rmul_word(self, v: str) -> "NcPoly":
        return NcPoly._raw({w + v: c for w, c in self._terms.items()}, self.alphabet, self.field)

    # -- comparison / printing ---------------------------------------------
    def __eq__(self, other):
        if isinstance(other, (int, Fraction, ModInt)):
            other = self._lift(other)
        if not isinstance(other, NcPoly):
            return NotImplemented
        return (
            self.alphabet == other.alphabet
            and self.field == other.field
            and self._terms == other._terms
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.alphabet, frozenset(self._terms.items())))
        return self._hash

    def to_text(self, order: MonomialOrder | None = None) -> str:
        """Canonical text: terms descending in ``order``, reduced fractions."""
        if not self._terms:
            return "0"
        order = order or default_order(self.alphabet)
        out = []
        for w in sorted(self._terms, key=order.key, reverse=True):
            c = self._terms[w]
            neg = _is_negative(c)
            mag = -c if neg else c
            if not w:
                body = _scalar_text(mag)
            elif mag == 1:
                body = word_to_text(w)
            else:
                body = f"{_scalar_text(mag)}*{word_to_text(w)}"
            if not out:
                out.append(f"-{body}" if neg else body)
            else:
                out.append(f"- {body}" if neg else f"+ {body}")
        return " ".join(out)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"NcPoly({self.to_text()!r})"


def _is_negative(c) -> bool:
    return isinstance(c, Fraction) and c < 0


def _scalar_text(c) -> str:
    if isinstance(c, Fraction):
        return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
    return str(c)


def nc_mul(f: NcPoly, g: NcPoly) -> NcPoly:
    """Product in the free algebra: bilinear extension of concatenation."""
    f._check(g)
    out: dict = {}
    for u, a in f._terms.items():
        for v, b in g._terms.items():
            w = u + v
            c = out.get(w)
            c = a * b if c is None else c + a * b
            if c:
                out[w] = c
            else:
                del out[w]
    return NcPoly._raw(out, f.alphabet, f.field)


def leading_term(f: NcPoly, order: MonomialOrder | None = None):
    return f.leading_term(order)


def letter(c: str, alphabet: str = DEFAULT_ALPHABET, field=QQ) -> NcPoly:
    return NcPoly.word(c, 1, alphabet, field)


def commutator(f: NcPoly, g: NcPoly) -> NcPoly:
    return f * g - g * f
