"""Exact scalar fields: the rationals and prime fields Z/p."""

from __future__ import annotations

import os
from fractions import Fraction

from gmpy2 import is_prime

from .errors import ConfigError, DomainError

DEFAULT_PRIME = 2147483629


class ModInt:
    """An element of Z/p, stored as a canonical representative in [0, p)."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, ModInt):
            if other.p != self.p:
                raise DomainError(f"mixing Z/{self.p} and Z/{other.p}")
            return other.v
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            return other.numerator * pow(other.denominator, -1, self.p)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModInt(self.v + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModInt(self.v - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModInt(o - self.v, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ModInt(self.v * o, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if o % self.p == 0:
            raise ZeroDivisionError("division by zero in Z/p")
        return ModInt(self.v * pow(o, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if self.v == 0:
            raise ZeroDivisionError("division by zero in Z/p")
        return ModInt(o * pow(self.v, -1, self.p), self.p)

    def __neg__(self):
        return ModInt(-self.v, self.p)

    def __pow__(self, e: int):
        return ModInt(pow(self.v, e, self.p), self.p)

    def __bool__(self):
        return self.v != 0

    def __eq__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return False
        return (self.v - o) % self.p == 0

    def __hash__(self):
        return hash((self.v, self.p))

    def __int__(self):
        return self.v

    def __repr__(self):
        return f"ModInt({self.v}, {self.p})"

    def __str__(self):
        return str(self.v)


class RationalField:
    """The field Q; elements are ``fractions.Fraction``."""

    name = "QQ"
    characteristic = 0

    def __call__(self, value) -> Fraction:
        if isinstance(value, ModInt):
            raise DomainError("cannot lift a Z/p element to Q")
        if isinstance(value, str):
            return Fraction(value)
        return Fraction(value)

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


class PrimeField:
    """The prime field Z/p."""

    def __init__(self, p: int = DEFAULT_PRIME):
        if p < 2 or not is_prime(p):
            raise ConfigError(f"modulus {p} is not prime")
        self.p = p
        self.characteristic = p
        self.name = f"GF({p})"

    def __call__(self, value) -> ModInt:
        if isinstance(value, ModInt):
            if value.p != self.p:
                raise DomainError(f"element of Z/{value.p} given to Z/{self.p}")
            return value
        if isinstance(value, str):
            value = Fraction(value)
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise DomainError(f"{value} has no image in Z/{self.p}")
            return ModInt(value.numerator * pow(value.denominator, -1, self.p), self.p)
        return ModInt(int(value), self.p)

    @property
    def zero(self) -> ModInt:
        return ModInt(0, self.p)

    @property
    def one(self) -> ModInt:
        return ModInt(1, self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return self.name


QQ = RationalField()


def GF(p: int = DEFAULT_PRIME) -> PrimeField:
    return PrimeField(p)


def parse_field(spec: str | None):
    """Field from a text spec: ``QQ``, ``GF(p)``, ``p`` or ``GF`` (default prime)."""
    if spec is None or spec.strip() == "" or spec.strip().upper() in ("QQ", "Q", "RATIONAL"):
        return QQ
    s = spec.strip().upper()
    if s in ("GF", "ZP", "PRIME"):
        return PrimeField()
    if s.startswith("GF(") and s.endswith(")"):
        s = s[3:-1]
    try:
        return PrimeField(int(s))
    except ValueError:
        raise ConfigError(f"unrecognised field {spec!r}") from None


def field_from_env():
    return parse_field(os.environ.get("POTALG_FIELD"))
