"""Cyclic potentials and their noncommutative calculus."""

from __future__ import annotations

from dataclasses import dataclass

from .cpoly import CPoly
from .errors import AlphabetError, DomainError
from .ncpoly import NcPoly
from .words import rotate_word, rotations


def cyclic_symmetrize(f: NcPoly | str, alphabet: str = "xy", field=None) -> NcPoly:
    """Sum of all rotations of each word, counted with multiplicity.

    ``xxx`` gives ``3*x^3``. Accepts a single word or extends linearly to a
    polynomial.
    """
    if isinstance(f, str):
        from .field import QQ

        f = NcPoly.word(f, 1, alphabet, field or QQ)
    out: dict = {}
    for w, c in f.items():
        for r in rotations(w):
            v = out.get(r)
            v = c if v is None else v + c
            if v:
                out[r] = v
            else:
                del out[r]
    return NcPoly._raw(out, f.alphabet, f.field)


def rotate(f: NcPoly) -> NcPoly:
    """Termwise rotation operator."""
    return f.map_words(rotate_word)


def is_cyclic_invariant(f: NcPoly) -> bool:
    return rotate(f) == f


def partial_derivative(f: NcPoly, letter: str) -> NcPoly:
    """Left cyclic derivative: ``letter*u -> u``, every other word -> 0."""
    if letter not in f.alphabet or len(letter) != 1:
        raise AlphabetError(f"{letter!r} is not a letter of {f.alphabet!r}")
    return NcPoly._raw(
        {w[1:]: c for w, c in f.items() if w[:1] == letter}, f.alphabet, f.field
    )


def _letter(c: str, f: NcPoly) -> NcPoly:
    return NcPoly._raw({c: f.field.one}, f.alphabet, f.field)


def euler_defects(F: NcPoly) -> tuple[NcPoly, NcPoly]:
    """``(F - sum_a a*d_a F, F - sum_a d_a F * a)``.

    The first is zero for every F without constant term; the second vanishes
    exactly when F is cyclically invariant.
    """
    if F.coeff(""):
        raise DomainError("euler_defects needs a zero constant term")
    left = F
    right = F
    for a in F.alphabet:
        d = partial_derivative(F, a)
        left = left - d.lmul_word(a)
        right = right - d.rmul_word(a)
    return left, right


def syzygy_defect(F: NcPoly) -> NcPoly:
    """``sum_a [a, d_a F]``; zero iff F is cyclically invariant."""
    out = NcPoly.zero(F.alphabet, F.field)
    for a in F.alphabet:
        d = partial_derivative(F, a)
        out = out + d.lmul_word(a) - d.rmul_word(a)
    return out


class Potential:
    """A cyclically invariant polynomial on {x, y} with valuation >= 3.

    Construction validates both conditions; ``Potential.unchecked`` skips
    validation for experiments on arbitrary polynomials.
    """

    __slots__ = ("body", "checked")

    def __init__(self, body: NcPoly | str, field=None):
        if isinstance(body, str):
            from .field import QQ

            body = NcPoly.parse(body, field=field or QQ)
        if body.alphabet != "xy":
            raise AlphabetError("potentials live on the alphabet {x, y}")
        if not is_cyclic_invariant(body):
            raise DomainError(f"not cyclically invariant: {body}")
        if body and body.valuation < 3:
            raise DomainError(f"valuation {body.valuation} < 3")
        self.body = body
        self.checked = True

    @classmethod
    def unchecked(cls, body: NcPoly | str, field=None) -> "Potential":
        if isinstance(body, str):
            from .field import QQ

            body = NcPoly.parse(body, field=field or QQ)
        p = object.__new__(cls)
        p.body = body
        p.checked = False
        return p

    @property
    def field(self):
        return self.body.field

    @property
    def valuation(self) -> int:
        return self.body.valuation

    @property
    def degree(self) -> int:
        return self.body.degree

    def is_homogeneous(self) -> bool:
        return self.body.is_homogeneous()

    def derivative(self, letter: str) -> NcPoly:
        return partial_derivative(self.body, letter)

    def relations(self) -> list[NcPoly]:
        """``[d_x F, d_y F]``, the defining relations of the potential algebra."""
        return [self.derivative(a) for a in self.body.alphabet]

    def __eq__(self, other):
        return isinstance(other, Potential) and other.body == self.body

    def __hash__(self):
        return hash(self.body)

    def __str__(self):
        return str(self.body)

    def __repr__(self):
        return f"Potential({str(self.body)!r})"


def _body(F) -> NcPoly:
    return F.body if isinstance(F, Potential) else F


@dataclass(frozen=True)
class Hessian:
    """Second cyclic derivatives; ``entries[i][j] = d_i(d_j F)``."""

    entries: tuple[tuple[NcPoly, NcPoly], tuple[NcPoly, NcPoly]]

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def entry(self, outer: str, inner: str) -> NcPoly:
        """``d_outer(d_inner F)``."""
        return self.entries["xy".index(outer)]["xy".index(inner)]


def hessian(F) -> Hessian:
    body = _body(F)
    if body.alphabet != "xy":
        raise AlphabetError("the Hessian is defined on two letters")
    first = {a: partial_derivative(body, a) for a in "xy"}
    rows = tuple(
        tuple(partial_derivative(first[b], a) for b in "xy") for a in "xy"
    )
    return Hessian(rows)


def substitute(f: NcPoly, images: dict[str, NcPoly]) -> NcPoly:
    """Ring map on the free algebra given by letter images."""
    out = NcPoly.zero(f.alphabet, f.field)
    cache: dict[str, NcPoly] = {"": NcPoly.one(f.alphabet, f.field)}

    def image(w: str) -> NcPoly:
        r = cache.get(w)
        if r is None:
            r = image(w[:-1]) * images[w[-1]]
            cache[w] = r
        return r

    for w, c in f.items():
        out = out + image(w).scale(c)
    return out


def linear_substitute(F, M) -> Potential:
    """Apply ``x -> M[0][0] x + M[0][1] y``, ``y -> M[1][0] x + M[1][1] y``."""
    body = _body(F)
    fld = body.field
    m = [[fld(v) for v in row] for row in M]
    if not (m[0][0] * m[1][1] - m[0][1] * m[1][0]):
        raise DomainError("substitution matrix is singular")
    x = NcPoly._raw({"x": fld.one}, "xy", fld)
    y = NcPoly._raw({"y": fld.one}, "xy", fld)
    images = {"x": x.scale(m[0][0]) + y.scale(m[0][1]), "y": x.scale(m[1][0]) + y.scale(m[1][1])}
    out = substitute(body, images)
    if isinstance(F, Potential) and not F.checked:
        return Potential.unchecked(out)
    return Potential(out)


def abelianize(f) -> CPoly:
    """Image in K[x, y]: words collapse to their letter counts."""
    body = _body(f)
    if body.alphabet != "xy":
        raise AlphabetError("abelianize expects the alphabet {x, y}")
    out: dict = {}
    for w, c in body.items():
        e = (w.count("x"), w.count("y"))
        out[e] = out.get(e, 0) + c
    return CPoly(out, body.field)
