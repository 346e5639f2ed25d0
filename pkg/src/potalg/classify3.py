"""Normal forms of homogeneous cubic potentials on two letters.

A cubic cyclic potential is determined, up to an invertible linear change
of variables, by how the roots of its abelianization (a binary cubic form)
collide. The pattern is read off exactly from a gcd with the derivative,
so no roots are ever extracted and the base field need not be closed.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import DomainError
from .groebner import complete
from .ncpoly import NcPoly
from .potential import Potential, abelianize
from .series import PowerSeries, hilbert_from_forbidden


class CubicTag(str, Enum):
    TRIPLE_ROOT = "TripleRoot"
    DOUBLE_ROOT = "DoubleRoot"
    THREE_DISTINCT = "ThreeDistinct"


CANONICAL = {
    CubicTag.TRIPLE_ROOT: "x^3",
    CubicTag.DOUBLE_ROOT: "cyc(x^2*y)",
    CubicTag.THREE_DISTINCT: "cyc(x^2*y) + cyc(x*y^2)",
}


@dataclass(frozen=True)
class CubicClass:
    tag: CubicTag
    canonical_potential: Potential
    canonical_relations: tuple[NcPoly, ...]
    series_head: PowerSeries
    pattern: tuple[int, ...] = ()


def _rem(a: list, b: list) -> list:
    a = a[:]
    inv = 1 / b[-1]
    while len(a) >= len(b) and a:
        q = a[-1] * inv
        shift = len(a) - len(b)
        for i, c in enumerate(b):
            a[shift + i] = a[shift + i] - q * c
        while a and not a[-1]:
            a.pop()
    return a


def _gcd_degree(p: list) -> int:
    """Degree of gcd(p, p'); p has nonzero leading coefficient."""
    dp = [i * c for i, c in enumerate(p)][1:]
    while dp and not dp[-1]:
        dp.pop()
    a, b = p, dp
    while b:
        a, b = b, _rem(a, b)
    return len(a) - 1


def multiplicity_pattern(cubic) -> tuple[int, ...]:
    """Root multiplicities of a nonzero binary cubic form, largest first.

    The form f(x, y) is dehomogenized to g(t) = f(t, 1); a drop in degree
    means y divides f, which is a root at infinity of multiplicity 3 - deg g.
    """
    fld = cubic.field
    g = [fld(cubic.coeff((i, 3 - i))) for i in range(4)]
    while g and not g[-1]:
        g.pop()
    if not g:
        raise DomainError("zero cubic form")
    deg = len(g) - 1
    at_infinity = 3 - deg
    finite: tuple[int, ...]
    if deg == 0:
        finite = ()
    elif deg == 1:
        finite = (1,)
    else:
        shared = _gcd_degree(g)
        if deg == 2:
            finite = (2,) if shared == 1 else (1, 1)
        else:
            finite = {0: (1, 1, 1), 1: (2, 1), 2: (3,)}[shared]
    pattern = finite + ((at_infinity,) if at_infinity else ())
    return tuple(sorted(pattern, reverse=True))


_TAGS = {(3,): CubicTag.TRIPLE_ROOT, (2, 1): CubicTag.DOUBLE_ROOT, (1, 1, 1): CubicTag.THREE_DISTINCT}


def classify_cubic(F) -> CubicClass:
    body = F.body if isinstance(F, Potential) else F
    if body.alphabet != "xy":
        raise DomainError("cubic classification works on two letters")
    if not body:
        raise DomainError("zero potential")
    if not body.is_homogeneous() or body.degree != 3:
        raise DomainError("expected a homogeneous cubic potential")
    if body.field.characteristic in (2, 3):
        raise DomainError("cubic classification needs characteristic other than 2 and 3")
    pattern = multiplicity_pattern(abelianize(body))
    tag = _TAGS[pattern]
    rels, _, head = canonical_data(tag)
    return CubicClass(tag, Potential(CANONICAL[tag]), rels, head, pattern)


def canonical_data(tag: CubicTag | str, depth: int = 10):
    """Relations, leading words and series head of the class normal form."""
    tag = CubicTag(tag)
    F = Potential(CANONICAL[tag])
    G = complete([r for r in F.relations() if r])
    head, _ = hilbert_from_forbidden(G.leading_words, depth)
    return G.elements, G.leading_words, head
