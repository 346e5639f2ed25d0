"""Commutative shadows of potential algebras.

Lex Groebner bases in K[x, y], quotient dimensions from the staircase, and
the gap dim A - dim A^ab for the family

    F = cyc(x^2*y) + cyc(x*y^2) + a(y),   a(y) = sum_{j=3..n} a_j y^j.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction

from .cpoly import CPoly
from .errors import DomainError
from .field import QQ
from .groebner import Certificate, complete
from .ncpoly import NcPoly
from .potential import Potential, abelianize


def _divides(a, b) -> bool:
    return a[0] <= b[0] and a[1] <= b[1]


def _monic(p: CPoly) -> CPoly:
    _, c = p.leading()
    return p * (1 / c)


def reduce_comm(f: CPoly, basis) -> CPoly:
    """Full remainder of ``f`` on division by ``basis`` (lex, x > y)."""
    leads = [(g.leading(), g) for g in basis]
    rem = CPoly(field=f.field)
    while f:
        e, c = f.leading()
        for (le, lc), g in leads:
            if _divides(le, e):
                f = f - g.shift(e[0] - le[0], e[1] - le[1]) * (c / lc)
                break
        else:
            term = CPoly._raw({e: c}, f.field)
            rem = rem + term
            f = f - term
    return rem


def _spoly(f: CPoly, g: CPoly) -> CPoly:
    (a, ca), (b, cb) = f.leading(), g.leading()
    lcm = (max(a[0], b[0]), max(a[1], b[1]))
    return f.shift(lcm[0] - a[0], lcm[1] - a[1]) * (1 / ca) - g.shift(lcm[0] - b[0], lcm[1] - b[1]) * (1 / cb)


def buchberger_lex2(relations) -> list[CPoly]:
    """Reduced Groebner basis of the ideal of K[x, y] spanned by ``relations``."""
    G = [_monic(r) for r in relations if r]
    pairs = [(i, j) for j in range(len(G)) for i in range(j)]
    while pairs:
        i, j = pairs.pop(0)
        a, b = G[i].leading()[0], G[j].leading()[0]
        if min(a[0], b[0]) == 0 and min(a[1], b[1]) == 0:
            continue  # coprime leading monomials
        h = reduce_comm(_spoly(G[i], G[j]), G)
        if h:
            G.append(_monic(h))
            pairs += [(k, len(G) - 1) for k in range(len(G) - 1)]
    # a divisor of a leading monomial sorts before it
    minimal = []
    for g in sorted(G, key=lambda g: g.leading()[0]):
        if not any(_divides(h.leading()[0], g.leading()[0]) for h in minimal):
            minimal.append(g)
    out = []
    for g in minimal:
        rest = [h for h in minimal if h is not g]
        e, c = g.leading()
        tail = reduce_comm(g - CPoly._raw({e: c}, g.field), rest)
        out.append(CPoly._raw({e: c}, g.field) + tail)
    return sorted(out, key=lambda g: g.leading()[0], reverse=True)


def quotient_dim_comm(basis) -> int | float:
    """Number of standard monomials, or ``math.inf`` if the staircase is open."""
    leads = [g.leading()[0] for g in basis if g]
    if any(e == (0, 0) for e in leads):
        return 0
    xs = [e[0] for e in leads if e[1] == 0]
    ys = [e[1] for e in leads if e[0] == 0]
    if not xs or not ys:
        return math.inf
    return sum(
        1
        for i in range(min(xs))
        for j in range(min(ys))
        if not any(_divides(e, (i, j)) for e in leads)
    )


def squares_decomposition(g: int) -> list[tuple[int, int]] | None:
    """Write ``g`` as a sum of squares k^2 with k >= 2, largest squares tried first.

    Returns ``[(k, multiplicity), ...]`` sorted by k, ``[]`` for zero, or None.
    """
    if g < 0:
        raise DomainError("negative gap")

    def search(rest: int, kmax: int):
        if rest == 0:
            return []
        for k in range(kmax, 1, -1):
            sq = k * k
            for m in range(rest // sq, 0, -1):
                sub = search(rest - m * sq, k - 1)
                if sub is not None:
                    return [(k, m)] + sub
        return None

    found = search(g, math.isqrt(g))
    return None if found is None else sorted(found)


@dataclass(frozen=True)
class GapReport:
    dim_a: int | float
    dim_b: int | float
    gap: int | None
    multiple_of_four: bool
    squares: list[tuple[int, int]] | None

    def to_dict(self) -> dict:
        def fmt(v):
            return "infinite" if v == math.inf else v

        return {
            "dim_a": fmt(self.dim_a),
            "dim_b": fmt(self.dim_b),
            "gap": self.gap,
            "multiple_of_four": self.multiple_of_four,
            "squares": None if self.squares is None else [list(p) for p in self.squares],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _coefficients(coeffs) -> dict[int, Fraction]:
    if isinstance(coeffs, dict):
        items = coeffs.items()
    else:
        items = enumerate(coeffs, start=3)
    out = {}
    for j, c in items:
        if j < 3:
            raise DomainError(f"a(y) may only have terms of degree >= 3, got y^{j}")
        c = QQ(c) if not isinstance(c, Fraction) else c
        if c:
            out[int(j)] = c
    if not out:
        raise DomainError("a(y) is zero")
    n = max(out)
    if n <= 3:
        raise DomainError(f"deg a must exceed 3, got {n}")
    return out


def family_potential(coeffs, field=QQ) -> Potential:
    """``cyc(x^2*y) + cyc(x*y^2) + sum a_j y^j``; coefficients for j = 3, 4, ... or a dict."""
    a = _coefficients(coeffs)
    terms: dict = {}
    for w in ("xxy", "xyx", "yxx", "xyy", "yxy", "yyx"):
        terms[w] = 1
    for j, c in a.items():
        terms["y" * j] = c
    return Potential(NcPoly(terms, "xy", field))


def algebra_dimension(relations, max_bound: int = 64) -> int | float:
    """Dimension of K<x,y>/(relations) from a saturated Groebner basis.

    The degree bound is doubled until no ambiguity is left open.
    """
    rels = [r for r in relations if r]
    bound = 2 * max(r.degree for r in rels)
    while True:
        G = complete(rels, bound=bound)
        if G.certificate is Certificate.SATURATED:
            return G.dimension().total
        if bound >= max_bound:
            raise DomainError(f"completion did not saturate below degree {max_bound}")
        bound *= 2


def abelian_dimension(relations) -> int | float:
    comm = [abelianize(r) for r in relations if r]
    return quotient_dim_comm(buchberger_lex2(comm))


def wemyss_gap(coeffs) -> GapReport:
    """dim A, dim A^ab and their difference for the family with the given a(y)."""
    F = family_potential(coeffs)
    rels = F.relations()
    dim_a = algebra_dimension(rels)
    dim_b = abelian_dimension(rels)
    if dim_a == math.inf or dim_b == math.inf:
        return GapReport(dim_a, dim_b, None, False, None)
    gap = dim_a - dim_b
    squares = squares_decomposition(gap) if gap >= 0 else None
    return GapReport(dim_a, dim_b, gap, gap % 4 == 0, squares)


def odd_part_degree(coeffs) -> int | None:
    """Degree of the odd part of b(y) = sum a_j y^(j-1), None when it vanishes."""
    a = _coefficients(coeffs)
    odd = [j - 1 for j in a if (j - 1) % 2 == 1]
    return max(odd) if odd else None
