"""Graded slices of the potential complex 0 -> A -> A^2 -> A^2 -> A -> K -> 0.

For a homogeneous potential F of degree n + 1 the maps are

    d3(u)    = (x u, y u)                        degree 1
    d2(u, v) = (Hxx u + Hxy v, Hyx u + Hyy v)    degree n - 1, H = Hessian
    d1(u, v) = x u + y v                         degree 1

and the slice starting at degree k is A_k -> A^2_{k+1} -> A^2_{k+n} -> A_{k+n+1}.
Everything is written in normal-word coordinates of a Groebner basis.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import AlphabetError, DomainError, StalenessError
from .groebner import TruncatedGB, complete
from .linalg import EchelonBasis, rank_fraction_free
from .ncpoly import NcPoly
from .potential import Potential, hessian


@dataclass(frozen=True)
class GradedMap:
    """Matrix of a map between graded slices, stored as sparse columns.

    Column j holds the codomain coordinates of the image of the j-th domain
    basis element. Basis entries are ``(copy, word)`` pairs; ``copy`` is 0
    for a single summand and 0 or 1 for the two summands of A^2.
    """

    domain_degree: int
    codomain_degree: int
    domain_basis: tuple
    codomain_basis: tuple
    columns: tuple[dict, ...]
    zero: object = 0

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.codomain_basis), len(self.domain_basis)

    @property
    def entries(self) -> tuple[tuple, ...]:
        """Dense matrix, rows indexing the codomain basis."""
        rows = [[self.zero] * len(self.domain_basis) for _ in self.codomain_basis]
        for j, col in enumerate(self.columns):
            for i, v in col.items():
                rows[i][j] = v
        return tuple(tuple(r) for r in rows)

    def rank(self, method: str = "echelon") -> int:
        if not self.domain_basis or not self.codomain_basis:
            return 0
        if method == "bareiss":
            return rank_fraction_free([list(r) for r in self.entries])
        if method != "echelon":
            raise ValueError(f"unknown rank method {method!r}")
        eb = EchelonBasis()
        for col in self.columns:
            if col:
                eb.add(col)
        return eb.rank

    def is_zero(self) -> bool:
        return not any(self.columns)

    def __matmul__(self, other: "GradedMap") -> "GradedMap":
        """Composite ``self o other``."""
        if other.codomain_basis != self.domain_basis:
            raise ValueError("bases do not match")
        cols = []
        for col in other.columns:
            out: dict = {}
            for i, a in col.items():
                for r, b in self.columns[i].items():
                    v = out.get(r, 0) + a * b
                    if v:
                        out[r] = v
                    else:
                        out.pop(r, None)
            cols.append(out)
        return GradedMap(
            other.domain_degree, self.codomain_degree, other.domain_basis,
            self.codomain_basis, tuple(cols), self.zero,
        )


@dataclass(frozen=True)
class SliceReport:
    """Ranks and exactness of one slice.

    ``exact`` lists, in order, exactness at A_k (d3 injective), A^2_{k+1},
    A^2_{k+n} and A_{k+n+1} (d1 onto).
    """

    k: int
    dims: tuple[int, int, int, int]
    ranks: tuple[int, int, int]
    exact: tuple[bool, bool, bool, bool]
    euler_defect: int

    @property
    def all_exact(self) -> bool:
        return all(self.exact)

    def to_dict(self) -> dict:
        return {
            "k": self.k,
            "dims": list(self.dims),
            "ranks": list(self.ranks),
            "exact": list(self.exact),
            "euler_defect": self.euler_defect,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _check_potential(F) -> tuple[NcPoly, int]:
    body = F.body if isinstance(F, Potential) else F
    if body.alphabet != "xy":
        raise AlphabetError("the potential complex is defined on two letters")
    if not body or not body.is_homogeneous():
        raise DomainError("the potential complex needs a nonzero homogeneous potential")
    if body.degree < 2:
        raise DomainError("potential degree must be at least 2")
    return body, body.degree - 1


def presentation(F, bound: int) -> TruncatedGB:
    """Groebner basis of the potential algebra good through degree ``bound``."""
    body = F.body if isinstance(F, Potential) else F
    rels = [r for r in Potential.unchecked(body).relations() if r]
    if not rels:
        raise DomainError("potential has no nonzero derivative")
    return complete(rels, bound=max(bound, max(r.degree for r in rels)))


def _coords(G: TruncatedGB, f: NcPoly, index: dict, copy: int, out: dict):
    for w, c in G.normal_form(f).items():
        out[index[(copy, w)]] = out.get(index[(copy, w)], 0) + c


def build_slice(F, G: TruncatedGB, k: int) -> tuple[GradedMap, GradedMap, GradedMap]:
    """Matrices of d3, d2 and d1 on the slice starting at degree ``k``."""
    body, n = _check_potential(F)
    if k < 0:
        raise DomainError("slice degree must be non-negative")
    top = k + n + 1
    if not G.covers(top):
        raise StalenessError(f"basis certified to degree {G.bound}, slice needs {top}")
    fld = body.field
    zero = fld.zero
    H = hessian(body)

    def basis(deg: int, copies: int) -> tuple:
        words = G.normal_words(deg)
        return tuple((c, w) for c in range(copies) for w in words)

    b0, b1, b2, b3 = basis(k, 1), basis(k + 1, 2), basis(k + n, 2), basis(top, 1)
    i1 = {e: i for i, e in enumerate(b1)}
    i2 = {e: i for i, e in enumerate(b2)}
    i3 = {e: i for i, e in enumerate(b3)}

    def word(w):
        return NcPoly._raw({w: fld.one}, "xy", fld)

    d3 = []
    for _, w in b0:
        col: dict = {}
        _coords(G, word("x" + w), i1, 0, col)
        _coords(G, word("y" + w), i1, 1, col)
        d3.append({i: v for i, v in col.items() if v})
    d2 = []
    for c, w in b1:
        col = {}
        u = word(w)
        # column c of the Hessian acts on the summand the basis word sits in
        _coords(G, H[0, c] * u, i2, 0, col)
        _coords(G, H[1, c] * u, i2, 1, col)
        d2.append({i: v for i, v in col.items() if v})
    d1 = []
    for c, w in b2:
        col = {}
        _coords(G, word("xy"[c] + w), i3, 0, col)
        d1.append({i: v for i, v in col.items() if v})

    return (
        GradedMap(k, k + 1, b0, b1, tuple(d3), zero),
        GradedMap(k + 1, k + n, b1, b2, tuple(d2), zero),
        GradedMap(k + n, top, b2, b3, tuple(d1), zero),
    )


def verify_chain(F, G: TruncatedGB, max_degree: int) -> bool:
    """True iff d2 o d3 and d1 o d2 vanish on every slice whose top degree is <= max_degree."""
    _, n = _check_potential(F)
    for k in range(0, max_degree - n):
        d3, d2, d1 = build_slice(F, G, k)
        if not (d2 @ d3).is_zero() or not (d1 @ d2).is_zero():
            return False
    return True


def slice_exactness(F, G: TruncatedGB, k: int, rank_method: str = "echelon") -> SliceReport:
    d3, d2, d1 = build_slice(F, G, k)
    b = (len(d3.domain_basis), len(d3.codomain_basis), len(d2.codomain_basis), len(d1.codomain_basis))
    r3, r2, r1 = d3.rank(rank_method), d2.rank(rank_method), d1.rank(rank_method)
    exact = (
        r3 == b[0],
        b[1] - r2 == r3,
        b[2] - r1 == r2,
        r1 == b[3],
    )
    defect = b[0] - b[1] + b[2] - b[3]
    return SliceReport(k, b, (r3, r2, r1), exact, defect)
