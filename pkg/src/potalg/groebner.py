"""Degree-truncated noncommutative Groebner bases and dimension counting."""

from __future__ import annotations

import heapq
import json
import math
import random
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from gmpy2 import mpq

from .automaton import AvoidanceAutomaton
from .errors import DomainError, StalenessError
from .field import QQ, ModInt, PrimeField
from .linalg import EchelonBasis
from .ncpoly import NcPoly, default_order
from .words import MonomialOrder, all_words



class Certificate(str, Enum):
    COMPLETE_UP_TO_BOUND = "CompleteUpToBound"
    COMPLETE_GRADED = "CompleteGraded"
    SATURATED = "Saturated"


class Method(str, Enum):
    NORMAL_WORDS = "NormalWords"
    BRUTE_FORCE_ORACLE = "BruteForceOracle"
    TRUNCATED_QUOTIENT = "TruncatedQuotient"


@dataclass(frozen=True)
class DimReport:
    per_degree: tuple[int, ...]
    total: int | float
    method: Method
    verdict: str | None = None
    sequence: tuple[int, ...] | None = None

    @property
    def finite(self) -> bool:
        return self.total != math.inf

    @property
    def stabilized_value(self) -> int | None:
        if self.verdict and self.verdict.startswith("Stabilized("):
            return int(self.verdict[len("Stabilized("):-1])
        return None

    def to_dict(self) -> dict:
        d = {
            "per_degree": list(self.per_degree),
            "total": "infinite" if self.total == math.inf else self.total,
            "method": self.method.value,
            "verdict": self.verdict,
        }
        if self.sequence is not None:
            d["sequence"] = list(self.sequence)
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _fast_scalar(fld):
    """Converter to the raw scalar used in the reduction loop, or None."""
    if fld is QQ:
        return lambda c: mpq(c.numerator, c.denominator)
    if isinstance(fld, PrimeField):
        return lambda c: c.v
    return None


# -- overlaps and reduction ---------------------------------------------------

def overlaps(a: str, b: str):
    """Lengths ``s`` with a proper suffix of ``a`` equal to a proper prefix of ``b``."""
    for s in range(1, min(len(a), len(b))):
        if a[-s:] == b[:s]:
            yield s


class _Reducer:
    """Rewriting modulo a set of monic polynomials indexed by leading word."""

    def __init__(self, order: MonomialOrder):
        self.order = order
        self.rules: dict[str, NcPoly] = {}
        self._lengths: list[int] = []
        self._fast: dict[str, tuple] = {}
        self._found: dict[str, tuple | None] = {}
        self._expanded: dict[str, tuple | None] = {}

    def set_rules(self, rules: dict[str, NcPoly]):
        self.rules = rules
        self._lengths = sorted({len(w) for w in rules})
        self._found = {}
        self._expanded = {}
        # rule tails as C rationals (QQ) or plain residues (GF(p)), built once per rule
        old = self._fast
        self._fast = {}
        for lead, g in rules.items():
            hit = old.get(lead)
            if hit is not None and hit[0] is g:
                self._fast[lead] = hit
                continue
            conv = _fast_scalar(g.field)
            if conv is not None:
                self._fast[lead] = (g, tuple((w, conv(c)) for w, c in g.items() if w != lead))

    def find(self, w: str):
        """Leftmost occurrence of a shortest leading word in ``w``, memoized per rule set."""
        found = self._found
        if w in found:
            return found[w]
        rules = self.rules
        hit = None
        for L in self._lengths:
            if L > len(w):
                break
            for i in range(len(w) - L + 1):
                if w[i:i + L] in rules:
                    hit = i, w[i:i + L]
                    break
            if hit:
                break
        found[w] = hit
        return hit

    def _expand(self, w: str):
        """One rewrite step of ``w`` as ``(word, -key, coefficient)`` triples, or None."""
        hit = self.find(w)
        if hit is None:
            exp = None
        else:
            key = self.order.key
            i, lead = hit
            pre, suf = w[:i], w[i + len(lead):]
            exp = tuple((nw, -key(nw), gc) for nw, gc in ((pre + gw + suf, gc) for gw, gc in self._fast[lead][1]))
        self._expanded[w] = exp
        return exp

    def find_all(self, w: str):
        out = []
        for L in self._lengths:
            for i in range(len(w) - L + 1):
                if w[i:i + L] in self.rules:
                    out.append((i, w[i:i + L]))
        return out

    def reduce(self, f: NcPoly, skip_lead: str | None = None) -> NcPoly:
        """Full normal form. ``skip_lead`` keeps that word's own rule out of play."""
        if len(self._fast) == len(self.rules) and _fast_scalar(f.field) is not None:
            return self._reduce_fast(f, skip_lead)
        key = self.order.key
        terms = dict(f.items())
        heap = [(-key(w), w) for w in terms]
        heapq.heapify(heap)
        out = {}
        while heap:
            _, w = heapq.heappop(heap)
            c = terms.pop(w, None)
            if c is None:
                continue
            hit = self.find(w) if w != skip_lead else None
            if hit is None:
                out[w] = c
                continue
            i, lead = hit
            pre, suf = w[:i], w[i + len(lead):]
            for gw, gc in self.rules[lead].items():
                if gw == lead:
                    continue
                nw = pre + gw + suf
                v = terms.get(nw)
                if v is None:
                    terms[nw] = -c * gc
                    heapq.heappush(heap, (-key(nw), nw))
                else:
                    v = v - c * gc
                    if v:
                        terms[nw] = v
                    else:
                        del terms[nw]
        return NcPoly._raw(out, f.alphabet, f.field)

    def _reduce_fast(self, f: NcPoly, skip_lead: str | None) -> NcPoly:
        key = self.order.key
        expanded = self._expanded
        expand = self._expand
        push, pop = heapq.heappush, heapq.heappop
        mod = getattr(f.field, "p", None)
        conv = _fast_scalar(f.field)
        terms = {w: conv(c) for w, c in f.items()}
        get = terms.get
        heap = [(-key(w), w) for w in terms]
        heapq.heapify(heap)
        out = {}
        while heap:
            w = pop(heap)[1]
            c = terms.pop(w, None)
            if c is None:
                continue
            if mod:
                # residues are reduced only here; updates below let them grow
                c %= mod
            if not c:
                continue
            if w == skip_lead:
                out[w] = c
                continue
            exp = expanded[w] if w in expanded else expand(w)
            if exp is None:
                out[w] = c
                continue
            for nw, nk, gc in exp:
                v = get(nw)
                if v is None:
                    terms[nw] = -c * gc
                    push(heap, (nk, nw))
                else:
                    terms[nw] = v - c * gc
        if mod:
            out = {w: ModInt(c, mod) for w, c in out.items()}
        else:
            out = {w: Fraction(int(c.numerator), int(c.denominator)) for w, c in out.items()}
        return NcPoly._raw(out, f.alphabet, f.field)

    def reduce_random(self, f: NcPoly, rng: random.Random) -> NcPoly:
        """Normal form applying rules in a random order (confluence checks)."""
        terms = dict(f.items())
        while True:
            reducible = [w for w in terms if self.find(w) is not None]
            if not reducible:
                return NcPoly._raw(terms, f.alphabet, f.field)
            w = rng.choice(sorted(reducible))
            i, lead = rng.choice(self.find_all(w))
            c = terms.pop(w)
            pre, suf = w[:i], w[i + len(lead):]
            for gw, gc in self.rules[lead].items():
                if gw == lead:
                    continue
                nw = pre + gw + suf
                v = terms.get(nw, 0) - c * gc
                if v:
                    terms[nw] = v
                else:
                    terms.pop(nw, None)


# -- truncated Groebner basis -------------------------------------------------

@dataclass(frozen=True)
class TruncatedGB:
    elements: tuple[NcPoly, ...]
    order: MonomialOrder
    bound: int
    certificate: Certificate
    unresolved: tuple[str, ...] = ()
    resolved: tuple[str, ...] = ()
    homogeneous: bool = True
    _reducer: _Reducer = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        if self._reducer is None:
            r = _Reducer(self.order)
            r.set_rules({g.leading_term(self.order)[0]: g for g in self.elements})
            object.__setattr__(self, "_reducer", r)

    @property
    def leading_words(self) -> tuple[str, ...]:
        return tuple(g.leading_term(self.order)[0] for g in self.elements)

    @property
    def alphabet(self) -> str:
        return self.order.precedence

    def covers(self, degree: int) -> bool:
        return self.certificate is Certificate.SATURATED or degree <= self.bound

    def normal_form(self, f: NcPoly, rng: random.Random | None = None) -> NcPoly:
        return normal_form(f, self, rng)

    def automaton(self) -> AvoidanceAutomaton:
        return AvoidanceAutomaton(self.leading_words, self.alphabet)

    def census(self, max_degree: int) -> list[int]:
        if not self.covers(max_degree):
            raise StalenessError(
                f"basis certified to degree {self.bound}, census asked to {max_degree}"
            )
        return normal_word_census(self.leading_words, max_degree, self.alphabet)

    def normal_words(self, degree: int) -> list[str]:
        if not self.covers(degree):
            raise StalenessError(f"basis certified to degree {self.bound}, asked {degree}")
        return self.automaton().words(degree)

    def dimension(self) -> DimReport:
        """Dimension of the quotient from the normal words (Saturated bases only
        give a total; otherwise per-degree counts up to the bound)."""
        aut = self.automaton()
        if self.certificate is Certificate.SATURATED:
            total = aut.total()
            top = self.bound if total == math.inf else max(len(aut.live), 1)
            per = aut.counts(top)
            while len(per) > 1 and per[-1] == 0:
                per.pop()
            return DimReport(tuple(per), total, Method.NORMAL_WORDS)
        per = aut.counts(self.bound)
        return DimReport(tuple(per), math.inf, Method.NORMAL_WORDS, verdict=f"PartialToDegree({self.bound})")

    def dumps(self) -> str:
        lines = [f"{self.order.header()} bound={self.bound} certificate={self.certificate.value}"]
        lines += [g.to_text(self.order) for g in self.elements]
        return "\n".join(lines) + "\n"

    @classmethod
    def loads(cls, text: str, field=None) -> "TruncatedGB":
        from .parse import parse_expression

        lines = [ln for ln in text.splitlines() if ln.strip()]
        header = dict(kv.split("=", 1) for kv in lines[0].split())
        prec = header["letters"].replace(">", "")
        order = MonomialOrder(prec)
        alphabet = "xy" if set(prec) == set("xy") else prec
        elements = tuple(parse_expression(ln, alphabet, field or QQ) for ln in lines[1:])
        return cls(
            elements,
            order,
            int(header["bound"]),
            Certificate(header["certificate"]),
            homogeneous=all(g.is_homogeneous() for g in elements),
        )


def normal_form(f: NcPoly, G: TruncatedGB, rng: random.Random | None = None) -> NcPoly:
    """Reduce ``f`` modulo ``G``; no word of the result contains a leading word."""
    if f and not G.covers(f.degree):
        raise StalenessError(
            f"degree {f.degree} exceeds the certified bound {G.bound} ({G.certificate.value})"
        )
    if rng is not None:
        return G._reducer.reduce_random(f, rng)
    return G._reducer.reduce(f)


class _Completion:
    def __init__(self, order: MonomialOrder, bound: int):
        self.order = order
        self.bound = bound
        self.reducer = _Reducer(order)
        self.basis: dict[str, NcPoly] = {}
        self.serial: dict[str, int] = {}
        self.counter = 0
        self.pending: list = []
        self.resolved: list[str] = []

    def _key(self, w):
        return self.order.key(w)

    def _sync(self):
        self.reducer.set_rules(self.basis)

    def insert(self, h: NcPoly):
        work = [h]
        while work:
            g = self.reducer.reduce(work.pop())
            if not g:
                continue
            g = g.monic(self.order)
            m = g.leading_term(self.order)[0]
            # drop elements whose leading word contains m; they get re-reduced
            for lead in [w for w in self.basis if m in w]:
                work.append(self.basis.pop(lead))
                del self.serial[lead]
            self.basis[m] = g
            self.counter += 1
            self.serial[m] = self.counter
            self._sync()
            # tail-reduce everything against the new rule
            for lead, p in list(self.basis.items()):
                if lead == m and p is g:
                    continue
                if any(m in w for w in p.words() if w != lead):
                    self.basis[lead] = self.reducer.reduce(p, skip_lead=lead)
            self._sync()
            for lead in list(self.basis):
                for a, b in ((m, lead), (lead, m)):
                    for s in overlaps(a, b):
                        self._push(a, b, s)
                    if a == b:
                        break

    def _push(self, a: str, b: str, s: int):
        word = a + b[s:]
        heapq.heappush(
            self.pending,
            (len(word), self._key(word), self._key(a), self._key(b), s, word, a, b,
             self.serial[a], self.serial[b]),
        )

    def _live(self, item) -> bool:
        *_, a, b, sa, sb = item
        return self.serial.get(a) == sa and self.serial.get(b) == sb

    def spoly(self, a: str, b: str, s: int) -> NcPoly:
        ga, gb = self.basis[a], self.basis[b]
        return ga.rmul_word(b[s:]) - gb.lmul_word(a[:len(a) - s])

    def run(self):
        while self.pending:
            item = self.pending[0]
            if not self._live(item):
                heapq.heappop(self.pending)
                continue
            if item[0] > self.bound:
                break
            heapq.heappop(self.pending)
            _, _, _, _, s, word, a, b, _, _ = item
            h = self.reducer.reduce(self.spoly(a, b, s))
            if h:
                self.insert(h)
            else:
                self.resolved.append(word)
        unresolved = sorted({it[5] for it in self.pending if self._live(it)}, key=lambda w: (len(w), self._key(w)))
        return unresolved


def complete(relations, order: MonomialOrder | None = None, bound: int | None = None) -> TruncatedGB:
    """Overlap completion of ``relations`` through ambiguities of degree <= bound.

    Ambiguities are processed by (degree, order of the ambiguity word); the
    basis is kept monic and interreduced after every insertion, so the
    result does not depend on the input order.
    """
    relations = list(relations)
    if not relations:
        raise DomainError("no relations given")
    for r in relations:
        if not r:
            raise DomainError("zero relation")
    alphabet = relations[0].alphabet
    order = order or default_order(alphabet)
    max_deg = max(r.degree for r in relations)
    if bound is None:
        bound = 2 * max_deg
    if bound < max_deg:
        raise DomainError(f"bound {bound} below relation degree {max_deg}")
    homogeneous = all(r.is_homogeneous() for r in relations)

    comp = _Completion(order, bound)
    canon = sorted(
        relations, key=lambda r: (r.degree, order.key(r.leading_term(order)[0]), r.to_text(order))
    )
    for r in canon:
        comp.insert(r)
    unresolved = comp.run()

    if not unresolved:
        cert = Certificate.SATURATED
    elif homogeneous:
        cert = Certificate.COMPLETE_GRADED
    else:
        cert = Certificate.COMPLETE_UP_TO_BOUND
    elems = sorted(comp.basis.values(), key=lambda g: (g.degree, order.key(g.leading_term(order)[0])))
    return TruncatedGB(
        tuple(elems), order, bound, cert, tuple(unresolved), tuple(comp.resolved), homogeneous
    )


def ambiguities(G: TruncatedGB, max_degree: int | None = None):
    """All overlap ambiguities of the basis as ``(word, a, b, s)``."""
    leads = G.leading_words
    out = []
    for a in leads:
        for b in leads:
            for s in overlaps(a, b):
                w = a + b[s:]
                if max_degree is None or len(w) <= max_degree:
                    out.append((w, a, b, s))
    return out


def check_ambiguities(G: TruncatedGB, max_degree: int | None = None) -> list[str]:
    """Ambiguity words whose S-polynomial does not reduce to zero."""
    rules = {g.leading_term(G.order)[0]: g for g in G.elements}
    bad = []
    for w, a, b, s in ambiguities(G, max_degree):
        sp = rules[a].rmul_word(b[s:]) - rules[b].lmul_word(a[:len(a) - s])
        if G._reducer.reduce(sp):
            bad.append(w)
    return bad


# -- dimension counting -------------------------------------------------------

def normal_word_census(leading_words, max_degree: int, alphabet: str = "xy") -> list[int]:
    """Words of each degree avoiding every leading word as a factor."""
    return AvoidanceAutomaton(leading_words, alphabet).counts(max_degree)


def graded_dim_oracle(relations, max_degree: int, alphabet: str | None = None, field=None) -> DimReport:
    """Graded dimensions by plain linear algebra, independent of any rewriting.

    The degree-d part of the ideal is spanned by ``letter * I_{d-1}`` and
    ``g * v`` for the relations g; its rank is found by row reduction.
    """
    relations = [r for r in relations if r]
    if relations:
        alphabet = alphabet or relations[0].alphabet
        field = field or relations[0].field
    alphabet = alphabet or "xy"
    for r in relations:
        if not r.is_homogeneous():
            raise DomainError("graded_dim_oracle needs homogeneous relations")
    key = default_order(alphabet).key
    per = []
    prev_rows: list[dict] = []
    for d in range(max_degree + 1):
        eb = EchelonBasis(key=key)
        for row in prev_rows:
            for a in alphabet:
                eb.add({a + w: c for w, c in row.items()})
        for g in relations:
            k = d - g.degree
            if k < 0:
                continue
            for v in all_words(alphabet, k):
                eb.add({w + v: c for w, c in g.items()})
        per.append(len(alphabet) ** d - eb.rank)
        prev_rows = list(eb.rows.values())
    return DimReport(tuple(per), sum(per), Method.BRUTE_FORCE_ORACLE)


def _relations_of(F) -> list[NcPoly]:
    from .potential import Potential

    if isinstance(F, Potential):
        return F.relations()
    if isinstance(F, NcPoly):
        return Potential.unchecked(F).relations()
    return list(F)


def truncated_leading_words(relations, N: int, order: MonomialOrder | None = None) -> set[str]:
    """Leading words (lowest-degree convention) of the image of the ideal in
    the algebra truncated at degree N.

    The image is the smallest subspace of span{words of length < N} holding
    the truncated relations and closed under multiplication by letters on
    either side; it is built by closure with an echelon basis whose pivot is
    the deglex-smallest word of each row.
    """
    relations = [r for r in relations if r]
    if not relations:
        return set()
    alphabet = relations[0].alphabet
    order = order or default_order(alphabet)
    eb = EchelonBasis(key=order.key, leading="min")
    queue = []
    tick = 0

    def push(vec):
        nonlocal tick
        if vec:
            m = min(vec, key=order.key)
            heapq.heappush(queue, (len(m), order.key(m), tick, vec))
            tick += 1

    for r in relations:
        push({w: c for w, c in r.items() if len(w) < N})
    while queue:
        *_, vec = heapq.heappop(queue)
        row = eb.add(vec)
        if row is None:
            continue
        for a in alphabet:
            push({a + w: c for w, c in row.items() if len(w) + 1 < N})
            push({w + a: c for w, c in row.items() if len(w) + 1 < N})
    return set(eb.pivots)


def _per_degree_normal(lead_words: set[str], N: int, alphabet: str) -> list[int]:
    per = [len(alphabet) ** d for d in range(N)]
    for w in lead_words:
        per[len(w)] -= 1
    return per


def truncated_profile(relations, N: int, start: int = 1) -> tuple[list[int], int | None]:
    """Normal-word counts per degree below N for the degree-N truncation.

    Truncations are computed for growing M and the loop stops at the first M
    whose top degree M-1 has no normal words: then every word of degree
    M-1 lies in the ideal plus higher-degree words, so all later
    truncations have the same normal words. Returns the counts and the
    degree M at which that certificate was found (None if not reached).
    """
    relations = [r for r in relations if r]
    alphabet = relations[0].alphabet if relations else "xy"
    for M in range(max(start, 1), N + 1):
        per = _per_degree_normal(truncated_leading_words(relations, M), M, alphabet)
        if per[M - 1] == 0:
            return per + [0] * (N - M), M
    return per, None


def truncated_quotient_dim(F, N: int) -> DimReport:
    """Dimension of K<x,y> / (I + all words of degree >= N).

    ``per_degree[d]`` counts the degree-d words that are not leading words,
    so the entries sum to the dimension.
    """
    relations = _relations_of(F)
    val = min((r.valuation for r in relations if r), default=0)
    if N < val:
        raise DomainError(f"truncation degree {N} below relation valuation {val}")
    per, _ = truncated_profile(relations, N, start=val + 1)
    return DimReport(tuple(per), sum(per), Method.TRUNCATED_QUOTIENT)


def completion_dim_probe(F, max_n: int, window: int = 4) -> DimReport:
    """Truncated dimensions for N up to ``max_n`` with a stabilization verdict.

    The dimensions are non-decreasing in N. The leading words of degree < N
    are the same for every truncation at or above N, and once a whole
    degree consists of leading words the value can never grow again (the
    cofinite certificate); the verdict needs that certificate and a
    constant tail of length ``window``.
    """
    from .potential import Potential

    relations = _relations_of(F)
    val = min(r.valuation for r in relations if r)
    start = F.valuation if isinstance(F, Potential) else val + 1
    if max_n < start + window:
        raise DomainError(f"max_n={max_n} too small for valuation {start} and window {window}")
    per, cert = truncated_profile(relations, max_n, start=val + 1)
    seq = tuple(sum(per[:N]) for N in range(start, max_n + 1))
    tail = seq[-window:]
    if cert is not None and len(set(tail)) == 1:
        verdict = f"Stabilized({tail[0]})"
    else:
        verdict = "Inconclusive"
    return DimReport(tuple(per), sum(per), Method.TRUNCATED_QUOTIENT, verdict, seq)
