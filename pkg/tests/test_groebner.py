import itertools
import math
import random
from pathlib import Path

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from potalg import GF, NcPoly, Potential, complete, normal_form
from potalg.corpus import DEFAULT_SEED, corpus
from potalg.errors import DomainError, StalenessError
from potalg.groebner import (
    Certificate,
    TruncatedGB,
    check_ambiguities,
    completion_dim_probe,
    graded_dim_oracle,
    normal_word_census,
    truncated_quotient_dim,
)
from potalg.words import all_words

P = NcPoly.parse
FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def rels(text):
    return [r for r in Potential(text).relations() if r]


def sympy_truncated_dim(F: Potential, N: int) -> int:
    """dim K<x,y>/(I + words of length >= N) from the span of all u*g*v, by sympy rank."""
    cols = [w for d in range(N) for w in all_words("xy", d)]
    index = {w: i for i, w in enumerate(cols)}
    rows = []
    for g in F.relations():
        if not g:
            continue
        for du in range(N):
            for dv in range(N - du):
                for u in all_words("xy", du):
                    for v in all_words("xy", dv):
                        row = [0] * len(cols)
                        for w, c in g.items():
                            word = u + w + v
                            if len(word) < N:
                                row[index[word]] += c
                        if any(row):
                            rows.append(row)
    r = sympy.Matrix(rows).rank() if rows else 0
    return len(cols) - r


class TestNormalForm:
    def test_monomial_rule(self):
        G = complete([P("x^2")])
        assert not normal_form(P("x^2*y"), G)

    def test_single_step(self):
        G = complete([P("x*y + y*x + y^2")], bound=2)
        assert normal_form(P("x*y"), G) == P("-y*x - y^2")

    def test_overlap_of_quartic_family_resolves(self):
        G = complete(rels("cyc(x^3*y^2)"), bound=10)
        a, b = G.elements
        assert a.leading_term()[0] == "xxyy" and b.leading_term()[0] == "xxxy"
        s = b.rmul_word("y") - a.lmul_word("x")
        assert not normal_form(s, G)

    def test_result_is_normal(self):
        G = complete(rels("cyc(x^2*y^2)"), bound=8)
        f = P("(x + 2*y)^5 - 3*x*y*x*y")
        h = normal_form(f, G)
        for w in h.words():
            assert not any(lead in w for lead in G.leading_words)

    def test_staleness(self):
        G = complete(rels("cyc(x^2*y) + cyc(x*y^2) + y^4"), bound=4)
        if G.certificate is not Certificate.SATURATED:
            with pytest.raises(StalenessError):
                normal_form(P("y^9"), G)
        H = complete(rels("x^4 + cyc(x^2*y^2)"), bound=5)
        assert H.certificate is Certificate.COMPLETE_GRADED
        with pytest.raises(StalenessError):
            normal_form(P("x^3*y^3"), H)

    def test_confluence_under_random_rule_order(self):
        rng = random.Random(2)
        G = complete(rels("cyc(x^2*y^2) + cyc(x*y*x*y)"), bound=9)
        for _ in range(500):
            f = NcPoly({"".join(rng.choice("xy") for _ in range(rng.randint(3, 8))): rng.randint(-3, 3) for _ in range(3)})
            if f.degree > G.bound:
                continue
            assert normal_form(f, G, rng=rng) == normal_form(f, G)


class TestComplete:
    def test_already_complete_pair(self):
        G = complete([P("x*y + y*x"), P("x^2")])
        assert set(G.elements) == {P("x*y + y*x"), P("x^2")}
        assert G.certificate is Certificate.SATURATED

    def test_single_overlap(self):
        G = complete(rels("cyc(x^3*y^2)"), bound=10)
        assert len(G.elements) == 2 and len(G.resolved) == 1

    def test_quartic_family_leading_words(self):
        G = complete([P("x*y + y*x + y^2"), P("x*y + y*x + x^2 + y^3")], bound=12)
        assert set(G.leading_words) == {"xy", "yyy", "xxx"}
        assert G.certificate is Certificate.SATURATED
        assert G.dimension().total == 9

    def test_errors(self):
        with pytest.raises(DomainError):
            complete([P("x"), NcPoly.zero()])
        with pytest.raises(DomainError):
            complete([])
        with pytest.raises(DomainError):
            complete([P("x^3")], bound=2)

    def test_basis_invariants(self):
        for F in corpus(DEFAULT_SEED, 12, homogeneous=True):
            G = complete([r for r in F.relations() if r], bound=8)
            leads = G.leading_words
            for a, b in itertools.permutations(leads, 2):
                assert a not in b
            for g in G.elements:
                assert g.leading_term()[1] == 1
                for w in g.words():
                    if w != g.leading_term()[0]:
                        assert not any(lead in w for lead in leads)
            assert not check_ambiguities(G, G.bound)

    def test_input_order_does_not_matter(self):
        rng = random.Random(4)
        for F in corpus(DEFAULT_SEED + 1, 8, homogeneous=True):
            rs = [r for r in F.relations() if r]
            G = complete(rs, bound=8)
            shuffled = [r * rng.choice([1, -2, 3]) for r in reversed(rs)] + [rs[0] + rs[-1]]
            H = complete(shuffled, bound=8)
            assert G.dumps() == H.dumps()

    def test_serialization_round_trip(self):
        G = complete(rels("cyc(x^2*y^2)"), bound=8)
        text = G.dumps()
        assert text.splitlines()[0] == "order=deglex letters=x>y bound=8 certificate=Saturated"
        H = TruncatedGB.loads(text)
        assert H.elements == G.elements and H.certificate is G.certificate

    @pytest.mark.parametrize("n", [3, 4, 5, 6])
    def test_fixture_bases(self, n):
        src = (FIXTURES / "potentials" / f"xpy2_n{n}.txt").read_text().strip()
        G = complete(rels(src), bound=2 * (n + 1))
        assert G.dumps() == (FIXTURES / "bases" / f"xpy2_n{n}.txt").read_text()

    def test_prime_field_agrees_with_rationals(self):
        for F in corpus(DEFAULT_SEED, 10, homogeneous=True):
            q = complete([r for r in F.relations() if r], bound=8).census(8)
            body = NcPoly.parse(str(F), field=GF())
            p = complete([r for r in Potential(body).relations() if r], bound=8).census(8)
            assert p == q


class TestCensus:
    def test_fibonacci(self):
        assert normal_word_census({"xx"}, 4) == [1, 2, 3, 5, 8]

    def test_quartic_family(self):
        assert normal_word_census({"xxyy", "xxxy"}, 5) == [1, 2, 4, 8, 14, 25]

    def test_finite_staircase(self):
        counts = normal_word_census({"xy", "xxx", "yyy"}, 12)
        assert sum(counts) == 9 and counts[-1] == 0

    @settings(max_examples=60)
    @given(st.sets(st.text(alphabet="xy", min_size=1, max_size=4), max_size=4))
    def test_matches_exhaustive_enumeration(self, forbidden):
        brute = [
            sum(1 for w in all_words("xy", d) if not any(f in w for f in forbidden))
            for d in range(13)
        ]
        assert normal_word_census(forbidden, 12) == brute


class TestOracle:
    def test_examples(self):
        assert graded_dim_oracle(rels("cyc(x^2*y^2)"), 4).per_degree == (1, 2, 4, 6, 9)
        assert graded_dim_oracle([P("x^2")], 4).per_degree == (1, 2, 3, 5, 8)
        assert graded_dim_oracle([], 4).per_degree == (1, 2, 4, 8, 16)

    def test_rejects_inhomogeneous(self):
        with pytest.raises(DomainError):
            graded_dim_oracle([P("x^2 + y^3")], 4)

    def test_census_agrees_with_oracle(self):
        for F in corpus(DEFAULT_SEED, 10, homogeneous=True):
            rs = [r for r in F.relations() if r]
            G = complete(rs, bound=10)
            assert tuple(G.census(10)) == graded_dim_oracle(rs, 10).per_degree


class TestTruncated:
    def test_pure_cube(self):
        assert truncated_quotient_dim(Potential("x^3"), 5).total == 19

    def test_against_sympy_rank(self):
        for text, N in [("x^3", 4), ("cyc(x^2*y) + y^3 + y^4", 5), ("1/3*cyc(x*y^2) + x^3 + x^4", 5)]:
            F = Potential(text)
            assert truncated_quotient_dim(F, N).total == sympy_truncated_dim(F, N)

    def test_valuation_three_gives_at_least_eight(self):
        rng = random.Random(DEFAULT_SEED)
        from potalg.corpus import random_potential

        for _ in range(40):
            F = random_potential(rng)
            assert truncated_quotient_dim(F, 5).total >= 8

    def test_matches_completed_normal_words_for_homogeneous(self):
        for F in corpus(DEFAULT_SEED, 10, homogeneous=True):
            G = complete([r for r in F.relations() if r], bound=8)
            assert truncated_quotient_dim(F, 8).total == sum(G.census(7))

    def test_degree_below_valuation(self):
        with pytest.raises(DomainError):
            truncated_quotient_dim(Potential("x^4"), 2)


class TestProbe:
    @pytest.mark.parametrize("text", ["cyc(x^2*y) + y^3 + y^4", "x^3 + y^3 + (x+y)^4"])
    def test_stabilizes_at_eight(self, text):
        rep = completion_dim_probe(Potential(text), 14, 4)
        assert rep.verdict == "Stabilized(8)"
        assert rep.sequence[-1] == 8 and list(rep.sequence) == sorted(rep.sequence)

    def test_cubic_plus_quartic_completion_loses_a_point(self):
        # The polynomial algebra is 9-dimensional. The completion at the origin only
        # sees 8 of those dimensions: the point (x, y) = (-1, 0) is a second solution
        # of the commutative relations, and it is away from the origin.
        F = Potential("1/3*cyc(x*y^2) + x^3 + x^4")
        rep = completion_dim_probe(F, 14, 4)
        assert rep.verdict == "Stabilized(8)"
        assert sympy_truncated_dim(F, 6) == 8
        G = complete(F.relations(), bound=16)
        assert G.certificate is Certificate.SATURATED
        assert G.dimension().total == 9

    def test_inconclusive_for_infinite_algebra(self):
        rep = completion_dim_probe(Potential("x^3"), 10, 3)
        assert rep.verdict == "Inconclusive"
        assert rep.total > 100

    def test_window_too_large(self):
        with pytest.raises(DomainError):
            completion_dim_probe(Potential("x^3"), 5, 4)

    def test_report_json(self):
        rep = completion_dim_probe(Potential("cyc(x^2*y) + y^3 + y^4"), 10, 3)
        d = rep.to_dict()
        assert d["total"] == sum(d["per_degree"]) == 8
        assert d["method"] == "TruncatedQuotient"
        inf = complete([P("x^2")], bound=4).dimension()
        assert inf.total == math.inf and inf.to_dict()["total"] == "infinite"
