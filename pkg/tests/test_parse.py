from fractions import Fraction

import pytest

from potalg import GF, NcPoly, parse_expression
from potalg.corpus import DEFAULT_SEED, corpus
from potalg.errors import ParseError
from potalg.parse import parse_relations
from potalg.words import all_words


def test_cyc_operator():
    assert parse_expression("cyc(x^2*y)") == NcPoly({"xxy": 1, "xyx": 1, "yxx": 1})


def test_plain_sum():
    assert parse_expression("x*y + y*x + y^2") == NcPoly({"xy": 1, "yx": 1, "yy": 1})


def test_power_of_sum_expands_noncommutatively():
    f = parse_expression("(x+y)^4")
    assert len(f) == 16 and set(f.words()) == set(all_words("xy", 4))


def test_precedence():
    assert parse_expression("x + y*x^2") == NcPoly({"x": 1, "yxx": 1})
    assert parse_expression("2*x^2") == NcPoly({"xx": 2})
    assert parse_expression("x - y - x") == NcPoly({"y": -1})


def test_rationals_and_leading_sign():
    f = parse_expression("-1/3*x + 4/6*y")
    assert f.coeff("x") == Fraction(-1, 3)
    assert f.coeff("y") == Fraction(2, 3)


def test_cyc_is_linear_and_counts_multiplicity():
    assert parse_expression("cyc(x^3)") == NcPoly({"xxx": 3})
    assert parse_expression("cyc(x*y + 2*y*x)") == NcPoly({"xy": 3, "yx": 3})


def test_prime_field():
    f = parse_expression("1/2*x", field=GF(7))
    assert f.coeff("x") == GF(7)(4)


@pytest.mark.parametrize(
    "text, line, column",
    [
        ("x*y +", 1, 6),
        ("xy", 1, 1),
        ("x**2", 1, 3),
        ("x + (y", 1, 7),
        ("x +\n  z", 2, 3),
        ("x $ y", 1, 3),
        ("x y", 1, 3),
    ],
)
def test_errors_carry_position(text, line, column):
    with pytest.raises(ParseError) as info:
        parse_expression(text)
    assert (info.value.line, info.value.column) == (line, column)


def test_relation_lists():
    rels = parse_relations("x*y + y*x; x^2\n y^3")
    assert [str(r) for r in rels] == ["x*y + y*x", "x^2", "y^3"]


def test_round_trip_over_corpus():
    for F in corpus(DEFAULT_SEED, 40):
        for f in [F.body] + F.relations():
            assert parse_expression(str(f)) == f
