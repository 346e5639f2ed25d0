"""Seeded random cyclic potentials for property runs."""

from __future__ import annotations

import random
from fractions import Fraction

from .field import QQ
from .ncpoly import NcPoly
from .potential import Potential, cyclic_symmetrize

DEFAULT_SEED = 20240611


def random_coefficient(rng: random.Random) -> Fraction:
    """p/q with p, q uniform on [-9, 9], q != 0 (so p = 0 happens)."""
    p = rng.randint(-9, 9)
    q = rng.choice([d for d in range(-9, 10) if d])
    return Fraction(p, q)


def random_word(rng: random.Random, degree: int, alphabet: str = "xy") -> str:
    return "".join(rng.choice(alphabet) for _ in range(degree))


def random_polynomial(
    rng: random.Random,
    degrees=(1, 2, 3, 4),
    terms: int = 4,
    alphabet: str = "xy",
    field=QQ,
) -> NcPoly:
    """A raw (not symmetrized) polynomial with no constant term."""
    out = NcPoly.zero(alphabet, field)
    for _ in range(terms):
        w = random_word(rng, rng.choice(degrees), alphabet)
        out = out + NcPoly.word(w, field(random_coefficient(rng)), alphabet, field)
    return out


def random_potential(
    rng: random.Random,
    degrees=(3, 4, 5),
    terms: int = 4,
    homogeneous: bool = False,
    field=QQ,
) -> Potential:
    """A symmetrized random polynomial.

    ``homogeneous=True`` uses a single degree drawn from ``degrees``;
    otherwise every word degree in ``degrees`` may occur and the lowest one
    is forced to survive, so the valuation is ``min(degrees)``.
    """
    degrees = tuple(degrees)
    while True:
        if homogeneous:
            d = rng.choice(degrees)
            pool = [d] * terms
        else:
            pool = [min(degrees)] + [rng.choice(degrees) for _ in range(terms - 1)]
        body = NcPoly.zero("xy", field)
        for d in pool:
            w = random_word(rng, d)
            body = body + NcPoly.word(w, field(random_coefficient(rng)), "xy", field)
        body = cyclic_symmetrize(body)
        if not body:
            continue
        if not homogeneous and body.valuation != min(degrees):
            continue
        return Potential(body)


def corpus(
    seed: int = DEFAULT_SEED,
    count: int = 20,
    homogeneous: bool = False,
    degrees=(3, 4, 5),
    terms: int = 4,
    field=QQ,
) -> list[Potential]:
    """``count`` potentials from one seeded stream; the same seed gives the same list."""
    rng = random.Random(seed)
    return [random_potential(rng, degrees, terms, homogeneous, field) for _ in range(count)]
