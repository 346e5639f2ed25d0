"""Command line entry point: ``potalg <verb> [options]``.

Exit status is 0 on success, 1 when a mathematical precondition fails and
2 for malformed input or configuration.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from fractions import Fraction

from . import abelian, classify3, complex as cx, groebner, series
from .corpus import DEFAULT_SEED, corpus
from .errors import ConfigError, DomainError, ParseError, PotalgError
from .field import parse_field
from .parse import parse_expression, parse_relations
from .potential import Potential, hessian
from .words import order_from_text


SCHEMAS = {
    "derive": "derive",
    "gb": "gb",
    "hilbert": "hilbert",
    "dim": "dim_report",
    "truncdim": "dim_report",
    "complete-dim": "dim_report",
    "gs": "gs",
    "complex": "slice_report",
    "classify3": "classify3",
    "abelian": "abelian",
    "gap": "gap_report",
    "corpus": "corpus",
}


def load_schema(verb: str) -> dict:
    """JSON schema for the ``--format json`` output of ``verb``."""
    from importlib.resources import files

    return json.loads(files("potalg").joinpath("schemas", SCHEMAS[verb] + ".json").read_text())


def _field(args):
    spec = args.field if args.field is not None else os.environ.get("POTALG_FIELD")
    return parse_field(spec)


def _order(args):
    return order_from_text(args.order) if args.order else None


def _potential(args) -> Potential:
    if not args.potential:
        raise ConfigError("--potential is required")
    return Potential(parse_expression(args.potential, "xy", _field(args)))


def _relations(args) -> list:
    if getattr(args, "relations", None):
        return parse_relations(args.relations, "xy", _field(args))
    return [r for r in _potential(args).relations() if r]


def _emit(args, text: str, payload):
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _total(v):
    return "infinite" if v == math.inf else v


# -- verbs --------------------------------------------------------------------

def cmd_derive(args):
    F = _potential(args)
    dx, dy = F.relations()
    H = hessian(F)
    hess = [[H[i, j].to_text() for j in range(2)] for i in range(2)]
    text = "\n".join([f"d_x F = {dx}", f"d_y F = {dy}"] + [
        f"d_{a} d_{b} F = {hess[i][j]}" for i, a in enumerate("xy") for j, b in enumerate("xy")
    ])
    _emit(args, text, {"potential": str(F), "relations": [str(dx), str(dy)], "hessian": hess})


def cmd_gb(args):
    G = groebner.complete(_relations(args), _order(args), args.bound)
    payload = {
        "order": G.order.header(),
        "bound": G.bound,
        "certificate": G.certificate.value,
        "elements": [g.to_text(G.order) for g in G.elements],
        "leading_words": list(G.leading_words),
        "unresolved": list(G.unresolved),
    }
    _emit(args, G.dumps().rstrip("\n"), payload)


def cmd_hilbert(args):
    G = groebner.complete(_relations(args), _order(args), max(args.depth, 1) if args.bound is None else args.bound)
    counts = G.census(args.depth)
    text = ", ".join(map(str, counts))
    payload = {"coefficients": counts, "certificate": G.certificate.value}
    if args.rational:
        if G.certificate is not groebner.Certificate.SATURATED:
            raise DomainError("a rational form needs a saturated basis; raise --bound")
        _, rs = series.hilbert_from_forbidden(G.leading_words, args.depth, G.alphabet)
        text += f"\nH(t) = {rs}"
        payload["rational"] = str(rs)
    _emit(args, text, payload)


def cmd_dim(args):
    rels = _relations(args)
    if args.oracle:
        rep = groebner.graded_dim_oracle(rels, args.depth)
    else:
        rep = groebner.complete(rels, _order(args), args.bound).dimension()
    text = f"dim = {_total(rep.total)}  per degree: {', '.join(map(str, rep.per_degree))}"
    if rep.verdict:
        text += f"  ({rep.verdict})"
    _emit(args, text, rep.to_dict())


def _probe_text(rep) -> str:
    return "\n".join([
        f"truncated dimensions: {', '.join(map(str, rep.sequence))}",
        f"verdict: {rep.verdict}",
    ])


def cmd_truncdim(args):
    F = _potential(args)
    rep = groebner.truncated_quotient_dim(F, args.degree)
    probe = groebner.completion_dim_probe(F, args.degree, args.window) if args.degree >= F.valuation + args.window else None
    text = f"dim = {rep.total}  per degree: {', '.join(map(str, rep.per_degree))}"
    payload = rep.to_dict()
    if probe is not None:
        text += "\n" + _probe_text(probe)
        payload["verdict"] = probe.verdict
        payload["sequence"] = list(probe.sequence)
    _emit(args, text, payload)


def cmd_complete_dim(args):
    rep = groebner.completion_dim_probe(_potential(args), args.max_n, args.window)
    _emit(args, _probe_text(rep), rep.to_dict())


def _counts(text: str | None) -> dict[int, int]:
    out: dict[int, int] = {}
    if not text:
        return out
    for part in text.split(","):
        try:
            d, c = part.split(":")
            out[int(d)] = out.get(int(d), 0) + int(c)
        except ValueError:
            raise ConfigError(f"relation counts look like '4:1,5:1', got {text!r}") from None
    return out


def cmd_gs(args):
    tail = None
    if args.tail:
        (n, s), = _counts(args.tail).items()
        tail = (n, s)
    rs = series.gs_series(args.generators, _counts(args.relations), tail)
    ps = series.expand(rs, args.depth)
    _, first = series.abs_truncate(ps, args.depth)
    lines = [
        f"series: {rs}",
        f"coefficients: {ps.format(min(args.depth, 20))}",
        f"first negative coefficient: {'none up to degree %d' % args.depth if first is None else 'degree %d' % first}",
    ]
    payload = {"series": str(rs), "depth": args.depth, "first_negative": first}
    if args.eval:
        try:
            t0 = Fraction(args.eval)
        except (ValueError, ZeroDivisionError):
            raise ConfigError(f"--eval expects a rational, got {args.eval!r}") from None
        den = rs.denominator if tail is None else series.poly_add(
            series.poly_from_terms({0: 1, 1: -args.generators}), series.poly_from_terms(_counts(args.relations))
        )
        v = series.eval_exact(den, t0)
        word = {1: "positive", 0: "zero", -1: "negative"}[series.sign(v)]
        lines.append(f"G({t0}) = {v}  sign: {word}")
        payload.update({"eval_at": str(t0), "value": str(v), "sign": word})
    _emit(args, "\n".join(lines), payload)


def cmd_complex(args):
    F = _potential(args)
    n = F.degree - 1
    ks = range(args.k, (args.max_k if args.max_k is not None else args.k) + 1)
    G = cx.presentation(F, max(ks) + n + 1)
    reports = [cx.slice_exactness(F, G, k) for k in ks]
    chain = cx.verify_chain(F, G, max(ks) + n + 1)
    lines = [f"chain conditions: {'hold' if chain else 'FAIL'}"]
    for r in reports:
        lines.append(
            f"k={r.k} dims={list(r.dims)} ranks={list(r.ranks)} exact={['yes' if e else 'no' for e in r.exact]} euler_defect={r.euler_defect}"
        )
    _emit(args, "\n".join(lines), [r.to_dict() for r in reports])


def cmd_classify3(args):
    c = classify3.classify_cubic(_potential(args))
    head = c.series_head.head(args.depth)
    text = "\n".join([
        f"class: {c.tag.value}",
        f"canonical potential: {c.canonical_potential}",
        f"series: {', '.join(map(str, head))}, ...",
    ])
    _emit(args, text, {
        "tag": c.tag.value,
        "canonical_potential": str(c.canonical_potential),
        "canonical_relations": [str(r) for r in c.canonical_relations],
        "series_head": head,
    })


def cmd_abelian(args):
    from .potential import abelianize

    comm = [abelianize(r) for r in _relations(args)]
    basis = abelian.buchberger_lex2(comm)
    dim = abelian.quotient_dim_comm(basis)
    text = "\n".join([str(g) for g in basis] + [f"dim = {_total(dim)}"])
    _emit(args, text, {"basis": [str(g) for g in basis], "dim": _total(dim)})


def cmd_gap(args):
    try:
        coeffs = [Fraction(c) for c in args.coeffs.split(",")]
    except (ValueError, ZeroDivisionError):
        raise ConfigError(f"--coeffs expects comma-separated rationals a_3,a_4,..., got {args.coeffs!r}") from None
    rep = abelian.wemyss_gap(coeffs)
    d = rep.to_dict()
    text = f"dim A = {d['dim_a']}  dim B = {d['dim_b']}  gap = {d['gap']}  multiple of 4: {d['multiple_of_four']}  squares: {d['squares']}"
    _emit(args, text, d)


def cmd_corpus(args):
    degrees = tuple(int(d) for d in args.degrees.split(","))
    pots = corpus(args.seed, args.count, args.homogeneous, degrees, args.terms, _field(args))
    texts = [str(F) for F in pots]
    _emit(args, "\n".join([f"# seed={args.seed}"] + texts), {"seed": args.seed, "potentials": texts})


# -- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--field", default=None, help="QQ (default) or GF(p); falls back to $POTALG_FIELD")
    common.add_argument("--order", default=None, help="letter precedence, x>y (default) or y>x")

    p = argparse.ArgumentParser(prog="potalg", description="Exact computations with potential algebras on two generators.")
    sub = p.add_subparsers(dest="verb", required=True)

    def verb(name, func, help_):
        s = sub.add_parser(name, parents=[common], help=help_)
        s.set_defaults(func=func)
        return s

    s = verb("derive", cmd_derive, "cyclic derivatives and Hessian")
    s.add_argument("--potential", required=True)

    s = verb("gb", cmd_gb, "truncated Groebner basis")
    s.add_argument("--potential")
    s.add_argument("--relations", help="expressions separated by ';'")
    s.add_argument("--bound", type=int)

    s = verb("hilbert", cmd_hilbert, "Hilbert series coefficients")
    s.add_argument("--potential")
    s.add_argument("--relations")
    s.add_argument("--depth", type=int, default=10)
    s.add_argument("--bound", type=int)
    s.add_argument("--rational", action="store_true")

    s = verb("dim", cmd_dim, "dimension from normal words (or --oracle)")
    s.add_argument("--potential")
    s.add_argument("--relations")
    s.add_argument("--bound", type=int)
    s.add_argument("--oracle", action="store_true")
    s.add_argument("--depth", type=int, default=8)

    s = verb("truncdim", cmd_truncdim, "dimension of the algebra truncated at a degree")
    s.add_argument("--potential", required=True)
    s.add_argument("--degree", type=int, required=True)
    s.add_argument("--window", type=int, default=4)

    s = verb("complete-dim", cmd_complete_dim, "completion dimension probe")
    s.add_argument("--potential", required=True)
    s.add_argument("--max-n", type=int, default=14)
    s.add_argument("--window", type=int, default=4)

    s = verb("gs", cmd_gs, "Golod-Shafarevich comparison series")
    s.add_argument("--generators", type=int, default=2)
    s.add_argument("--relations", default="", help="degree:count pairs, e.g. 4:1,5:1")
    s.add_argument("--tail", help="n:s for s relations in every degree >= n")
    s.add_argument("--depth", type=int, default=series.DEFAULT_DEPTH)
    s.add_argument("--eval", help="rational point at which to evaluate the denominator")

    s = verb("complex", cmd_complex, "potential complex slices")
    s.add_argument("--potential", required=True)
    s.add_argument("--k", type=int, default=0)
    s.add_argument("--max-k", type=int)

    s = verb("classify3", cmd_classify3, "class of a cubic potential")
    s.add_argument("--potential", required=True)
    s.add_argument("--depth", type=int, default=10)

    s = verb("abelian", cmd_abelian, "commutative lex basis and quotient dimension")
    s.add_argument("--potential")
    s.add_argument("--relations")

    s = verb("gap", cmd_gap, "dim A - dim A^ab for cyc(x^2*y) + cyc(x*y^2) + a(y)")
    s.add_argument("--coeffs", required=True, help="a_3,a_4,...,a_n")

    s = verb("corpus", cmd_corpus, "seeded random cyclic potentials")
    s.add_argument("--seed", type=int, default=DEFAULT_SEED)
    s.add_argument("--count", type=int, default=10)
    s.add_argument("--homogeneous", action="store_true")
    s.add_argument("--degrees", default="3,4,5")
    s.add_argument("--terms", type=int, default=4)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except (ParseError, ConfigError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except DomainError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except PotalgError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
