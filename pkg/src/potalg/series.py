"""Exact formal power series, rational series and Golod-Shafarevich bounds.

Univariate polynomials are plain tuples of coefficients, lowest degree first.
"""

from __future__ import annotations

import math
import threading
from collections.abc import Iterable, Iterator, Mapping
from fractions import Fraction

from .automaton import AvoidanceAutomaton
from .errors import DomainError

DEFAULT_DEPTH = 200


def _trim(p) -> tuple:
    p = list(p)
    while p and not p[-1]:
        p.pop()
    return tuple(p)


def poly_mul(p, q) -> tuple:
    if not p or not q:
        return ()
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return _trim(out)


def poly_add(p, q) -> tuple:
    n = max(len(p), len(q))
    return _trim(
        (p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)
    )


def poly_sub(p, q) -> tuple:
    return poly_add(p, tuple(-c for c in q))


def poly_from_terms(terms: Mapping[int, object]) -> tuple:
    """``{degree: coefficient}`` to a coefficient tuple."""
    if not terms:
        return ()
    out = [0] * (max(terms) + 1)
    for k, c in terms.items():
        if k < 0:
            raise DomainError(f"negative exponent {k}")
        out[k] += c
    return _trim(out)


def _fmt_scalar(c) -> str:
    if isinstance(c, Fraction) and c.denominator == 1:
        return str(c.numerator)
    return str(c)


def format_poly(p, var: str = "t") -> str:
    """``1 - 2*t + 2*t^3 - t^4`` (ascending powers)."""
    p = _trim(p)
    if not p:
        return "0"
    parts = []
    for k, c in enumerate(p):
        if not c:
            continue
        neg = c < 0
        mag = -c if neg else c
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        if not mono:
            body = _fmt_scalar(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{_fmt_scalar(mag)}*{mono}"
        if not parts:
            parts.append(f"-{body}" if neg else body)
        else:
            parts.append(f"- {body}" if neg else f"+ {body}")
    return " ".join(parts)


class PowerSeries:
    """Lazily extended coefficient sequence.

    Coefficients come from an iterator and are cached; an exhausted source
    means every later coefficient is zero. Extension runs under a lock, so
    concurrent readers always see a consistent prefix.
    """

    def __init__(self, source: Iterable):
        self._source: Iterator | None = iter(source)
        self._coeffs: list = []
        self._lock = threading.Lock()

    @property
    def known_up_to(self) -> int:
        """Index of the last coefficient produced so far (-1 if none)."""
        return len(self._coeffs) - 1

    def _extend(self, n: int):
        with self._lock:
            while len(self._coeffs) <= n and self._source is not None:
                try:
                    self._coeffs.append(next(self._source))
                except StopIteration:
                    self._source = None

    def coefficient(self, k: int):
        if k < 0:
            raise IndexError(k)
        if k >= len(self._coeffs):
            self._extend(k)
        return self._coeffs[k] if k < len(self._coeffs) else 0

    def __getitem__(self, k):
        if isinstance(k, slice):
            stop = k.stop
            if stop is None:
                raise ValueError("power series slices need an explicit stop")
            return [self.coefficient(i) for i in range(*k.indices(stop))]
        return self.coefficient(k)

    def head(self, n: int) -> list:
        """Coefficients of degrees 0..n."""
        self._extend(n)
        return [self.coefficient(i) for i in range(n + 1)]

    def format(self, n: int) -> str:
        return ", ".join(_fmt_scalar(c) for c in self.head(n)) + ", ..."

    def __repr__(self):
        return f"PowerSeries([{', '.join(map(_fmt_scalar, self._coeffs[:8]))}{', ...' if len(self._coeffs) > 8 else ''}])"


class RationalSeries:
    """``numerator / denominator`` with a nonzero constant term downstairs."""

    __slots__ = ("numerator", "denominator", "_series")

    def __init__(self, numerator, denominator):
        numerator, denominator = _trim(numerator), _trim(denominator)
        if not denominator or not denominator[0]:
            raise DomainError("denominator must have a nonzero constant term")
        self.numerator = numerator
        self.denominator = denominator
        self._series = None

    def _coefficients(self) -> Iterator:
        num, den = self.numerator, self.denominator
        d0 = den[0]
        inv = Fraction(1, d0) if isinstance(d0, int) else 1 / d0
        integral = isinstance(d0, int) and abs(d0) == 1 and all(
            isinstance(c, int) for c in num + den
        )
        a: list = []
        k = 0
        while True:
            s = num[k] if k < len(num) else 0
            for i in range(1, min(k, len(den) - 1) + 1):
                s -= den[i] * a[k - i]
            v = s * d0 if integral else s * inv
            if isinstance(v, Fraction) and v.denominator == 1:
                v = v.numerator
            a.append(v)
            yield v
            k += 1

    def series(self) -> PowerSeries:
        if self._series is None:
            self._series = PowerSeries(self._coefficients())
        return self._series

    def normalized(self) -> "RationalSeries":
        """Integer coefficients, content removed, positive constant term downstairs."""
        num, den = self.numerator, self.denominator
        all_c = [Fraction(c) for c in num + den]
        lcm = math.lcm(*(c.denominator for c in all_c))
        num = [int(Fraction(c) * lcm) for c in num]
        den = [int(Fraction(c) * lcm) for c in den]
        g = math.gcd(*num, *den)
        if den[0] < 0:
            g = -g
        return RationalSeries(tuple(c // g for c in num), tuple(c // g for c in den))

    def __eq__(self, other):
        if not isinstance(other, RationalSeries):
            return NotImplemented
        return poly_mul(self.numerator, other.denominator) == poly_mul(
            other.numerator, self.denominator
        )

    def __hash__(self):
        n = self.normalized()
        return hash((n.numerator, n.denominator))

    def __str__(self):
        n = self.normalized()

        def wrap(p):
            text = format_poly(p)
            return f"({text})" if len(p) > 1 and sum(1 for c in p if c) > 1 else text

        return f"{wrap(n.numerator)} / {wrap(n.denominator)}"

    def __repr__(self):
        return f"RationalSeries({str(self)!r})"


def expand(rs: RationalSeries, n: int) -> PowerSeries:
    """The series of ``rs`` with coefficients 0..n computed."""
    ps = rs.series()
    ps.head(n)
    return ps


def satisfies_recurrence(rs: RationalSeries, depth: int) -> bool:
    """``sum_i den_i * a_{k-i} == 0`` for deg(num) < k <= depth."""
    a = rs.series().head(depth)
    den = rs.denominator
    for k in range(len(rs.numerator), depth + 1):
        if sum(den[i] * a[k - i] for i in range(min(k, len(den) - 1) + 1)):
            return False
    return True


def gs_series(generators: int, counts: Mapping[int, int] | None = None, tail: tuple[int, int] | None = None) -> RationalSeries:
    """Golod-Shafarevich comparison series ``1 / (1 - d t + sum_k s_k t^k)``.

    ``counts`` maps a degree to the number of relations of that degree.
    ``tail=(n, s)`` adds s relations in every degree >= n; the geometric
    tail s t^n / (1 - t) is cleared by multiplying through with 1 - t.
    """
    if generators < 1:
        raise DomainError("need at least one generator")
    counts = dict(counts or {})
    if any(c < 0 for c in counts.values()) or any(k < 1 for k in counts):
        raise DomainError("relation counts must be non-negative, degrees positive")
    den = poly_add((1, -generators), poly_from_terms(counts))
    if tail is None:
        return RationalSeries((1,), den)
    n, s = tail
    if n < 1 or s < 0:
        raise DomainError(f"bad tail {tail}")
    den = poly_add(poly_mul((1, -1), den), poly_from_terms({n: s}))
    return RationalSeries((1, -1), den)


def abs_truncate(ps: PowerSeries, n: int) -> tuple[PowerSeries, int | None]:
    """Copy coefficients up to the first negative one and zero the rest.

    Returns the truncated series and the index of the first negative
    coefficient among degrees 0..n, or None when there is none that early
    (a finite-depth statement only).
    """
    head = ps.head(n)
    first = next((k for k, c in enumerate(head) if c < 0), None)
    if first is None:
        return ps, None
    return PowerSeries(head[:first]), first


def eval_exact(p, t0) -> Fraction:
    """Exact value of the polynomial ``p`` at the rational point ``t0`` (Horner)."""
    t0 = Fraction(t0)
    v = Fraction(0)
    for c in reversed(_trim(p)):
        v = v * t0 + c
    return v


def sign(v) -> int:
    return (v > 0) - (v < 0)


def berlekamp_massey(seq) -> tuple:
    """Shortest recurrence ``C`` (C[0] = 1) with sum_i C[i] a_{k-i} = 0 for k >= len(C)...

    Returns ``(C, L)`` where L is the recurrence length; exact over Fractions.
    """
    seq = [Fraction(a) for a in seq]
    C, B = [Fraction(1)], [Fraction(1)]
    L, m, b = 0, 1, Fraction(1)
    for n, a in enumerate(seq):
        d = a + sum(C[i] * seq[n - i] for i in range(1, L + 1) if i < len(C))
        if d == 0:
            m += 1
            continue
        coef = d / b
        T = C[:]
        if len(C) < len(B) + m:
            C = C + [Fraction(0)] * (len(B) + m - len(C))
        for i, bb in enumerate(B):
            C[i + m] -= coef * bb
        if 2 * L <= n:
            L, B, b, m = n + 1 - L, T, d, 1
        else:
            m += 1
    return tuple(C), L


def _as_int(c):
    return c.numerator if isinstance(c, Fraction) and c.denominator == 1 else c


def hilbert_from_forbidden(leading_words, n: int, alphabet: str = "xy") -> tuple[PowerSeries, RationalSeries]:
    """Census series of the words avoiding ``leading_words`` plus its rational form.

    The census is ``u M^k 1`` for the transfer matrix M of the avoidance
    automaton, so it obeys a recurrence of length at most the number of
    live states. The minimal one is recovered exactly from twice that many
    terms; its denominator divides the reversed characteristic polynomial
    of M. The rational form is checked against the census up to degree n.
    """
    aut = AvoidanceAutomaton(leading_words, alphabet)
    states = max(len(aut.transfer_matrix()[1]), 1)
    depth = max(n, 2 * states + 2)
    census = aut.counts(depth)
    C, L = berlekamp_massey(census[: 2 * states + 2])
    den = _trim(C[: L + 1]) or (Fraction(1),)
    num = poly_mul(den, census[:L])[:L] if L else ()
    rs = RationalSeries(tuple(map(_as_int, num)), tuple(map(_as_int, den))).normalized()
    if rs.series().head(depth) != census:
        raise RuntimeError("rational form does not reproduce the census")

    def counts_iter():
        vec = {0: 1} if not aut.dead[0] else {}
        while True:
            yield sum(vec.values())
            nxt: dict[int, int] = {}
            for s, c in vec.items():
                for t in aut.delta[s]:
                    if not aut.dead[t]:
                        nxt[t] = nxt.get(t, 0) + c
            vec = nxt

    ps = PowerSeries(counts_iter())
    ps.head(n)
    return ps, rs


def coefficientwise_geq(a: PowerSeries, b: PowerSeries, n: int) -> bool:
    """True iff ``a_i >= b_i`` for every i <= n."""
    return all(x >= y for x, y in zip(a.head(n), b.head(n)))


def minimal_series(n: int) -> RationalSeries:
    """``1 / (1 - 2t + 2t^n - t^(n+1))``, the smallest series for degree-(n+1) potentials."""
    if n < 2:
        raise DomainError("n must be at least 2")
    return RationalSeries((1,), poly_from_terms({0: 1, 1: -2, n: 2, n + 1: -1}))


def series_of(coefficients) -> PowerSeries:
    """Finite coefficient list as a power series (zeros afterwards)."""
    return PowerSeries(list(coefficients))
