"""Exact sparse linear algebra over a field.

Vectors are dicts ``column -> scalar``. Columns are integers, or any hashable
objects together with a ``key`` function mapping them to integers; the key
fixes pivot priority.
"""

from __future__ import annotations

import heapq
import math
from fractions import Fraction


class EchelonBasis:
    """Incrementally maintained echelon basis of a subspace.

    Every stored row is monic at its pivot, and the pivot is the extreme
    column of the row (``leading="max"`` or ``"min"`` in ``key``). Rows are
    fully reduced against the pivots present when they were inserted.
    """

    def __init__(self, key=None, leading: str = "max"):
        if leading not in ("max", "min"):
            raise ValueError("leading must be 'max' or 'min'")
        self.key = key or (lambda c: c)
        self.leading = leading
        self.rows: dict = {}

    def __len__(self):
        return len(self.rows)

    @property
    def rank(self) -> int:
        return len(self.rows)

    @property
    def pivots(self):
        return self.rows.keys()

    def reduce(self, vec: dict) -> dict:
        """Eliminate every pivot column from ``vec``; returns a new dict."""
        key = self.key
        sgn = -1 if self.leading == "max" else 1
        rows = self.rows
        terms = dict(vec)
        heap = [(sgn * key(c), c) for c in terms]
        heapq.heapify(heap)
        out = {}
        while heap:
            _, col = heapq.heappop(heap)
            a = terms.pop(col, None)
            if a is None:
                continue
            row = rows.get(col)
            if row is None:
                out[col] = a
                continue
            for c, b in row.items():
                if c == col:
                    continue
                v = terms.get(c)
                if v is None:
                    terms[c] = -a * b
                    heapq.heappush(heap, (sgn * key(c), c))
                else:
                    v = v - a * b
                    if v:
                        terms[c] = v
                    else:
                        del terms[c]
        return out

    def lead(self, vec: dict):
        if self.leading == "max":
            return max(vec, key=self.key)
        return min(vec, key=self.key)

    def add(self, vec: dict):
        """Insert ``vec``; returns the new reduced row, or None if dependent."""
        r = self.reduce(vec)
        if not r:
            return None
        p = self.lead(r)
        a = r[p]
        inv = Fraction(1, a) if isinstance(a, int) else 1 / a
        row = {c: v * inv for c, v in r.items()}
        self.rows[p] = row
        return row

    def contains(self, vec: dict) -> bool:
        return not self.reduce(vec)


def rank(rows, key=None) -> int:
    """Rank of a list of sparse vectors by straightforward elimination."""
    eb = EchelonBasis(key=key)
    for r in rows:
        if r:
            eb.add(r)
    return eb.rank


def dense_from_sparse(columns: list[dict], row_index: dict, zero) -> list[list]:
    """Dense matrix (rows x cols) from sparse column vectors."""
    m = [[zero] * len(columns) for _ in range(len(row_index))]
    for j, col in enumerate(columns):
        for r, v in col.items():
            m[row_index[r]][j] = v
    return m


def rank_fraction_free(matrix: list[list]) -> int:
    """Rank by Bareiss fraction-free elimination.

    Rational matrices are first scaled row by row to integers, so every
    intermediate entry stays an integer (the exact division is the point of
    the method). Prime-field entries go through the same recurrence.
    """
    if not matrix or not matrix[0]:
        return 0
    rows = []
    for row in matrix:
        if any(isinstance(v, Fraction) for v in row):
            den = math.lcm(*(Fraction(v).denominator for v in row))
            rows.append([int(Fraction(v) * den) for v in row])
        else:
            rows.append(list(row))
    n_rows, n_cols = len(rows), len(rows[0])
    prev = 1
    r = 0
    for c in range(n_cols):
        piv = next((i for i in range(r, n_rows) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r][c]
        for i in range(r + 1, n_rows):
            a = rows[i][c]
            ri = rows[i]
            rr = rows[r]
            for j in range(c, n_cols):
                val = p * ri[j] - a * rr[j]
                ri[j] = val // prev if isinstance(val, int) else val / prev
        prev = p
        r += 1
        if r == n_rows:
            break
    return r
