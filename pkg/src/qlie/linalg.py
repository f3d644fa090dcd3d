"""Exact rank over the fraction field Q(q) of Z[q, q^-1].

Two routines: a dense Bareiss elimination (every division is an exact
division by the previous pivot) and a sparse incremental echelon form for
the tall, very sparse matrices produced by rewriting.  Neither leaves
Z[q, q^-1].
"""

from __future__ import annotations

from math import gcd
from typing import Dict, Hashable, Iterable, List, Sequence

from .scalars import ONE, QScalar

Row = Dict[Hashable, QScalar]


def bareiss_rank(mat: Sequence[Sequence]) -> int:
    """Rank of a rectangular matrix of QScalars by fraction-free elimination."""
    a = [[QScalar.lift(v) for v in row] for row in mat]
    if not a:
        return 0
    nrows, ncols = len(a), len(a[0])
    if any(len(r) != ncols for r in a):
        raise ValueError("ragged matrix")
    prev = ONE
    k = 0
    for c in range(ncols):
        if k == nrows:
            break
        piv = next((r for r in range(k, nrows) if a[r][c]), None)
        if piv is None:
            continue
        a[k], a[piv] = a[piv], a[k]
        p = a[k][c]
        for i in range(k + 1, nrows):
            f = a[i][c]
            row_i, row_k = a[i], a[k]
            for j in range(c + 1, ncols):
                v = p * row_i[j] - f * row_k[j]
                row_i[j] = v.exquo(prev) if v else v
            row_i[c] = QScalar()
        prev = p
        k += 1
    return k


def _normalize(row: Row) -> Row:
    """Divide out the integer content and a power of q (both harmless for rank)."""
    g = 0
    low = None
    for v in row.values():
        g = gcd(g, v.content())
        d = v.low_degree()
        low = d if low is None else min(low, d)
    if g == 1 and low == 0:
        return row
    unit = QScalar.qpow(low, g)
    return {k: v.exquo(unit) for k, v in row.items()}


class EchelonForm:
    """Incrementally maintained row echelon form over Q(q)."""

    def __init__(self, order: Iterable[Hashable] = None):
        self.pivots: Dict[Hashable, Row] = {}
        self._rank_of = None
        if order is not None:
            self._rank_of = {k: idx for idx, k in enumerate(order)}

    def _lead(self, row: Row):
        if self._rank_of is None:
            return min(row)
        return min(row, key=self._rank_of.__getitem__)

    def reduce(self, row: Row) -> Row:
        row = {k: v for k, v in row.items() if v}
        while row:
            c = self._lead(row)
            p = self.pivots.get(c)
            if p is None:
                return row
            pc, rc = p[c], row[c]
            out: Row = {}
            if pc.is_unit():
                f = rc * pc.inverse()
                out = dict(row)
                for k, v in p.items():
                    s = out.get(k, QScalar()) - f * v
                    if s:
                        out[k] = s
                    else:
                        out.pop(k, None)
            else:
                for k, v in row.items():
                    out[k] = pc * v
                for k, v in p.items():
                    s = out.get(k, QScalar()) - rc * v
                    if s:
                        out[k] = s
                    else:
                        out.pop(k, None)
            out.pop(c, None)
            row = _normalize(out) if out else out
        return row

    def add(self, row: Row) -> bool:
        """Insert a row; return True iff it increased the rank."""
        r = self.reduce(row)
        if not r:
            return False
        self.pivots[self._lead(r)] = r
        return True

    def contains(self, row: Row) -> bool:
        return not self.reduce(row)

    @property
    def rank(self) -> int:
        return len(self.pivots)


def sparse_rank(rows: Iterable[Row], order: Iterable[Hashable] = None) -> int:
    ech = EchelonForm(order)
    for r in rows:
        ech.add(r)
    return ech.rank


def rank_over_fraction_field(mat) -> int:
    """Exact rank over Q(q); accepts a dense list of rows or a list of sparse dict rows."""
    mat = list(mat)
    if mat and isinstance(mat[0], dict):
        return sparse_rank(mat)
    return bareiss_rank(mat)


def to_dense(rows: List[Row], columns: List[Hashable]) -> List[List[QScalar]]:
    return [[r.get(c, QScalar()) for c in columns] for r in rows]
