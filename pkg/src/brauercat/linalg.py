"""Exact linear algebra over the rationals.

Rows are eliminated fraction-free: each row is scaled to primitive integers
and reduced with integer combinations, and only the final reduced row echelon
form is returned as Fractions.  Pivots are chosen by first nonzero column, so
results are deterministic.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

SparseRow = dict  # column -> int


def _to_int_row(row) -> SparseRow:
    if isinstance(row, dict):
        items = [(c, Fraction(v)) for c, v in row.items() if v]
    else:
        items = [(c, Fraction(v)) for c, v in enumerate(row) if v]
    if not items:
        return {}
    den = 1
    for _, v in items:
        den = den * v.denominator // gcd(den, v.denominator)
    out = {c: int(v * den) for c, v in items}
    return _primitive(out)


def _primitive(row: SparseRow) -> SparseRow:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            break
    if g > 1:
        row = {c: v // g for c, v in row.items()}
    lead = row[min(row)]
    if lead < 0:
        row = {c: -v for c, v in row.items()}
    return row


def _eliminate(row: SparseRow, pivot: SparseRow, col: int) -> SparseRow:
    a = pivot[col]
    b = row[col]
    g = gcd(a, b)
    a, b = a // g, b // g
    out = {c: a * v for c, v in row.items()}
    for c, v in pivot.items():
        nv = out.get(c, 0) - b * v
        if nv:
            out[c] = nv
        else:
            out.pop(c, None)
    return out


class Echelon:
    """Incrementally maintained row echelon basis of a row space."""

    def __init__(self):
        self.pivots: dict[int, SparseRow] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def add(self, row) -> bool:
        """Insert a row; returns True if it enlarged the span."""
        row = _to_int_row(row)
        while row:
            c = min(row)
            piv = self.pivots.get(c)
            if piv is None:
                self.pivots[c] = _primitive(row)
                return True
            row = _eliminate(row, piv, c)
            if row:
                row = _primitive(row)
        return False

    def contains(self, row) -> bool:
        row = _to_int_row(row)
        while row:
            c = min(row)
            piv = self.pivots.get(c)
            if piv is None:
                return False
            row = _eliminate(row, piv, c)
        return True

    def rref(self) -> list[dict[int, Fraction]]:
        """Reduced row echelon basis, pivots ascending, pivot entries 1."""
        cols = sorted(self.pivots)
        reduced: dict[int, SparseRow] = {}
        for c in reversed(cols):
            row = dict(self.pivots[c])
            for c2 in sorted(k for k in row if k != c and k in reduced):
                if c2 in row:
                    row = _eliminate(row, reduced[c2], c2)
            reduced[c] = _primitive(row)
        out = []
        for c in cols:
            row = reduced[c]
            lead = row[c]
            out.append({k: Fraction(v, lead) for k, v in sorted(row.items())})
        return out


def echelon(rows: Iterable) -> Echelon:
    e = Echelon()
    for row in rows:
        e.add(row)
    return e


def rank(rows: Iterable) -> int:
    return echelon(rows).rank


def rref(rows: Iterable, ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    basis = echelon(rows).rref()
    dense = [[row.get(c, Fraction(0)) for c in range(ncols)] for row in basis]
    pivots = [min(row) for row in basis]
    return dense, pivots


def nullspace(rows: Iterable, ncols: int) -> list[list[Fraction]]:
    """Basis of ``{v : A v = 0}``, one vector per free column."""
    basis = echelon(rows).rref()
    pivot_cols = [min(row) for row in basis]
    pivset = set(pivot_cols)
    out = []
    for free in range(ncols):
        if free in pivset:
            continue
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for pc, row in zip(pivot_cols, basis):
            coef = row.get(free)
            if coef:
                v[pc] = -coef
        out.append(v)
    return out


def transpose(rows: Sequence[Sequence], ncols: int) -> list[list]:
    return [[row[c] for row in rows] for c in range(ncols)]


def left_nullspace(rows: Sequence[Sequence], ncols: int) -> list[list[Fraction]]:
    """Basis of ``{v : v^T A = 0}``."""
    return nullspace(transpose(rows, ncols), len(rows))


def same_row_space(a: Iterable, b: Iterable) -> bool:
    ea, eb = echelon(a), echelon(b)
    return ea.rref() == eb.rref()


def mat_vec(rows: Sequence[Sequence], v: Sequence) -> list:
    return [sum((x * y for x, y in zip(row, v) if x and y), Fraction(0)) for row in rows]
