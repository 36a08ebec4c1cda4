"""Hom-space dimensions of the enhanced category by three routes.

* ``gram``: rank of the matrix of closure pairings of the spanning set;
* ``functor``: rank of the tensor images of the spanning set;
* ``formula``: ``C(r, m) d(r - m) + d(r)`` with ``d`` from the invariant oracle.

Pairings of ``s -> t`` morphisms are taken after bending all ``s`` bottom
points up, so every pairing is a closed ``0 -> 0`` diagram.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from . import brauer
from .brauer import ArityError, BrauerMorphism, CapExceeded, enumerate_diagrams
from .enhanced import (
    EnhancedDiagram,
    EnhancedMorphism,
    brauer_diagram,
    compose_enh,
    dual_enh,
    rotate_up_enh,
    single_delta_diagrams,
)
from .linalg import echelon, left_nullspace, nullspace, rank
from .scalars import evaluate

SPANNING_CAP = 10
ROUTES = ("gram", "functor", "formula")


def _check_cap(s: int, t: int):
    if s < 0 or t < 0:
        raise ValueError("arities must be natural numbers")
    if s + t > SPANNING_CAP:
        raise CapExceeded(f"s+t = {s + t} exceeds the spanning-set cap of {SPANNING_CAP}")


def spanning_set(m: int, s: int, t: int) -> list[EnhancedDiagram]:
    """Brauer diagrams then single-vertex diagrams of ``s -> t``."""
    _check_cap(s, t)
    out = [brauer_diagram(s, t, d.pairs) for d in enumerate_diagrams(s, t)] if (s + t) % 2 == 0 else []
    return out + single_delta_diagrams(s, t, m)


def pairing(x: EnhancedMorphism, y: EnhancedMorphism) -> Fraction:
    """Closure ``y^* o x`` of two ``0 -> r`` morphisms."""
    if x.m != y.m:
        raise ValueError(f"m mismatch: {x.m} vs {y.m}")
    if x.source or y.source or x.target != y.target:
        raise ArityError(f"pairing needs two 0->r morphisms, got {x.source}->{x.target} and {y.source}->{y.target}")
    return compose_enh(x, dual_enh(y)).scalar()


def as_vector_morphism(f: EnhancedMorphism) -> EnhancedMorphism:
    """Bend an ``s -> t`` morphism to ``0 -> (t + s)``."""
    return rotate_up_enh(f, f.source)


@dataclass
class GramMatrix:
    m: int
    s: int
    t: int
    basis: list[EnhancedDiagram]
    entries: list[list[Fraction]]

    @property
    def rank(self) -> int:
        return rank(self.entries)


def gram_matrix(m: int, s: int, t: int) -> GramMatrix:
    basis = spanning_set(m, s, t)
    bent = [as_vector_morphism(EnhancedMorphism.from_diagram(d, m)) for d in basis]
    n = len(basis)
    entries = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            if basis[i].has_delta != basis[j].has_delta:
                continue  # closes to a single vertex, zero by harmonicity
            v = pairing(bent[i], bent[j])
            entries[i][j] = entries[j][i] = v
    return GramMatrix(m, s, t, basis, entries)


def functor_rows(m: int, s: int, t: int, basis=None) -> list[list]:
    from .tensors import as_vector, eval_morphism

    basis = spanning_set(m, s, t) if basis is None else basis
    return [as_vector(eval_morphism(d, m)) for d in basis]


def formula_dimension(m: int, r: int) -> int:
    from .oracle import d_value

    return comb(r, m) * d_value(m, r - m) + d_value(m, r)


def dim_hom(m: int, s: int, t: int, route: str = "gram"):
    """Dimension of ``Hom(s, t)``; ``route="all"`` returns a dict of all three."""
    if route == "all":
        return {r: dim_hom(m, s, t, r) for r in ROUTES}
    _check_cap(s, t)
    if route == "gram":
        return gram_matrix(m, s, t).rank
    if route == "functor":
        return rank(functor_rows(m, s, t))
    if route == "formula":
        return formula_dimension(m, s + t)
    raise ValueError(f"unknown route {route!r}")


def combination(m: int, s: int, t: int, basis, coeffs) -> EnhancedMorphism:
    return EnhancedMorphism(m, s, t, {d: c for d, c in zip(basis, coeffs) if c})


@dataclass
class SftReport:
    kernel: list[EnhancedMorphism]
    gram_null_rank: int
    functor_null_rank: int
    gram_null_in_functor_kernel: bool
    functor_kernel_gram_null: bool

    @property
    def ok(self) -> bool:
        return (self.gram_null_in_functor_kernel and self.functor_kernel_gram_null
                and self.gram_null_rank == self.functor_null_rank)


def sft_report(m: int, s: int, t: int) -> SftReport:
    """Gram nullspace against the functor kernel of the spanning set."""
    g = gram_matrix(m, s, t)
    n = len(g.basis)
    rows = functor_rows(m, s, t, g.basis)
    gram_null = nullspace(g.entries, n)
    func_null = left_nullspace(rows, len(rows[0])) if rows else []
    ncols = len(rows[0]) if rows else 0

    def image_zero(v):
        return all(sum(c * row[k] for c, row in zip(v, rows) if c and row[k]) == 0 for k in range(ncols))

    def gram_zero(v):
        return all(sum(a * b for a, b in zip(row, v) if a and b) == 0 for row in g.entries)

    kernel = [combination(m, s, t, g.basis, v) for v in gram_null]
    return SftReport(
        kernel=kernel,
        gram_null_rank=len(gram_null),
        functor_null_rank=len(func_null),
        gram_null_in_functor_kernel=all(image_zero(v) for v in gram_null),
        functor_kernel_gram_null=all(gram_zero(v) for v in func_null),
    )


def sft_kernel(m: int, s: int, t: int) -> list[EnhancedMorphism]:
    """Basis of the Gram nullspace as combinations of spanning diagrams."""
    report = sft_report(m, s, t)
    if not report.ok:
        raise AssertionError(f"Gram nullspace and functor kernel differ at m={m}, {s}->{t}")
    return report.kernel


@lru_cache(maxsize=64)
def _null_rref(m: int, s: int, t: int) -> tuple:
    g = gram_matrix(m, s, t)
    rows = echelon(nullspace(g.entries, len(g.basis))).rref()
    return tuple(g.basis), tuple((min(row), row) for row in rows)


def reduce_modulo_relations(f: EnhancedMorphism) -> EnhancedMorphism:
    """The unique representative of ``f`` with zero coefficient on every
    pivot column of the Gram nullspace.

    Normal forms with several vertices depend on the order in which vertices
    are fused, since single-vertex diagrams satisfy linear relations; two
    morphisms are equal in the category iff their reductions coincide.
    """
    basis, rows = _null_rref(f.m, f.source, f.target)
    v = coefficients_in(f, basis)
    for pivot, row in rows:
        c = v[pivot]
        if c:
            for col, x in row.items():
                v[col] -= c * x
    return combination(f.m, f.source, f.target, basis, v)


def coefficients_in(f: EnhancedMorphism, basis) -> list[Fraction]:
    terms = dict(f)
    index = {d: i for i, d in enumerate(basis)}
    missing = [d for d in terms if d not in index]
    if missing:
        raise ValueError(f"{len(missing)} terms lie outside the spanning set")
    out = [Fraction(0)] * len(basis)
    for d, c in terms.items():
        out[index[d]] = Fraction(c)
    return out


def sigma_in_kernel(m: int) -> dict:
    """``S_{m+1}`` as an ``(m+1) -> (m+1)`` combination is Gram-null and has
    zero tensor image."""
    from .tensors import eval_morphism

    r = m + 1
    sig = EnhancedMorphism.from_brauer(brauer.antisymmetrizer(r), m)
    g = gram_matrix(m, r, r)
    v = coefficients_in(sig, g.basis)
    gram_null = all(sum(a * b for a, b in zip(row, v) if a and b) == 0 for row in g.entries)
    return {"m": m, "terms": len(sig), "gram_null": gram_null, "functor_zero": eval_morphism(sig).is_zero()}


def brauer_closure_values(f: BrauerMorphism, m: int) -> list[Fraction]:
    """Closure pairings of a Brauer morphism with every Brauer diagram of the
    same arity, computed over generic delta and then evaluated at ``m``."""
    s, t = f.source, f.target
    bent = brauer.rotate_up(f, s)
    out = []
    for d in enumerate_diagrams(s, t):
        other = brauer.rotate_up(BrauerMorphism.from_diagram(d), s)
        closed = brauer.compose(bent, brauer.dual(other))
        out.append(evaluate(closed.scalar(), m))
    return out


def oracle_dimension(m: int, r: int) -> int:
    """``dim (V^{(x) r})^{SO(m)}``, straight from the brute-force oracle."""
    from .oracle import invariant_space

    return invariant_space(m, r).dim


def dimension_report(m: int, r_max: int) -> list[dict]:
    """All three routes for every split ``s + t = r <= r_max``, plus the
    oracle's dimension as an outside reference."""
    rows = []
    for r in range(r_max + 1):
        ref = oracle_dimension(m, r)
        for s in range(r + 1):
            t = r - s
            vals = dim_hom(m, s, t, "all")
            rows.append({"m": m, "s": s, "t": t, **vals, "oracle": ref,
                         "agree": vals["gram"] == vals["functor"] == vals["formula"]})
    return rows


def split_independent(rows: list[dict]) -> bool:
    by_r: dict[int, set] = {}
    for row in rows:
        by_r.setdefault(row["s"] + row["t"], set()).add(row["gram"])
    return all(len(v) == 1 for v in by_r.values())


def dimension_report_csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["m", "s", "t", "gram", "functor", "formula", "agree"])
    for row in rows:
        w.writerow([row["m"], row["s"], row["t"], row["gram"], row["functor"], row["formula"],
                    "true" if row["agree"] else "false"])
    return buf.getvalue()


def pair_partition_tensors(m: int, r: int):
    """Tensor images of all perfect matchings of ``r`` points (``0 -> r``)."""
    from .tensors import eval_morphism

    if r % 2:
        return []
    return [eval_morphism(d, m) for d in enumerate_diagrams(0, r)]
