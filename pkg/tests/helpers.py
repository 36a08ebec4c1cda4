"""Random objects shared by the property tests.  Everything is driven by a
seeded ``random.Random`` so failures replay exactly."""

from __future__ import annotations

import random
from fractions import Fraction

import numpy as np

from brauercat import brauer
from brauercat import expr as E
from brauercat.brauer import BrauerDiagram, BrauerMorphism, all_matchings
from brauercat.enhanced import EnhancedMorphism
from brauercat.homspace import spanning_set
from brauercat.scalars import DeltaPolynomial
from brauercat.tensors import Tensor


def random_poly(rng: random.Random, max_degree: int = 3, span: int = 5) -> DeltaPolynomial:
    return DeltaPolynomial(Fraction(rng.randint(-span, span), rng.randint(1, 3))
                           for _ in range(rng.randint(0, max_degree + 1)))


def random_diagram(rng: random.Random, s: int, t: int) -> BrauerDiagram:
    pts = list(range(s + t))
    rng.shuffle(pts)
    return BrauerDiagram.from_pairs(s, t, [(pts[i], pts[i + 1]) for i in range(0, s + t, 2)])


def random_brauer(rng: random.Random, s: int, t: int, terms: int = 3) -> BrauerMorphism:
    out = BrauerMorphism.zero(s, t)
    for _ in range(terms):
        out = out + BrauerMorphism.from_diagram(random_diagram(rng, s, t), random_poly(rng))
    return out


def random_enhanced(rng: random.Random, m: int, s: int, t: int, terms: int = 3) -> EnhancedMorphism:
    basis = spanning_set(m, s, t)
    out = EnhancedMorphism(m, s, t)
    if not basis:
        return out
    for _ in range(terms):
        d = rng.choice(basis)
        out = out + EnhancedMorphism.from_diagram(d, m, Fraction(rng.randint(-4, 4), rng.randint(1, 2)))
    return out


def random_vector(rng: random.Random, m: int, r: int) -> Tensor:
    data = np.array([Fraction(rng.randint(-3, 3)) for _ in range(m ** r)], dtype=object)
    return Tensor(m, 0, r, data.reshape((m,) * r) if r else data[0])


def random_permutation(rng: random.Random, r: int) -> tuple[int, ...]:
    p = list(range(r))
    rng.shuffle(p)
    return tuple(p)


# -------------------------------------------------------------- expressions

MAX_POINTS = 6


def _atom(rng: random.Random, m: int) -> E.Expr:
    kind = rng.choice("IUAXXDD")
    return E.atom(kind, m)


def random_expr(rng: random.Random, m: int, nodes: int = 6) -> E.Expr:
    """A well-typed expression with at most ``nodes`` nodes and at most
    ``MAX_POINTS`` boundary points on every subexpression."""
    for _ in range(200):
        e = _random_expr(rng, m, nodes)
        if e is not None:
            return e
    return E.atom("D", m)


def _fits(e: E.Expr) -> bool:
    return e.source + e.target <= MAX_POINTS


def _random_expr(rng, m, nodes):
    if nodes <= 1:
        return _atom(rng, m)
    op = "dual" if nodes == 2 else rng.choice(("tensor", "compose", "compose", "dual"))
    if op == "dual":
        inner = _random_expr(rng, m, nodes - 1)
        return None if inner is None else E.dual(inner)
    k = rng.randint(1, nodes - 2)
    left = _random_expr(rng, m, k)
    if left is None:
        return None
    if op == "tensor":
        right = _random_expr(rng, m, nodes - 1 - k)
        if right is None:
            return None
        e = E.tensor(left, right)
        return e if _fits(e) else None
    for _ in range(40):
        outer = _random_expr(rng, m, nodes - 1 - k)
        if outer is not None and outer.source == left.target:
            e = E.compose(left, outer)
            return e if _fits(e) else None
    return None


def all_brauer_diagrams(s: int, t: int) -> list[BrauerDiagram]:
    return [BrauerDiagram.from_pairs(s, t, p) for p in all_matchings(list(range(s + t)))]


def brauer_of(d: BrauerDiagram) -> BrauerMorphism:
    return BrauerMorphism.from_diagram(d)


__all__ = [name for name in dir() if not name.startswith("_")] + ["brauer"]
