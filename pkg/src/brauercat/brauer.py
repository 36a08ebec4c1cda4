"""Brauer diagrams and formal linear combinations of them over delta-polynomials.

Point convention used everywhere in the package: a diagram ``i -> j`` has
bottom points ``0 .. i-1`` and top points ``i .. i+j-1``, both numbered left
to right.  A diagram is stored as its partner tuple, so ``partner[p]`` is the
point joined to ``p``.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import factorial
from typing import Iterable, Iterator, Mapping

from .kernels import compose_matchings, permutation_sign
from .scalars import DELTA, ONE, ZERO, DeltaPolynomial

DEFAULT_ANTISYM_CAP = 8


class ArityError(ValueError):
    """Raised when the arities of morphisms do not fit together."""


class CapExceeded(ValueError):
    """Raised when an expansion would exceed its configured size bound."""


def antisym_cap() -> int:
    return int(os.environ.get("BRAUER_ANTISYM_CAP", DEFAULT_ANTISYM_CAP))


def partner_from_pairs(n: int, pairs: Iterable[tuple[int, int]]) -> tuple[int, ...]:
    partner = [-1] * n
    for a, b in pairs:
        if not (0 <= a < n and 0 <= b < n) or a == b:
            raise ValueError(f"bad pair ({a}, {b}) on {n} points")
        if partner[a] >= 0 or partner[b] >= 0:
            raise ValueError(f"point used twice in pair ({a}, {b})")
        partner[a] = b
        partner[b] = a
    if -1 in partner:
        raise ValueError(f"point {partner.index(-1)} is unmatched")
    return tuple(partner)


def pairs_from_partner(partner: tuple[int, ...]) -> tuple[tuple[int, int], ...]:
    return tuple((p, q) for p, q in enumerate(partner) if p < q)


def all_matchings(points: list[int]) -> Iterator[list[tuple[int, int]]]:
    """All perfect matchings of ``points`` in lexicographic order."""
    if not points:
        yield []
        return
    first, rest = points[0], points[1:]
    for i, other in enumerate(rest):
        for sub in all_matchings(rest[:i] + rest[i + 1:]):
            yield [(first, other)] + sub


def double_factorial(n: int) -> int:
    out = 1
    while n > 1:
        out *= n
        n -= 2
    return out


@dataclass(frozen=True)
class BrauerDiagram:
    source: int
    target: int
    partner: tuple[int, ...]

    def __post_init__(self):
        n = self.source + self.target
        if len(self.partner) != n:
            raise ValueError(f"partner tuple has {len(self.partner)} entries, expected {n}")
        for p, q in enumerate(self.partner):
            if not 0 <= q < n or q == p or self.partner[q] != p:
                raise ValueError(f"not a perfect matching: {self.partner}")

    @classmethod
    def from_pairs(cls, source: int, target: int, pairs) -> BrauerDiagram:
        return cls(source, target, partner_from_pairs(source + target, pairs))

    @cached_property
    def pairs(self) -> tuple[tuple[int, int], ...]:
        return pairs_from_partner(self.partner)

    def sort_key(self):
        return self.pairs

    def __repr__(self):
        return f"BrauerDiagram({self.source}->{self.target}, {list(self.pairs)})"


def enumerate_diagrams(source: int, target: int) -> list[BrauerDiagram]:
    n = source + target
    if n % 2:
        return []
    return [BrauerDiagram.from_pairs(source, target, m) for m in all_matchings(list(range(n)))]


def compose_diagrams(f: BrauerDiagram, g: BrauerDiagram) -> tuple[BrauerDiagram, int]:
    """``g o f`` as a diagram plus the number of closed loops removed."""
    if f.target != g.source:
        raise ArityError(f"cannot compose {f.source}->{f.target} with {g.source}->{g.target}")
    partner, loops = compose_matchings(f.partner, f.source, f.target, g.partner, g.target)
    return BrauerDiagram(f.source, g.target, partner), loops


def tensor_diagrams(f: BrauerDiagram, g: BrauerDiagram) -> BrauerDiagram:
    s1, t1, s2, t2 = f.source, f.target, g.source, g.target
    # new positions: f bottom, g bottom, f top, g top
    fmap = [p if p < s1 else p + s2 for p in range(s1 + t1)]
    gmap = [s1 + p if p < s2 else s1 + t1 + p for p in range(s2 + t2)]
    partner = [0] * (s1 + s2 + t1 + t2)
    for p, q in enumerate(f.partner):
        partner[fmap[p]] = fmap[q]
    for p, q in enumerate(g.partner):
        partner[gmap[p]] = gmap[q]
    return BrauerDiagram(s1 + s2, t1 + t2, tuple(partner))


def reflect_point(p: int, source: int, target: int) -> int:
    """Position of point ``p`` of a ``source -> target`` diagram after a
    reflection in a horizontal line (result is ``target -> source``)."""
    return target + p if p < source else p - source


def dual_diagram(d: BrauerDiagram) -> BrauerDiagram:
    s, t = d.source, d.target
    partner = [0] * (s + t)
    for p, q in enumerate(d.partner):
        partner[reflect_point(p, s, t)] = reflect_point(q, s, t)
    return BrauerDiagram(t, s, tuple(partner))


def _collect(source: int, target: int, items) -> dict:
    terms: dict = {}
    for d, c in items:
        if d in terms:
            terms[d] = terms[d] + c
        else:
            terms[d] = c
    return {d: c for d, c in terms.items() if c}


class BrauerMorphism:
    """A finite sum of Brauer diagrams with delta-polynomial coefficients."""

    __slots__ = ("source", "target", "terms")

    def __init__(self, source: int, target: int, terms: Mapping[BrauerDiagram, DeltaPolynomial] | None = None):
        self.source = source
        self.target = target
        clean = {}
        for d, c in (terms or {}).items():
            if d.source != source or d.target != target:
                raise ArityError(f"diagram {d} does not fit {source}->{target}")
            c = DeltaPolynomial.coerce(c)
            if c:
                clean[d] = c
        self.terms = dict(sorted(clean.items(), key=lambda kv: kv[0].sort_key()))

    @classmethod
    def from_diagram(cls, d: BrauerDiagram, coeff=ONE) -> BrauerMorphism:
        return cls(d.source, d.target, {d: coeff})

    @classmethod
    def zero(cls, source: int, target: int) -> BrauerMorphism:
        return cls(source, target, {})

    @classmethod
    def identity(cls, n: int) -> BrauerMorphism:
        return cls.from_diagram(BrauerDiagram(n, n, tuple(list(range(n, 2 * n)) + list(range(n)))))

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms.items())

    def __eq__(self, other):
        if not isinstance(other, BrauerMorphism):
            return NotImplemented
        return (self.source, self.target, self.terms) == (other.source, other.target, other.terms)

    def __hash__(self):
        return hash((self.source, self.target, tuple(self.terms.items())))

    def _check_same(self, other):
        if (self.source, self.target) != (other.source, other.target):
            raise ArityError(f"{self.source}->{self.target} vs {other.source}->{other.target}")

    def __add__(self, other):
        if not isinstance(other, BrauerMorphism):
            return NotImplemented
        self._check_same(other)
        return BrauerMorphism(self.source, self.target,
                              _collect(self.source, self.target, itertools.chain(self, other)))

    def __neg__(self):
        return BrauerMorphism(self.source, self.target, {d: -c for d, c in self})

    def __sub__(self, other):
        if not isinstance(other, BrauerMorphism):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> BrauerMorphism:
        c = DeltaPolynomial.coerce(c)
        return BrauerMorphism(self.source, self.target, {d: v * c for d, v in self})

    def __mul__(self, c):
        if isinstance(c, (int, Fraction, DeltaPolynomial)):
            return self.scale(c)
        return NotImplemented

    __rmul__ = __mul__

    def __matmul__(self, other):
        # self o other: apply other first
        if not isinstance(other, BrauerMorphism):
            return NotImplemented
        return compose(other, self)

    def specialize(self, at) -> dict[BrauerDiagram, Fraction]:
        """Coefficients evaluated at ``delta = at``, zeros dropped."""
        out = {}
        for d, c in self:
            v = c(at)
            if v:
                out[d] = v
        return out

    def scalar(self) -> DeltaPolynomial:
        """The value of a ``0 -> 0`` morphism."""
        if self.source or self.target:
            raise ArityError("scalar() needs a 0->0 morphism")
        return next(iter(self.terms.values()), ZERO)

    def __repr__(self):
        if not self.terms:
            return f"BrauerMorphism({self.source}->{self.target}, 0)"
        body = " + ".join(f"({c})*{list(d.pairs)}" for d, c in self)
        return f"BrauerMorphism({self.source}->{self.target}, {body})"


# ---------------------------------------------------------------- generators

def generator(kind: str) -> BrauerMorphism:
    if kind == "I":
        return BrauerMorphism.from_diagram(BrauerDiagram(1, 1, (1, 0)))
    if kind == "U":
        return BrauerMorphism.from_diagram(BrauerDiagram(0, 2, (1, 0)))
    if kind == "A":
        return BrauerMorphism.from_diagram(BrauerDiagram(2, 0, (1, 0)))
    if kind == "X":
        return BrauerMorphism.from_diagram(BrauerDiagram(2, 2, (3, 2, 1, 0)))
    raise ValueError(f"unknown Brauer generator {kind!r}")


def empty() -> BrauerMorphism:
    """The unit ``0 -> 0`` diagram with coefficient 1."""
    return BrauerMorphism.from_diagram(BrauerDiagram(0, 0, ()))


# ---------------------------------------------------------------- operations

def compose(f: BrauerMorphism, g: BrauerMorphism) -> BrauerMorphism:
    """``g o f``; every closed loop contributes a factor of delta."""
    if f.target != g.source:
        raise ArityError(f"cannot compose {f.source}->{f.target} then {g.source}->{g.target}")
    items = []
    delta_powers: dict[int, DeltaPolynomial] = {0: ONE}
    for df, cf in f:
        for dg, cg in g:
            d, loops = compose_diagrams(df, dg)
            if loops not in delta_powers:
                delta_powers[loops] = DELTA ** loops
            items.append((d, cf * cg * delta_powers[loops]))
    return BrauerMorphism(f.source, g.target, _collect(f.source, g.target, items))


def compose_all(*morphisms: BrauerMorphism) -> BrauerMorphism:
    """Compose in application order: ``compose_all(f, g, h) = h o g o f``."""
    out = morphisms[0]
    for nxt in morphisms[1:]:
        out = compose(out, nxt)
    return out


def tensor(f: BrauerMorphism, g: BrauerMorphism) -> BrauerMorphism:
    """Horizontal juxtaposition, ``f`` on the left."""
    items = [(tensor_diagrams(df, dg), cf * cg) for df, cf in f for dg, cg in g]
    s, t = f.source + g.source, f.target + g.target
    return BrauerMorphism(s, t, _collect(s, t, items))


def tensor_all(*morphisms: BrauerMorphism) -> BrauerMorphism:
    if not morphisms:
        return empty()
    out = morphisms[0]
    for nxt in morphisms[1:]:
        out = tensor(out, nxt)
    return out


def tensor_power(f: BrauerMorphism, k: int) -> BrauerMorphism:
    return tensor_all(*([f] * k)) if k else empty()


def identity(n: int) -> BrauerMorphism:
    return BrauerMorphism.identity(n)


def dual(f: BrauerMorphism) -> BrauerMorphism:
    return BrauerMorphism(f.target, f.source, {dual_diagram(d): c for d, c in f})


def permutation_diagram(sigma) -> BrauerDiagram:
    r = len(sigma)
    if sorted(sigma) != list(range(r)):
        raise ValueError(f"not a permutation of 0..{r - 1}: {sigma}")
    return BrauerDiagram.from_pairs(r, r, [(p, r + sigma[p]) for p in range(r)])


def permutation_morphism(sigma) -> BrauerMorphism:
    """Bottom point ``p`` joined to top point ``sigma[p]``; no sign applied."""
    return BrauerMorphism.from_diagram(permutation_diagram(tuple(sigma)))


def antisymmetrizer(r: int, cap: int | None = None) -> BrauerMorphism:
    """Signed sum of all ``r!`` permutation diagrams."""
    cap = antisym_cap() if cap is None else cap
    if r > cap:
        raise CapExceeded(f"antisymmetrizer of {r} strands has {factorial(r)} terms; cap is r <= {cap}")
    terms = {}
    for sigma in itertools.permutations(range(r)):
        terms[permutation_diagram(sigma)] = DeltaPolynomial.constant(permutation_sign(sigma))
    return BrauerMorphism(r, r, terms)


def nested_cups(q: int) -> BrauerMorphism:
    """``0 -> 2q`` morphism joining point ``j`` to ``2q-1-j``, built from U and I."""
    cup = generator("U")
    out = cup
    for k in range(1, q):
        out = compose(out, tensor_all(identity(k), cup, identity(k)))
    return out


def nested_caps(q: int) -> BrauerMorphism:
    return dual(nested_cups(q))


def rotate_up(f: BrauerMorphism, q: int) -> BrauerMorphism:
    """Bend the rightmost ``q`` bottom points up to the right of the top:
    ``(p+q) -> r`` becomes ``p -> (r+q)``, via ``(f (x) I^q) o (I^p (x) cups)``."""
    if q < 0 or q > f.source:
        raise ArityError(f"cannot bend {q} bottom points of a {f.source}->{f.target} morphism")
    if q == 0:
        return f
    p = f.source - q
    bend = tensor(identity(p), nested_cups(q))
    return compose(bend, tensor(f, identity(q)))


def rotate_down(f: BrauerMorphism, q: int) -> BrauerMorphism:
    """Inverse of :func:`rotate_up`: ``p -> (r+q)`` becomes ``(p+q) -> r``."""
    if q < 0 or q > f.target:
        raise ArityError(f"cannot bend {q} top points of a {f.source}->{f.target} morphism")
    if q == 0:
        return f
    r = f.target - q
    return compose(tensor(f, identity(q)), tensor(identity(r), nested_caps(q)))


def partial_trace_last(f: BrauerMorphism) -> BrauerMorphism:
    """Close the rightmost strand of an ``r -> r`` morphism around the right."""
    r = f.source
    if f.target != r or r < 1:
        raise ArityError("partial trace needs an r->r morphism with r >= 1")
    cup = tensor(identity(r - 1), generator("U"))
    cap = tensor(identity(r - 1), generator("A"))
    return compose_all(cup, tensor(f, identity(1)), cap)


def full_closure(f: BrauerMorphism) -> DeltaPolynomial:
    """Trace of an ``r -> r`` morphism, closing every strand."""
    out = f
    while out.source:
        out = partial_trace_last(out)
    return out.scalar()


def verify_reduction_lemma(r: int) -> dict:
    """Expand both sides of the two antisymmetrizer reduction identities over
    generic delta.

    ``recursion``: ``S_r = S_{r-1} (x) I - (r-2)!^{-1} (S_{r-1} (x) I) o
    (I^{r-2} (x) X) o (S_{r-1} (x) I)``.
    ``trace``: closing the last strand of ``S_r`` gives
    ``-(r - 1 - delta) S_{r-1}``.
    """
    if r < 2:
        raise ValueError("r must be at least 2")
    sig_r = antisymmetrizer(r)
    prev = tensor(antisymmetrizer(r - 1), identity(1))
    cross = tensor(identity(r - 2), generator("X"))
    correction = compose_all(prev, cross, prev).scale(Fraction(1, factorial(r - 2)))
    recursion_rhs = prev - correction
    trace_lhs = partial_trace_last(sig_r)
    trace_rhs = antisymmetrizer(r - 1).scale(DeltaPolynomial((-(r - 1), 1)))
    return {
        "r": r,
        "recursion": sig_r == recursion_rhs,
        "trace": trace_lhs == trace_rhs,
        "terms": {"S_r": len(sig_r), "recursion_rhs": len(recursion_rhs), "trace_lhs": len(trace_lhs)},
    }
