"""The tensor functor: diagrams evaluated as exact linear maps on tensor powers
of Q^m with its standard orthonormal basis.

A :class:`Tensor` for a map ``s -> t`` stores a numpy object array with
``t + s`` axes of length ``m``: the target indices first, then the source
indices.  Entries are Python ints or Fractions, never floats.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction
from math import factorial, prod

import numpy as np

from . import brauer
from .brauer import ArityError, BrauerDiagram, BrauerMorphism, CapExceeded
from .enhanced import EnhancedDiagram, EnhancedMorphism
from .expr import Atom, Compose, Dual, Expr, Power, Tensor as TensorExpr
from .kernels import permutation_sign
from .scalars import rational_to_str

DEFAULT_ENTRY_GUARD = 10 ** 7


class MemoryGuardError(MemoryError):
    pass


def _guard(m: int, axes: int, limit: int | None = None):
    limit = DEFAULT_ENTRY_GUARD if limit is None else limit
    if m ** axes > limit:
        raise MemoryGuardError(f"{m}^{axes} = {m ** axes} entries exceeds the guard of {limit}")


def _obj(x) -> np.ndarray:
    return np.asarray(x, dtype=object)


class Tensor:
    __slots__ = ("m", "source", "target", "entries")

    def __init__(self, m: int, source: int, target: int, entries):
        entries = _obj(entries)
        if entries.shape != (m,) * (source + target):
            raise ValueError(f"entries shape {entries.shape} does not match m={m}, {source}->{target}")
        self.m = m
        self.source = source
        self.target = target
        self.entries = entries

    @classmethod
    def zeros(cls, m: int, source: int, target: int) -> Tensor:
        _guard(m, source + target)
        return cls(m, source, target, np.zeros((m,) * (source + target), dtype=object))

    @classmethod
    def vector(cls, m: int, entries) -> Tensor:
        entries = _obj(entries)
        return cls(m, 0, entries.ndim, entries)

    def is_zero(self) -> bool:
        return not any(x != 0 for x in self.entries.flat)

    def __eq__(self, other):
        if not isinstance(other, Tensor):
            return NotImplemented
        if (self.m, self.source, self.target) != (other.m, other.source, other.target):
            return False
        return all(a == b for a, b in zip(self.entries.flat, other.entries.flat))

    __hash__ = None

    def _check(self, other):
        if (self.m, self.source, self.target) != (other.m, other.source, other.target):
            raise ArityError("tensor shapes differ")

    def __add__(self, other):
        self._check(other)
        return Tensor(self.m, self.source, self.target, self.entries + other.entries)

    def __sub__(self, other):
        self._check(other)
        return Tensor(self.m, self.source, self.target, self.entries - other.entries)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c) -> Tensor:
        return Tensor(self.m, self.source, self.target, self.entries * Fraction(c))

    def compose(self, other: Tensor) -> Tensor:
        """``other o self``: apply ``self`` first."""
        return compose(self, other)

    def flat(self) -> list:
        return list(self.entries.flat)

    def scalar(self):
        if self.source or self.target:
            raise ArityError("scalar() needs a 0->0 tensor")
        return self.entries[()]

    def to_json(self) -> dict:
        entries = []
        for idx in itertools.product(range(self.m), repeat=self.source + self.target):
            v = self.entries[idx]
            if v != 0:
                entries.append(["".join(str(i + 1) for i in idx), rational_to_str(v)])
        return {"m": self.m, "source": self.source, "target": self.target, "entries": entries}

    def __repr__(self):
        nz = sum(1 for x in self.entries.flat if x != 0)
        return f"Tensor(m={self.m}, {self.source}->{self.target}, {nz} nonzero)"


def compose(f: Tensor, g: Tensor) -> Tensor:
    """``g o f``."""
    if f.m != g.m or f.target != g.source:
        raise ArityError(f"cannot compose {f.source}->{f.target} then {g.source}->{g.target}")
    _guard(f.m, g.target + f.source)
    axes_g = list(range(g.target, g.target + g.source))
    axes_f = list(range(f.target))
    out = np.tensordot(g.entries, f.entries, axes=(axes_g, axes_f))
    return Tensor(f.m, f.source, g.target, _obj(out))


def tensor(f: Tensor, g: Tensor) -> Tensor:
    if f.m != g.m:
        raise ArityError("m mismatch")
    _guard(f.m, f.source + f.target + g.source + g.target)
    outer = _obj(np.multiply.outer(f.entries, g.entries))
    t1, s1, t2, s2 = f.target, f.source, g.target, g.source
    order = (list(range(t1)) + list(range(t1 + s1, t1 + s1 + t2))
             + list(range(t1, t1 + s1)) + list(range(t1 + s1 + t2, t1 + s1 + t2 + s2)))
    return Tensor(f.m, s1 + s2, t1 + t2, outer.transpose(order) if order else outer)


def dual(f: Tensor) -> Tensor:
    """Transpose with respect to the standard form."""
    t, s = f.target, f.source
    order = list(range(t, t + s)) + list(range(t))
    return Tensor(f.m, t, s, f.entries.transpose(order) if order else f.entries)


def identity(m: int, n: int = 1) -> Tensor:
    out = Tensor(m, 0, 0, _obj(1))
    one = Tensor(m, 1, 1, _obj([[int(i == j) for j in range(m)] for i in range(m)]))
    for _ in range(n):
        out = tensor(out, one)
    return out


def levi_civita(m: int) -> np.ndarray:
    out = np.zeros((m,) * m, dtype=object)
    for perm in itertools.permutations(range(m)):
        out[perm] = permutation_sign(perm)
    return out


def lambda_tensor(m: int) -> Tensor:
    """``e_1 ^ ... ^ e_m``: entry ``sign(sigma)/m!`` at each permutation."""
    return Tensor(m, 0, m, levi_civita(m) * Fraction(1, factorial(m)))


def eval_generator(kind: str, m: int) -> Tensor:
    """Image of a generator.  The vertex ``D`` goes to ``m! * Lambda`` (the
    Levi-Civita tensor), the normalisation under which ``D o D^*`` is the
    antisymmetrizer and ``D^* o D = m!``."""
    if m < 2:
        raise ValueError("m must be at least 2")
    delta = _obj([[int(i == j) for j in range(m)] for i in range(m)])
    if kind == "I":
        return Tensor(m, 1, 1, delta)
    if kind == "U":
        return Tensor(m, 0, 2, delta)
    if kind == "A":
        return Tensor(m, 2, 0, delta)
    if kind == "X":
        x = np.zeros((m,) * 4, dtype=object)
        for i in range(m):
            for j in range(m):
                x[j, i, i, j] = 1
        return Tensor(m, 2, 2, x)
    if kind == "D":
        return Tensor(m, 0, m, levi_civita(m))
    raise ValueError(f"unknown generator {kind!r}")


def _point_axis(p: int, source: int, target: int) -> int:
    return target + p if p < source else p - source


def diagram_entries(d, m: int):
    """Nonzero ``(index, value)`` entries of one Brauer or normal-form
    enhanced diagram; values are +-1."""
    s, t = d.source, d.target
    pairs = d.pairs
    legs = getattr(d, "delta_legs", None) or ()
    pair_axes = [(_point_axis(a, s, t), _point_axis(b, s, t)) for a, b in pairs]
    leg_axes = [_point_axis(p, s, t) for p in legs]
    idx = [0] * (s + t)
    leg_choices = levi_perms(m) if legs else [((), 1)]
    for values in itertools.product(range(m), repeat=len(pairs)):
        for (a, b), v in zip(pair_axes, values):
            idx[a] = v
            idx[b] = v
        for perm, sign in leg_choices:
            for ax, v in zip(leg_axes, perm):
                idx[ax] = v
            yield tuple(idx), sign


def eval_diagram(d, m: int) -> np.ndarray:
    _guard(m, d.source + d.target)
    out = np.zeros((m,) * (d.source + d.target), dtype=object)
    for idx, v in diagram_entries(d, m):
        out[idx] += v
    return out


_LEVI_CACHE: dict = {}


def levi_perms(m: int):
    if m not in _LEVI_CACHE:
        _LEVI_CACHE[m] = [(perm, permutation_sign(perm)) for perm in itertools.permutations(range(m))]
    return _LEVI_CACHE[m]


def _exact(c):
    c = Fraction(c)
    return c.numerator if c.denominator == 1 else c


def eval_morphism(f, m: int | None = None) -> Tensor:
    """Linear extension of diagram evaluation.  Brauer coefficients are
    specialized at ``delta = m``."""
    if isinstance(f, EnhancedMorphism):
        if m is not None and m != f.m:
            raise ValueError(f"morphism has m={f.m}, asked for m={m}")
        m = f.m
        items = list(f)
    elif isinstance(f, BrauerMorphism):
        if m is None:
            raise ValueError("m is required for Brauer morphisms")
        items = list(f.specialize(m).items())
    elif isinstance(f, (BrauerDiagram, EnhancedDiagram)):
        items = [(f, 1)]
    else:
        raise TypeError(f"cannot evaluate {type(f).__name__}")
    _guard(m, f.source + f.target)
    acc: dict = {}
    for d, c in items:
        c = _exact(c)
        for idx, v in diagram_entries(d, m):
            acc[idx] = acc.get(idx, 0) + c * v
    out = np.zeros((m,) * (f.source + f.target), dtype=object)
    for idx, v in acc.items():
        out[idx] = _exact(v)
    return Tensor(m, f.source, f.target, out)


def eval_expression(e: Expr, m: int) -> Tensor:
    """Evaluate an expression tree by composing generator tensors; this path
    never touches the rewrite engine."""
    if isinstance(e, Atom):
        if e.kind == "S":
            return eval_morphism(brauer.antisymmetrizer(e.param[0]), m)
        if e.kind == "P":
            return eval_morphism(brauer.permutation_morphism(e.param), m)
        return eval_generator(e.kind, m)
    if isinstance(e, Compose):
        return compose(eval_expression(e.inner, m), eval_expression(e.outer, m))
    if isinstance(e, TensorExpr):
        return tensor(eval_expression(e.left, m), eval_expression(e.right, m))
    if isinstance(e, Dual):
        return dual(eval_expression(e.inner, m))
    if isinstance(e, Power):
        base = eval_expression(e.base, m)
        out = Tensor(m, 0, 0, _obj(1))
        for _ in range(e.k):
            out = tensor(out, base)
        return out
    raise TypeError(e)


# ----------------------------------------------------------- forms and maps

def bilinear_form(x: Tensor, y: Tensor):
    if (x.m, x.source, x.target) != (y.m, y.source, y.target):
        raise ArityError("bilinear_form needs tensors of the same shape")
    total = 0
    for a, b in zip(x.entries.flat, y.entries.flat):
        if a and b:
            total += a * b
    return Fraction(total)


def is_harmonic(x: Tensor) -> bool:
    """Every contraction of two slots vanishes (equivalent to contracting the
    first two slots after every permutation)."""
    if x.source:
        raise ArityError("harmonicity is defined for 0 -> r tensors")
    r = x.target
    if r < 2:
        raise ValueError("harmonicity needs at least two slots")
    for i, j in itertools.combinations(range(r), 2):
        c = np.trace(x.entries, axis1=i, axis2=j)
        if any(v != 0 for v in _obj(c).flat):
            return False
    return True


def contract_slots(x: Tensor, i: int, j: int) -> Tensor:
    c = _obj(np.trace(x.entries, axis1=i, axis2=j))
    return Tensor(x.m, 0, x.target - 2, c)


def pi_lambda(x: Tensor) -> Tensor:
    """Orthogonal projection onto ``Lambda`` in the first ``m`` slots,
    identity on the rest."""
    m = x.m
    if x.source or x.target < m:
        raise ArityError(f"pi_lambda needs a 0 -> r tensor with r >= m = {m}")
    lam = lambda_tensor(m)
    norm = bilinear_form(lam, lam)
    coeffs = _obj(np.tensordot(lam.entries, x.entries, axes=(list(range(m)), list(range(m)))))
    rest = Tensor(m, 0, x.target - m, coeffs * (1 / norm))
    return tensor(lam, rest)


def project_lambda_coefficients(x: Tensor) -> Tensor:
    """The ``V^{(x) r}`` factor ``c`` with ``pi_lambda(x) = Lambda (x) c``."""
    m = x.m
    lam = lambda_tensor(m)
    norm = bilinear_form(lam, lam)
    coeffs = _obj(np.tensordot(lam.entries, x.entries, axes=(list(range(m)), list(range(m)))))
    return Tensor(m, 0, x.target - m, coeffs * (1 / norm))


def permute_slots(x: Tensor, sigma) -> Tensor:
    """Image of ``x`` under the permutation diagram taking slot ``p`` to
    slot ``sigma[p]``."""
    if x.source:
        raise ArityError("permute_slots needs a 0 -> r tensor")
    inv = [0] * len(sigma)
    for p, q in enumerate(sigma):
        inv[q] = p
    return Tensor(x.m, 0, x.target, x.entries.transpose(inv) if inv else x.entries)


def sym_span(seed: Tensor, cap: int = 8) -> list[Tensor]:
    """Distinct images ``sigma . seed`` for ``sigma`` in ``Sym_r``."""
    r = seed.target
    if r > cap:
        raise CapExceeded(f"orbit of {r} slots needs {factorial(r)} permutations; cap is r <= {cap}")
    seen = set()
    out = []
    for sigma in itertools.permutations(range(r)):
        y = permute_slots(seed, sigma)
        key = tuple(y.entries.flat)
        if key not in seen:
            seen.add(key)
            out.append(y)
    return out


def cup_tensor(m: int) -> Tensor:
    return eval_generator("U", m)


# --------------------------------------------------------- group actions

PYTHAGOREAN = [(3, 4, 5), (5, 12, 13), (8, 15, 17), (7, 24, 25), (20, 21, 29)]


def givens(m: int, a: int, b: int, c: Fraction, s: Fraction) -> np.ndarray:
    g = np.zeros((m, m), dtype=object)
    for i in range(m):
        g[i, i] = Fraction(1)
    g[a, a] = c
    g[b, b] = c
    g[a, b] = -s
    g[b, a] = s
    return g


def random_rational_orthogonal(m: int, rng: random.Random, steps: int = 3, allow_reflection: bool = True) -> np.ndarray:
    """A product of rational Givens rotations, optionally times a reflection."""
    g = givens(m, 0, 1, Fraction(1), Fraction(0))
    for _ in range(steps):
        a, b = rng.sample(range(m), 2)
        p, q, h = rng.choice(PYTHAGOREAN)
        if rng.random() < 0.5:
            p, q = q, p
        sign = rng.choice((1, -1))
        g = _obj(np.dot(givens(m, a, b, Fraction(p, h), Fraction(sign * q, h)), g))
    if allow_reflection and rng.random() < 0.5:
        refl = givens(m, 0, 1, Fraction(1), Fraction(0))
        refl[0, 0] = Fraction(-1)
        g = _obj(np.dot(refl, g))
    return g


def det(g: np.ndarray) -> Fraction:
    m = g.shape[0]
    total = Fraction(0)
    for perm in itertools.permutations(range(m)):
        total += permutation_sign(perm) * prod(g[i, perm[i]] for i in range(m))
    return total


def act(g: np.ndarray, x: Tensor) -> Tensor:
    """``g^{(x) r}`` applied to a ``0 -> r`` tensor."""
    out = x.entries
    for axis in range(x.target):
        out = _obj(np.tensordot(g, out, axes=([1], [axis])))
        out = np.moveaxis(out, 0, axis)
    return Tensor(x.m, 0, x.target, _obj(out))


def tensor_power(x: Tensor, k: int) -> Tensor:
    out = Tensor(x.m, 0, 0, _obj(1))
    for _ in range(k):
        out = tensor(out, x)
    return out


def as_vector(x: Tensor) -> list:
    return list(x.entries.flat)
