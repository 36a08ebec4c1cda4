"""Exact rationals and univariate polynomials in the loop parameter delta.

Rationals are plain :class:`fractions.Fraction` values.  A
:class:`DeltaPolynomial` is a dense, trimmed coefficient tuple in ascending
powers of delta.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Iterable, Union

Rational = Fraction
Number = Union[int, Fraction]


def rational_to_str(x: Number) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def rational_from_str(text: str) -> Fraction:
    if not isinstance(text, str):
        raise ValueError(f"expected a rational string, got {text!r}")
    return Fraction(text.strip())


def _trim(coeffs: Iterable[Number]) -> tuple[Fraction, ...]:
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


class DeltaPolynomial:
    """Polynomial in delta with exact rational coefficients.

    ``coeffs[k]`` is the coefficient of ``delta**k``; the zero polynomial has
    no coefficients at all.
    """

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable[Number] = ()):
        self.coeffs = _trim(coeffs)
        self._hash = None

    @classmethod
    def constant(cls, c: Number) -> DeltaPolynomial:
        return cls((c,))

    @classmethod
    def delta(cls) -> DeltaPolynomial:
        return cls((0, 1))

    @classmethod
    def coerce(cls, x) -> DeltaPolynomial:
        if isinstance(x, DeltaPolynomial):
            return x
        if isinstance(x, (int, Fraction)):
            return cls((x,))
        raise TypeError(f"cannot coerce {type(x).__name__} to DeltaPolynomial")

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = DeltaPolynomial.constant(other)
        if not isinstance(other, DeltaPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("DeltaPolynomial", self.coeffs))
        return self._hash

    def __add__(self, other):
        try:
            other = DeltaPolynomial.coerce(other)
        except TypeError:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return DeltaPolynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return DeltaPolynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        try:
            other = DeltaPolynomial.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return DeltaPolynomial.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return DeltaPolynomial()
            return DeltaPolynomial(c * other for c in self.coeffs)
        if not isinstance(other, DeltaPolynomial):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return DeltaPolynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return DeltaPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = DeltaPolynomial.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __call__(self, at: Number) -> Fraction:
        return evaluate(self, at)

    def monic(self) -> DeltaPolynomial:
        if not self.coeffs:
            return self
        lead = self.coeffs[-1]
        return DeltaPolynomial(c / lead for c in self.coeffs)

    def divmod(self, divisor: DeltaPolynomial) -> tuple[DeltaPolynomial, DeltaPolynomial]:
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = divisor.degree
        lead = divisor.coeffs[-1]
        quot = [Fraction(0)] * max(len(rem) - dq, 0)
        for k in range(len(rem) - dq - 1, -1, -1):
            c = rem[k + dq] / lead
            quot[k] = c
            if c:
                for i, d in enumerate(divisor.coeffs):
                    rem[k + i] -= c * d
        return DeltaPolynomial(quot), DeltaPolynomial(rem[:dq] if dq > 0 else ())

    def to_json(self) -> list[str]:
        return [rational_to_str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data) -> DeltaPolynomial:
        if isinstance(data, (int, str)):
            data = [data]
        if not isinstance(data, list):
            raise ValueError("polynomial must be a list of rational strings")
        return cls(rational_from_str(str(c)) for c in data)

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if k == 0:
                body = rational_to_str(a)
            else:
                mono = "δ" if k == 1 else f"δ^{k}"
                body = mono if a == 1 else f"{rational_to_str(a)}*{mono}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"DeltaPolynomial({str(self)!r})"


ZERO = DeltaPolynomial()
ONE = DeltaPolynomial.constant(1)
DELTA = DeltaPolynomial.delta()


def poly_arith(a: DeltaPolynomial, b: DeltaPolynomial, op: str) -> DeltaPolynomial:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown polynomial operation {op!r}")


def evaluate(p: DeltaPolynomial, at: Number) -> Fraction:
    """Horner evaluation at a rational point."""
    at = Fraction(at)
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * at + c
    return acc


def falling_factorial(k: int) -> DeltaPolynomial:
    """``delta (delta - 1) ... (delta - (k - 1))``; 1 for ``k = 0``."""
    if k < 0:
        raise ValueError("k must be non-negative")
    out = ONE
    for j in range(k):
        out = out * DeltaPolynomial((-j, 1))
    return out


def f_m_polynomial(m: int) -> DeltaPolynomial:
    """``(delta - (m-1)) ... (delta - 1) - (m-1)!``, the coefficient relating
    the (m+1)- and m-strand antisymmetrizers."""
    if m < 2:
        raise ValueError("m must be at least 2")
    prod = ONE
    for j in range(1, m):
        prod = prod * DeltaPolynomial((-j, 1))
    return prod - factorial(m - 1)


def poly_gcd(a: DeltaPolynomial, b: DeltaPolynomial) -> DeltaPolynomial:
    # monic normalisation at every Euclidean step keeps coefficients small
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    a, b = a.monic(), b.monic()
    while not b.is_zero():
        _, r = a.divmod(b)
        a, b = b, r.monic()
    return a.monic()
