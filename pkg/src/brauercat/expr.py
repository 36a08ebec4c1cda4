"""Expression trees over the generators I, U, A, X, D and the text grammar
used by the command line.

Grammar (``.`` and ``*`` are ASCII spellings of ``∘`` and ``⊗``)::

    compose  := tensor (("∘" | ".") tensor)*
    tensor   := postfix (("⊗" | "*") postfix)*
    postfix  := primary ("^{" INT "}" | "^*" | "^{*}")*
    primary  := "I" | "U" | "A" | "X" | "D" | "S{" INT "}" | "P{" perm "}"
              | "(" compose ")"

``g∘f`` applies ``f`` first.  ``⊗`` binds tighter than ``∘``.  ``^{k}`` is a
tensor power (``^{0}`` is the empty diagram) and ``^*`` the dual.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .brauer import ArityError


class ExpressionSyntaxError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at byte offset {offset}")
        self.offset = offset


class ExpressionArityError(ArityError):
    def __init__(self, message: str, first: str, second: str):
        super().__init__(message)
        self.first = first
        self.second = second


@dataclass(frozen=True)
class Expr:
    source: int
    target: int
    text: str = field(default="", compare=False, repr=False)


@dataclass(frozen=True)
class Atom(Expr):
    kind: str = "I"
    param: tuple = ()


@dataclass(frozen=True)
class Compose(Expr):
    inner: Expr = None  # applied first
    outer: Expr = None


@dataclass(frozen=True)
class Tensor(Expr):
    left: Expr = None
    right: Expr = None


@dataclass(frozen=True)
class Dual(Expr):
    inner: Expr = None


@dataclass(frozen=True)
class Power(Expr):
    base: Expr = None
    k: int = 1


def atom(kind: str, m: int | None = None, param=()) -> Atom:
    if kind == "I":
        s, t = 1, 1
    elif kind == "U":
        s, t = 0, 2
    elif kind == "A":
        s, t = 2, 0
    elif kind == "X":
        s, t = 2, 2
    elif kind == "D":
        if m is None:
            raise ValueError("D needs a value of m")
        s, t = 0, m
    elif kind == "S":
        s = t = param[0]
    elif kind == "P":
        s = t = len(param)
    else:
        raise ValueError(f"unknown atom {kind!r}")
    text = kind
    if kind == "S":
        text = f"S{{{param[0]}}}"
    elif kind == "P":
        text = "P{" + ",".join(map(str, param)) + "}"
    return Atom(s, t, text, kind, tuple(param))


def compose(inner: Expr, outer: Expr) -> Compose:
    """``outer ∘ inner``."""
    if inner.target != outer.source:
        raise ExpressionArityError(
            f"arity mismatch: {outer.text or 'outer'} is {outer.source}->{outer.target} but "
            f"{inner.text or 'inner'} is {inner.source}->{inner.target}",
            outer.text, inner.text)
    text = f"({outer.text}∘{inner.text})" if inner.text and outer.text else ""
    return Compose(inner.source, outer.target, text, inner, outer)


def tensor(left: Expr, right: Expr) -> Tensor:
    text = f"({left.text}⊗{right.text})" if left.text and right.text else ""
    return Tensor(left.source + right.source, left.target + right.target, text, left, right)


def dual(inner: Expr) -> Dual:
    return Dual(inner.target, inner.source, f"{inner.text}^*" if inner.text else "", inner)


def power(base: Expr, k: int) -> Power:
    return Power(base.source * k, base.target * k, f"{base.text}^{{{k}}}" if base.text else "", base, k)


def nodes(e: Expr) -> int:
    if isinstance(e, Atom):
        return 1
    if isinstance(e, Compose):
        return 1 + nodes(e.inner) + nodes(e.outer)
    if isinstance(e, Tensor):
        return 1 + nodes(e.left) + nodes(e.right)
    if isinstance(e, Dual):
        return 1 + nodes(e.inner)
    if isinstance(e, Power):
        return 1 + nodes(e.base)
    raise TypeError(e)


# ------------------------------------------------------------------- parser

_COMPOSE = ("∘", ".")
_TENSOR = ("⊗", "*")


class _Parser:
    def __init__(self, text: str, m: int | None):
        self.text = text
        self.m = m
        self.i = 0

    def offset(self, i=None) -> int:
        i = self.i if i is None else i
        return len(self.text[:i].encode("utf-8"))

    def error(self, message, i=None):
        raise ExpressionSyntaxError(message, self.offset(i))

    def skip(self):
        while self.i < len(self.text) and self.text[self.i].isspace():
            self.i += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.i] if self.i < len(self.text) else ""

    def expect(self, ch: str):
        if self.peek() != ch:
            found = repr(self.peek()) if self.peek() else "end of input"
            self.error(f"expected {ch!r}, found {found}")
        self.i += 1

    def integer(self) -> int:
        self.skip()
        start = self.i
        while self.i < len(self.text) and self.text[self.i].isdigit():
            self.i += 1
        if start == self.i:
            self.error("expected an integer")
        return int(self.text[start:self.i])

    def parse(self) -> Expr:
        e = self.compose()
        if self.peek():
            self.error(f"unexpected {self.peek()!r}")
        return e

    def compose(self) -> Expr:
        parts = [self.tensor()]
        while self.peek() in _COMPOSE and self.peek():
            self.i += 1
            parts.append(self.tensor())
        # a∘b∘c = a∘(b∘c): the rightmost factor is applied first
        out = parts[-1]
        for outer in reversed(parts[:-1]):
            out = compose(out, outer)
        return out

    def tensor(self) -> Expr:
        out = self.postfix()
        while self.peek() in _TENSOR and self.peek():
            self.i += 1
            out = tensor(out, self.postfix())
        return out

    def postfix(self) -> Expr:
        out = self.primary()
        while self.peek() == "^":
            self.i += 1
            if self.peek() == "*":
                self.i += 1
                out = dual(out)
                continue
            self.expect("{")
            if self.peek() == "*":
                self.i += 1
                self.expect("}")
                out = dual(out)
                continue
            k = self.integer()
            self.expect("}")
            out = power(out, k)
        return out

    def primary(self) -> Expr:
        ch = self.peek()
        start = self.i
        if ch == "(":
            self.i += 1
            e = self.compose()
            self.expect(")")
            return e
        if ch in ("I", "U", "A", "X"):
            self.i += 1
            return atom(ch)
        if ch in ("D", "Δ"):
            self.i += 1
            if self.m is None:
                self.error("D needs a value of m", start)
            return atom("D", self.m)
        if ch in ("S", "Σ"):
            self.i += 1
            self.expect("{")
            r = self.integer()
            self.expect("}")
            return atom("S", param=(r,))
        if ch == "P":
            self.i += 1
            self.expect("{")
            self.skip()
            body_start = self.i
            while self.i < len(self.text) and self.text[self.i] != "}":
                self.i += 1
            body = self.text[body_start:self.i].replace(" ", "")
            self.expect("}")
            if "," in body:
                items = body.split(",")
            else:
                items = list(body)
            if not items or not all(x.isdigit() for x in items):
                self.error("permutation must list zero-based images", body_start)
            perm = tuple(int(x) for x in items)
            if sorted(perm) != list(range(len(perm))):
                self.error(f"{perm} is not a permutation of 0..{len(perm) - 1}", body_start)
            return atom("P", param=perm)
        if not ch:
            self.error("unexpected end of input")
        self.error(f"unexpected {ch!r}")


def parse_expression(text: str, m: int | None = None) -> Expr:
    """Parse ``text`` into an arity-checked expression tree."""
    return _Parser(text, m).parse()
