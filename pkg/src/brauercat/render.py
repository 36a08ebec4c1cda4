"""Deterministic SVG pictures of morphisms.

Terms are laid out left to right, each in its own panel with its coefficient
printed to the left.  Bottom points sit on the lower edge and top points on
the upper edge.  Strands are cubic Bezier paths; a vertex is a triangle whose
legs are again cubic paths.
"""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path

from .brauer import BrauerMorphism
from .enhanced import EnhancedMorphism

MAX_TERMS = 50

SPACING = 30
MARGIN = 20
COEFF_WIDTH = 50
HEIGHT = 120
TOP_Y = 20
BOTTOM_Y = 100
MINUS = "−"


class RenderLimitError(ValueError):
    pass


def format_coefficient(c) -> str:
    """Exact rational text with a typographic minus sign."""
    c = Fraction(c)
    text = str(abs(c.numerator)) if c.denominator == 1 else f"{abs(c.numerator)}/{c.denominator}"
    return (MINUS + text) if c < 0 else text


def _num(x: float) -> str:
    return f"{x:.1f}".rstrip("0").rstrip(".")


def _point(p: int, source: int, target: int, x0: float) -> tuple[float, float]:
    if p < source:
        return x0 + p * SPACING, BOTTOM_Y
    return x0 + (p - source) * SPACING, TOP_Y


def _strand(a, b, source, target, x0) -> str:
    (xa, ya), (xb, yb) = _point(a, source, target, x0), _point(b, source, target, x0)
    if ya == yb:
        # cup or cap: bulge into the box
        depth = 20 + 6 * abs(xb - xa) / SPACING
        yc = ya - depth if ya == BOTTOM_Y else ya + depth
        c1, c2 = (xa, yc), (xb, yc)
    else:
        mid = (ya + yb) / 2
        c1, c2 = (xa, mid), (xb, mid)
    return (f'<path d="M {_num(xa)} {_num(ya)} C {_num(c1[0])} {_num(c1[1])} '
            f'{_num(c2[0])} {_num(c2[1])} {_num(xb)} {_num(yb)}" />')


def _vertex(legs, source, target, x0, width) -> list[str]:
    cx, cy = x0 + width / 2, (TOP_Y + BOTTOM_Y) / 2
    r = 10
    out = [f'<polygon class="vertex" points="{_num(cx - r)},{_num(cy + r)} '
           f'{_num(cx + r)},{_num(cy + r)} {_num(cx)},{_num(cy - r)}" />']
    n = len(legs)
    for k, p in enumerate(legs):
        # legs leave the triangle's top edge from left to right
        sx = cx - r + (2 * r) * (k + 0.5) / n
        sy = cy - r / 2 if n else cy
        px, py = _point(p, source, target, x0)
        my = (sy + py) / 2
        out.append(f'<path class="leg" d="M {_num(sx)} {_num(sy)} C {_num(sx)} {_num(my)} '
                   f'{_num(px)} {_num(my)} {_num(px)} {_num(py)}" />')
    return out


def _terms(f):
    if isinstance(f, EnhancedMorphism):
        return [(d.pairs, d.delta_legs, c) for d, c in f]
    if isinstance(f, BrauerMorphism):
        items = []
        for d, c in f:
            if c.degree > 0:
                raise TypeError("render a Brauer morphism after specializing delta")
            items.append((d.pairs, None, c(0)))
        return items
    raise TypeError(f"cannot render {type(f).__name__}")


def render_svg(f, max_terms: int = MAX_TERMS) -> str:
    """SVG text for ``f``; identical input gives identical bytes."""
    terms = _terms(f)
    if len(terms) > max_terms:
        raise RenderLimitError(f"{len(terms)} terms exceeds the render cap of {max_terms}")
    s, t = f.source, f.target
    inner = max(s, t, 1) * SPACING
    if any(legs for _, legs, _ in terms):
        inner = max(inner, 2 * SPACING)
    panel = COEFF_WIDTH + inner + MARGIN
    width = max(panel * len(terms), panel) + MARGIN
    body = []
    for i, (pairs, legs, c) in enumerate(terms):
        left = MARGIN + i * panel
        x0 = left + COEFF_WIDTH
        body.append(f'<g class="term" data-index="{i}">')
        body.append(f'<text x="{_num(left)}" y="{_num((TOP_Y + BOTTOM_Y) / 2 + 5)}">{format_coefficient(c)}</text>')
        for a, b in pairs:
            body.append(_strand(a, b, s, t, x0))
        if legs is not None:
            body.extend(_vertex(legs, s, t, x0, (max(s, t, 1) - 1) * SPACING))
        body.append("</g>")
    if not terms:
        body.append(f'<text x="{MARGIN}" y="{_num((TOP_Y + BOTTOM_Y) / 2 + 5)}">0</text>')
    head = (f'<svg xmlns="http://www.w3.org/2000/svg" width="{_num(width)}" height="{HEIGHT}" '
            f'viewBox="0 0 {_num(width)} {HEIGHT}">')
    style = ('<style>path{fill:none;stroke:black;stroke-width:1.5}'
             'polygon{fill:black}text{font-family:serif;font-size:14px}</style>')
    return "\n".join([head, style, *body, "</svg>"]) + "\n"


def save_svg(f, path, max_terms: int = MAX_TERMS) -> None:
    Path(path).write_text(render_svg(f, max_terms), encoding="utf-8")
