"""JSON save and load for Brauer and enhanced morphisms.

Brauer morphisms store each coefficient as a list of rational strings, the
coefficients of ``1, delta, delta^2, ...``.  Enhanced morphisms carry a
top-level ``"m"``, a single rational string per coefficient and optional
``"delta_legs"`` per term.
"""

from __future__ import annotations

import json
from pathlib import Path

import jsonschema

from .brauer import BrauerDiagram, BrauerMorphism
from .enhanced import EnhancedDiagram, EnhancedMorphism
from .scalars import DeltaPolynomial, rational_from_str, rational_to_str

_RATIONAL = {"type": "string", "pattern": r"^\s*-?\d+(/\d+)?\s*$"}
_PAIRS = {
    "type": "array",
    "items": {"type": "array", "items": {"type": "integer", "minimum": 0}, "minItems": 2, "maxItems": 2},
}

BRAUER_SCHEMA = {
    "type": "object",
    "required": ["source", "target", "terms"],
    "properties": {
        "source": {"type": "integer", "minimum": 0},
        "target": {"type": "integer", "minimum": 0},
        "terms": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["coeff", "pairs"],
                "properties": {"coeff": {"type": "array", "items": _RATIONAL}, "pairs": _PAIRS},
                "additionalProperties": False,
            },
        },
    },
    "additionalProperties": False,
}

ENHANCED_SCHEMA = {
    "type": "object",
    "required": ["m", "source", "target", "terms"],
    "properties": {
        "m": {"type": "integer", "minimum": 2},
        "source": {"type": "integer", "minimum": 0},
        "target": {"type": "integer", "minimum": 0},
        "terms": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["coeff", "pairs"],
                "properties": {
                    "coeff": _RATIONAL,
                    "pairs": _PAIRS,
                    "delta_legs": {"type": "array", "items": {"type": "integer", "minimum": 0}},
                },
                "additionalProperties": False,
            },
        },
    },
    "additionalProperties": False,
}


class SchemaError(ValueError):
    """A document that does not describe a morphism; ``pointer`` locates the
    offending value."""

    def __init__(self, message: str, pointer: str):
        super().__init__(f"{pointer or '/'}: {message}")
        self.pointer = pointer


def _pointer(path) -> str:
    return "".join("/" + str(p).replace("~", "~0").replace("/", "~1") for p in path)


def _validate(doc, schema):
    validator = jsonschema.Draft202012Validator(schema)
    errors = sorted(validator.iter_errors(doc), key=lambda e: list(map(str, e.absolute_path)))
    if errors:
        e = errors[0]
        raise SchemaError(e.message, _pointer(e.absolute_path))


def brauer_to_json(f: BrauerMorphism) -> dict:
    return {
        "source": f.source,
        "target": f.target,
        "terms": [{"coeff": c.to_json(), "pairs": [list(p) for p in d.pairs]} for d, c in f],
    }


def enhanced_to_json(f: EnhancedMorphism) -> dict:
    terms = []
    for d, c in f:
        term = {"coeff": rational_to_str(c), "pairs": [list(p) for p in d.pairs]}
        if d.delta_legs is not None:
            term["delta_legs"] = list(d.delta_legs)
        terms.append(term)
    return {"m": f.m, "source": f.source, "target": f.target, "terms": terms}


def to_json(f) -> dict:
    if isinstance(f, EnhancedMorphism):
        return enhanced_to_json(f)
    if isinstance(f, BrauerMorphism):
        return brauer_to_json(f)
    raise TypeError(f"cannot serialize {type(f).__name__}")


def _term_error(i: int, field: str, exc: Exception):
    raise SchemaError(str(exc), f"/terms/{i}/{field}") from exc


def brauer_from_json(doc) -> BrauerMorphism:
    _validate(doc, BRAUER_SCHEMA)
    s, t = doc["source"], doc["target"]
    terms: dict = {}
    for i, term in enumerate(doc["terms"]):
        try:
            d = BrauerDiagram.from_pairs(s, t, [tuple(p) for p in term["pairs"]])
        except ValueError as exc:
            _term_error(i, "pairs", exc)
        terms[d] = terms.get(d, DeltaPolynomial(())) + DeltaPolynomial.from_json(term["coeff"])
    return BrauerMorphism(s, t, terms)


def enhanced_from_json(doc, m: int | None = None) -> EnhancedMorphism:
    """Load an enhanced morphism; with ``m`` given, a document for a
    different ``m`` is rejected."""
    _validate(doc, ENHANCED_SCHEMA)
    if m is not None and doc["m"] != m:
        raise SchemaError(f"document has m={doc['m']} but the context fixes m={m}", "/m")
    m = doc["m"]
    s, t = doc["source"], doc["target"]
    terms: dict = {}
    for i, term in enumerate(doc["terms"]):
        legs = term.get("delta_legs")
        if legs is not None and len(legs) != m:
            raise SchemaError(f"a vertex has {m} legs, found {len(legs)}", f"/terms/{i}/delta_legs")
        try:
            d = EnhancedDiagram(s, t, None if legs is None else tuple(legs),
                                tuple(sorted(tuple(sorted(p)) for p in term["pairs"])))
        except ValueError as exc:
            _term_error(i, "pairs", exc)
        terms[d] = terms.get(d, 0) + rational_from_str(term["coeff"])
    return EnhancedMorphism(m, s, t, terms)


def from_json(doc, m: int | None = None):
    if isinstance(doc, dict) and "m" in doc:
        return enhanced_from_json(doc, m)
    if m is not None:
        raise SchemaError(f"document has no m but the context fixes m={m}", "/m")
    return brauer_from_json(doc)


def dumps(f) -> str:
    return json.dumps(to_json(f), ensure_ascii=False, indent=2) + "\n"


def loads(text: str, m: int | None = None):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc.msg} at line {exc.lineno}", "") from exc
    return from_json(doc, m)


def save(f, path) -> None:
    Path(path).write_text(dumps(f), encoding="utf-8")


def load(path, m: int | None = None):
    return loads(Path(path).read_text(encoding="utf-8"), m)
