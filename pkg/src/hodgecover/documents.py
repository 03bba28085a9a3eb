"""JSON input documents: schema validation and conversion into cover specs."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

import jsonschema

from hodgecover.arrangement import Arrangement, ArrangementError
from hodgecover.characters import CharTable, CharTableError, builtin_table, table_from_json
from hodgecover.cover import (
    AbelianGroup,
    CoverError,
    CoverSpec,
    ProductP1Base,
    ProjectiveSpaceBase,
    validate_cover,
)
from hodgecover.hodge import EigenHodgeTable


class InputError(ValueError):
    """A document that fails the schema or cross-validation."""


_RATIONAL = {
    "oneOf": [
        {"type": "integer"},
        {"type": "string", "pattern": r"^\s*[+-]?\d+\s*(/\s*[+-]?\d+\s*)?$"},
    ]
}

_INTS = {"type": "array", "items": {"type": "integer"}}

SCHEMA: dict[str, Any] = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "additionalProperties": False,
    "properties": {
        "arrangement": {
            "type": "object",
            "required": ["dim", "hyperplanes"],
            "additionalProperties": False,
            "properties": {
                "dim": {"type": "integer", "minimum": 1},
                "hyperplanes": {
                    "type": "array",
                    "items": {
                        "type": "object",
                        "required": ["normal"],
                        "additionalProperties": False,
                        "properties": {
                            "normal": {"type": "array", "minItems": 2, "items": _RATIONAL},
                            "multiplicity": {"type": "integer", "minimum": 1},
                        },
                    },
                },
            },
        },
        "cover": {
            "type": "object",
            "required": ["base", "cover"],
            "additionalProperties": False,
            "properties": {
                "base": {
                    "oneOf": [
                        {
                            "type": "object",
                            "required": ["type", "dim"],
                            "additionalProperties": False,
                            "properties": {
                                "type": {"const": "projective_space"},
                                "dim": {"type": "integer", "minimum": 1},
                            },
                        },
                        {
                            "type": "object",
                            "required": ["type", "points_per_factor"],
                            "additionalProperties": False,
                            "properties": {
                                "type": {"const": "product_p1"},
                                "points_per_factor": {
                                    "type": "array",
                                    "minItems": 1,
                                    "items": {"type": "integer", "minimum": 0},
                                },
                            },
                        },
                    ]
                },
                "cover": {
                    "oneOf": [
                        {
                            "type": "object",
                            "required": ["type", "degree"],
                            "additionalProperties": False,
                            "properties": {
                                "type": {"const": "cyclic"},
                                "degree": {"type": "integer", "minimum": 1},
                            },
                        },
                        {
                            "type": "object",
                            "required": ["type", "orders"],
                            "additionalProperties": False,
                            "properties": {
                                "type": {"const": "abelian"},
                                "orders": {"type": "array", "minItems": 1, "items": {"type": "integer", "minimum": 1}},
                            },
                        },
                    ]
                },
                "monodromy": {
                    "type": "array",
                    "items": {"oneOf": [{"type": "integer"}, _INTS]},
                },
            },
        },
        "options": {
            "type": "object",
            "properties": {
                "format": {"enum": ["text", "json"]},
                "degree": {"type": "integer", "minimum": 1},
                "level": {"type": "integer", "minimum": 0},
                "char_table": {"oneOf": [{"type": "string"}, {"type": "object"}]},
                "hodge_table": {
                    "type": "array",
                    "items": {
                        "type": "object",
                        "required": ["character", "h"],
                        "properties": {
                            "h": {"type": "array", "items": {"type": "array", "items": {"type": "integer", "minimum": 0}}}
                        },
                    },
                },
            },
        },
    },
}

_VALIDATOR = jsonschema.Draft202012Validator(SCHEMA)


def _pointer(path) -> str:
    return "/" + "/".join(str(p) for p in path)


def validate_document(doc: Any) -> dict:
    errors = sorted(_VALIDATOR.iter_errors(doc), key=lambda e: list(map(str, e.absolute_path)))
    if errors:
        lines = [f"at {_pointer(e.absolute_path)}: {e.message}" for e in errors]
        raise InputError("schema validation failed\n" + "\n".join(lines))
    return doc


def load_document(path: str | Path) -> dict:
    text = Path(path).read_text()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return validate_document(doc)


def parse_arrangement(doc: dict) -> Arrangement | None:
    if "arrangement" not in doc:
        return None
    try:
        return Arrangement.from_json(doc["arrangement"])
    except ArrangementError as exc:
        raise InputError(f"at /arrangement: {exc}") from None


def build_spec(doc: dict) -> CoverSpec:
    """Resolve a validated document into a checked cover spec."""
    if "cover" not in doc:
        raise InputError("document has no cover block")
    block = doc["cover"]
    arr = parse_arrangement(doc)
    base_doc, group_doc = block["base"], block["cover"]
    if group_doc["type"] == "cyclic":
        group = AbelianGroup.cyclic(group_doc["degree"])
    else:
        group = AbelianGroup(tuple(group_doc["orders"]))
    if base_doc["type"] == "projective_space":
        if arr is None:
            raise InputError("at /arrangement: a projective-space base needs an arrangement block")
        if arr.dim != base_doc["dim"]:
            raise InputError(f"at /cover/base/dim: base dimension {base_doc['dim']} but arrangement lives in P^{arr.dim}")
        base = ProjectiveSpaceBase(arr.dim, arr)
        count = len(arr)
    else:
        base = ProductP1Base(tuple(base_doc["points_per_factor"]))
        count = sum(base.points_per_factor)
    mono = block.get("monodromy")
    if mono is None:
        if not group.is_cyclic_presentation:
            raise InputError("at /cover/monodromy: abelian covers need explicit monodromy")
        if arr is not None and base_doc["type"] == "projective_space":
            mono = [a % group.orders[0] for a in arr.multiplicities]
        else:
            mono = [1] * count
    if len(mono) != count:
        raise InputError(f"at /cover/monodromy: {len(mono)} elements for {count} branch components")
    try:
        spec = CoverSpec(base, group, tuple((g,) if isinstance(g, int) else tuple(g) for g in mono))
        return validate_cover(spec)
    except CoverError as exc:
        raise InputError(f"at /cover: {exc}") from None


def char_table_option(doc: dict) -> CharTable | None:
    source = doc.get("options", {}).get("char_table")
    if source is None:
        return None
    try:
        return builtin_table(source) if isinstance(source, str) else table_from_json(source)
    except CharTableError as exc:
        raise InputError(f"at /options/char_table: {exc}") from None


def hodge_table_option(doc: dict, table: CharTable) -> EigenHodgeTable | None:
    """A manually supplied eigen Hodge table, keyed by the character labels of ``table``."""
    records = doc.get("options", {}).get("hodge_table")
    if records is None:
        return None
    if not records:
        raise InputError("at /options/hodge_table: no records")
    n = len(records[0]["h"]) - 1
    entries = {}
    for idx, rec in enumerate(records):
        label = tuple(rec["character"]) if isinstance(rec["character"], list) else rec["character"]
        try:
            table.index(label)
        except CharTableError as exc:
            raise InputError(f"at /options/hodge_table/{idx}/character: {exc}") from None
        h = rec["h"]
        if len(h) != n + 1 or any(len(row) != n + 1 for row in h):
            raise InputError(f"at /options/hodge_table/{idx}/h: expected a {n + 1}x{n + 1} table")
        entries[label] = tuple(tuple(row) for row in h)
    zero = tuple((0,) * (n + 1) for _ in range(n + 1))
    for label in table.labels:
        entries.setdefault(label, zero)
    return EigenHodgeTable(
        n, table.labels, entries, {label: "supplied" for label in table.labels}, table.trivial
    )
