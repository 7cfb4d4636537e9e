"""JSON Schemas for the serialized formats.

Draft 2020-12 schemas for the representation file format, the pair-table
export, and the verify-suite result.  They are plain dicts so callers can
validate with any JSON Schema library; the test suite uses jsonschema.
"""
from __future__ import annotations

_RATIONAL = {
    "oneOf": [
        {"type": "integer"},
        {"type": "string", "pattern": r"^-?[0-9]+(/[0-9]+)?$"},
    ]
}

REPRESENTATION = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "$id": "https://quiverhom.invalid/schemas/representation.json",
    "type": "object",
    "required": ["format", "field", "quiver", "dims", "maps"],
    "properties": {
        "format": {"const": "quiverhom-representation"},
        "field": {"type": "string", "pattern": r"^(q|fp:[0-9]+)$"},
        "quiver": {"type": "string"},
        "dims": {
            "type": "object",
            "additionalProperties": {"type": "integer", "minimum": 0},
        },
        "maps": {
            "type": "object",
            "additionalProperties": {
                "type": "array",
                "items": {"type": "array", "items": _RATIONAL},
            },
        },
    },
    "additionalProperties": False,
}

HOM_REPORT = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "$id": "https://quiverhom.invalid/schemas/hom-report.json",
    "type": "object",
    "required": ["hom", "ext1", "euler", "rank", "rows", "cols", "max_rank"],
    "properties": {
        "hom": {"type": "integer", "minimum": 0},
        "ext1": {"type": "integer", "minimum": 0},
        "euler": {"type": "integer"},
        "rank": {"type": "integer", "minimum": 0},
        "rows": {"type": "integer", "minimum": 0},
        "cols": {"type": "integer", "minimum": 0},
        "max_rank": {"type": "boolean"},
    },
    "additionalProperties": False,
}

PAIR_TABLE = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "$id": "https://quiverhom.invalid/schemas/pair-table.json",
    "type": "object",
    "required": ["format", "labels", "cells"],
    "properties": {
        "format": {"const": "quiverhom-pair-table"},
        "labels": {"type": "array", "items": {"type": "string"}},
        "cells": {
            "type": "array",
            "items": {"type": "array", "items": HOM_REPORT},
        },
    },
    "additionalProperties": False,
}

SUITE_RESULT = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "$id": "https://quiverhom.invalid/schemas/suite-result.json",
    "type": "object",
    "required": ["suite", "ok", "lines", "violations", "stats"],
    "properties": {
        "suite": {"type": "string"},
        "ok": {"type": "boolean"},
        "lines": {"type": "array", "items": {"type": "string"}},
        "violations": {"type": "array"},
        "stats": {"type": "object"},
    },
    "additionalProperties": False,
}

ROOT_LIST = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "$id": "https://quiverhom.invalid/schemas/root-list.json",
    "type": "array",
    "items": {
        "type": "object",
        "required": ["entries", "shape"],
        "properties": {
            "entries": {"type": "array", "items": {"type": "integer", "minimum": 0}},
            "shape": {"enum": ["thin", "hill", "other"]},
        },
        "additionalProperties": False,
    },
}
