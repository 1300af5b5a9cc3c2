"""JSON schemas for the table and verification documents (schema_version 1)."""

SCHEMA_VERSION = 1

_LABEL = {"type": "string", "pattern": r"^(U|T):(even\+|even-|odd\+|odd-):[0-9]+$"}

TABLE_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "orbifold fusion table",
    "type": "object",
    "required": ["schema_version", "level", "filter", "labels", "products"],
    "additionalProperties": False,
    "properties": {
        "schema_version": {"const": SCHEMA_VERSION},
        "level": {"type": "integer", "minimum": 1},
        "filter": {"enum": ["all", "untwisted", "covered"]},
        "labels": {"type": "array", "items": _LABEL},
        "products": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["left", "right", "result"],
                "additionalProperties": False,
                "properties": {
                    "left": _LABEL,
                    "right": _LABEL,
                    "result": {
                        "type": "array",
                        "items": {
                            "type": "object",
                            "required": ["label", "mult"],
                            "additionalProperties": False,
                            "properties": {"label": _LABEL, "mult": {"type": "integer", "minimum": 1}},
                        },
                    },
                },
            },
        },
    },
}

REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "verification reports",
    "type": "object",
    "required": ["schema_version", "level", "reports"],
    "properties": {
        "schema_version": {"const": SCHEMA_VERSION},
        "level": {"type": "integer", "minimum": 1},
        "reports": {
            "type": "array",
            "items": {
                "type": "object",
                "required": [
                    "check",
                    "level",
                    "passed",
                    "cases",
                    "skipped",
                    "note",
                    "total_counterexamples",
                    "counterexamples",
                    "findings",
                ],
                "properties": {
                    "check": {"type": "string"},
                    "level": {"type": "integer"},
                    "passed": {"type": "boolean"},
                    "cases": {"type": "integer", "minimum": 0},
                    "skipped": {"type": "boolean"},
                    "note": {"type": "string"},
                    "total_counterexamples": {"type": "integer", "minimum": 0},
                    "counterexamples": {
                        "type": "array",
                        "maxItems": 20,
                        "items": {
                            "type": "object",
                            "required": ["op", "inputs", "expected", "got"],
                            "properties": {
                                "op": {"type": "string"},
                                "inputs": {"type": "array", "items": {"type": "string"}},
                                "expected": {"type": "string"},
                                "got": {"type": "string"},
                            },
                        },
                    },
                    "findings": {"type": "array", "items": {"type": "object"}},
                    "elapsed": {"type": "number", "minimum": 0},
                },
            },
        },
    },
}
