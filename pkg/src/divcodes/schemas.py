"""JSON Schemas for every machine-readable output of the CLI.

Integers that can get large are carried as decimal strings.
"""

DECIMAL = {"type": "string", "pattern": r"^-?[0-9]+$"}
RATIONAL = {"type": "string", "pattern": r"^-?[0-9]+(/[0-9]+)?$"}

DISTRIBUTION = {
    "type": "object",
    "required": ["n", "k", "counts"],
    "properties": {
        "n": {"type": "integer", "minimum": 0},
        "k": {"type": "integer", "minimum": 0},
        "counts": {"type": "object", "patternProperties": {r"^[0-9]+$": DECIMAL}, "additionalProperties": False},
        "a3_star": DECIMAL,
    },
    "additionalProperties": False,
}

INVALID = {
    "type": "object",
    "required": ["error", "index", "value"],
    "properties": {"error": {"type": "string"}, "index": {"type": "string"}, "value": RATIONAL},
}

MOMENTS = {
    "type": "object",
    "required": ["residuals", "a3_star", "consistent"],
    "properties": {
        "residuals": {"type": "array", "items": RATIONAL, "minItems": 4, "maxItems": 4},
        "a3_star": RATIONAL,
        "consistent": {"type": "boolean"},
    },
    "additionalProperties": False,
}

FEASIBLE_LENGTH = {
    "type": "object",
    "required": ["n", "r", "projective", "feasible"],
    "properties": {
        "n": DECIMAL,
        "r": {"type": "integer"},
        "projective": {"type": "boolean"},
        "feasible": {"type": "boolean"},
        "status": {"enum": ["Exists", "NotExists", "Unknown"]},
        "provenance": {"type": "string"},
    },
    "additionalProperties": False,
}

ROUNDING = {
    "type": "object",
    "required": ["t", "witness_length", "trail"],
    "properties": {
        "t": DECIMAL,
        "witness_length": DECIMAL,
        "trail": {
            "type": "array",
            "minItems": 1,
            "items": {
                "type": "object",
                "required": ["t", "length", "status"],
                "properties": {
                    "t": DECIMAL,
                    "length": DECIMAL,
                    "status": {"enum": ["Exists", "NotExists", "Unknown"]},
                },
                "additionalProperties": False,
            },
        },
    },
    "additionalProperties": False,
}

ADMISSIBLE = {
    "type": "object",
    "required": ["n", "r", "weights"],
    "properties": {"n": DECIMAL, "r": {"type": "integer"}, "weights": {"type": "array", "items": DECIMAL}},
    "additionalProperties": False,
}

BOUND = {
    "type": "object",
    "required": ["n", "d", "k", "value", "method", "assumptions"],
    "properties": {
        "n": {"type": "integer"},
        "d": {"type": "integer"},
        "k": {"type": "integer"},
        "value": DECIMAL,
        "method": {"enum": ["spread", "recursive", "table"]},
        "assumptions": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["n", "d", "k", "value", "citation"],
                "properties": {
                    "n": {"type": "integer"},
                    "d": {"type": "integer"},
                    "k": {"type": "integer"},
                    "value": DECIMAL,
                    "citation": {"type": "string"},
                },
            },
        },
        "rounding": ROUNDING,
    },
    "additionalProperties": False,
}

STEP = {
    "type": "object",
    "required": ["rule", "values", "citation", "holds"],
    "properties": {
        "rule": {"type": "string"},
        "values": {
            "type": "object",
            "required": ["lhs", "op", "rhs"],
            "properties": {
                "lhs": DECIMAL,
                "op": {"enum": ["<", "<=", "==", ">", ">=", "!="]},
                "rhs": DECIMAL,
                "note": {"type": "string"},
            },
        },
        "citation": {"type": "string"},
        "holds": {"type": "boolean"},
    },
}

CERTIFICATE = {
    "type": "object",
    "required": ["claim", "steps", "children", "premises"],
    "properties": {
        "claim": {
            "type": "object",
            "required": ["n", "r", "projective", "k_range"],
            "properties": {
                "n": DECIMAL,
                "r": {"type": "integer"},
                "projective": {"type": "boolean"},
                "k_range": {"type": "string"},
            },
        },
        "steps": {"type": "array", "items": STEP},
        "children": {"type": "array", "items": {"$ref": "#"}},
        "premises": {"type": "array", "items": {"type": "string"}},
        "verified": {"type": "boolean"},
    },
}

REPORT = {
    "type": "object",
    "required": ["overall", "checks", "premises", "flags"],
    "properties": {
        "overall": {"type": "boolean"},
        "checks": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["name", "inputs", "computed", "relation", "expected", "tag", "citation", "pass"],
                "properties": {
                    "name": {"type": "string"},
                    "relation": {"enum": ["==", "<", "<=", ">", ">="]},
                    "tag": {"enum": ["PUBLISHED", "DERIVED", "TRIVIAL", "CONDITIONAL", "MISSING"]},
                    "citation": {"type": "string"},
                    "pass": {"type": "boolean"},
                    "blocking": {"type": "boolean"},
                    "flag": {"type": "string"},
                },
            },
        },
        "premises": {"type": "array", "items": {"type": "string"}},
        "flags": {"type": "array", "items": {"type": "string"}},
    },
    "additionalProperties": False,
}

LENGTH_TABLE = {
    "type": "object",
    "required": ["r", "not_exists", "exists", "provenance"],
    "properties": {
        "r": {"type": "integer", "minimum": 0},
        "not_exists": {"type": "array", "items": {"type": "integer", "minimum": 0}},
        "exists": {"type": "array", "items": {"type": "integer", "minimum": 0}},
        "provenance": {"type": "object", "additionalProperties": {"type": "string"}},
    },
    "additionalProperties": False,
}

LENGTH_TABLES = {
    "type": "object",
    "required": ["tables"],
    "properties": {"tables": {"type": "array", "items": LENGTH_TABLE}},
    "additionalProperties": False,
}

BOUND_TABLE = {
    "type": "object",
    "required": ["entries"],
    "properties": {
        "entries": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["n", "d", "k", "value", "citation"],
                "properties": {
                    "n": {"type": "integer"},
                    "d": {"type": "integer"},
                    "k": {"type": "integer"},
                    "value": DECIMAL,
                    "citation": {"type": "string", "minLength": 1},
                },
                "additionalProperties": False,
            },
        }
    },
    "additionalProperties": False,
}
