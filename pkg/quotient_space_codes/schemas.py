from __future__ import annotations

from typing import Any, Dict, Tuple

from jsonschema import Draft7Validator

DISTANCE = {"type": ["integer", "null"], "minimum": 0}
VECTOR = {"type": "string", "pattern": "^[01]+\\|[01]+$"}

ERROR_SCHEMA: Dict[str, Any] = {
    "type": "object",
    "additionalProperties": True,
    "required": ["error", "reason"],
    "properties": {
        "error": {"type": "string"},
        "reason": {"type": "string"},
    },
}

CERTIFICATE_SCHEMA: Dict[str, Any] = {
    "type": "object",
    "additionalProperties": False,
    "required": [
        "n",
        "k",
        "L",
        "dimension",
        "claimed_d",
        "parameters",
        "norm_mode",
        "status",
        "reason",
        "witness",
        "conditions",
        "flags",
        "containing_code",
        "dm",
        "qsc_distance",
        "required_distance",
        "translation",
    ],
    "properties": {
        "n": {"type": "integer", "minimum": 1},
        "k": {"type": "integer", "minimum": 0},
        "L": {"type": "integer", "minimum": 1},
        "dimension": {"type": "integer", "minimum": 1},
        "claimed_d": {"type": "integer", "minimum": 1},
        "parameters": {"type": "string"},
        "norm_mode": {"enum": ["quantum", "hamming"]},
        "status": {"enum": ["certified", "rejected"]},
        "reason": {"enum": [None, "self_orthogonal", "d_le_dm", "qsc_distance", "measurement"]},
        "witness": {"type": ["object", "null"]},
        "conditions": {
            "type": "object",
            "additionalProperties": False,
            "required": ["self_orthogonal", "d_le_dm", "qsc_distance_ok", "measurement_ok"],
            "properties": {
                "self_orthogonal": {"type": "boolean"},
                "d_le_dm": {"type": "boolean"},
                "qsc_distance_ok": {"type": "boolean"},
                "measurement_ok": {"type": "boolean"},
            },
        },
        "flags": {
            "type": "object",
            "additionalProperties": False,
            "required": ["additive", "cws", "degenerate"],
            "properties": {
                "additive": {"type": "boolean"},
                "cws": {"type": "boolean"},
                "degenerate": {"type": "boolean"},
            },
        },
        "containing_code": {
            "type": "object",
            "additionalProperties": False,
            "required": ["n", "k", "d_s"],
            "properties": {
                "n": {"type": "integer"},
                "k": {"type": "integer"},
                "d_s": DISTANCE,
            },
        },
        "dm": DISTANCE,
        "qsc_distance": DISTANCE,
        "required_distance": {"type": "integer"},
        "translation": VECTOR,
    },
}

KL_REPORT_SCHEMA: Dict[str, Any] = {
    "type": "object",
    "additionalProperties": False,
    "required": ["ok", "partial", "errors_checked", "errors_total", "witness", "degenerate_errors"],
    "properties": {
        "ok": {"type": "boolean"},
        "partial": {"type": "boolean"},
        "errors_checked": {"type": "integer"},
        "errors_total": {"type": "integer"},
        "witness": {"type": ["object", "null"]},
        "degenerate_errors": {"type": "array", "items": VECTOR},
    },
}

UST_REPORT_SCHEMA: Dict[str, Any] = {
    "type": "object",
    "additionalProperties": False,
    "required": ["ust_distance", "classical_union_distance", "strict", "exclusion_dim", "exclusion_reading"],
    "properties": {
        "ust_distance": DISTANCE,
        "classical_union_distance": DISTANCE,
        "strict": {"type": "boolean"},
        "exclusion_dim": {"type": "integer"},
        "exclusion_reading": {"type": "string"},
    },
}

QSC_SCHEMA: Dict[str, Any] = {
    "type": "object",
    "additionalProperties": False,
    "required": ["L", "distance", "projection_distance", "reps"],
    "properties": {
        "L": {"type": "integer", "minimum": 1},
        "distance": DISTANCE,
        "projection_distance": DISTANCE,
        "reps": {"type": "array", "items": VECTOR, "minItems": 1},
    },
}

BOUND_SCHEMA: Dict[str, Any] = {
    "type": "object",
    "additionalProperties": False,
    "required": ["bound_name", "lhs", "rhs", "holds", "applicable", "detail"],
    "properties": {
        "bound_name": {"type": "string"},
        "lhs": {"type": "integer"},
        "rhs": {"type": "integer"},
        "holds": {"type": ["boolean", "null"]},
        "applicable": {"type": "boolean"},
        "detail": {"type": "object"},
    },
}

ANALYZE_SCHEMA: Dict[str, Any] = {
    "anyOf": [
        {
            "type": "object",
            "additionalProperties": False,
            "required": ["command", "n", "k", "dim", "self_dual", "dm", "generators", "degeneracy"],
            "properties": {
                "command": {"const": "analyze"},
                "n": {"type": "integer"},
                "k": {"type": "integer"},
                "dim": {"type": "integer"},
                "self_dual": {"type": "boolean"},
                "dm": DISTANCE,
                "generators": {"type": "array", "items": VECTOR},
                "degeneracy": {
                    "anyOf": [
                        {"type": "null"},
                        {
                            "type": "object",
                            "additionalProperties": False,
                            "required": ["d", "s", "lowweight_span", "d_s", "d_s_exact"],
                            "properties": {
                                "d": {"type": "integer"},
                                "s": {"type": "integer"},
                                "lowweight_span": {"type": "array", "items": VECTOR},
                                "d_s": DISTANCE,
                                "d_s_exact": {"type": "boolean"},
                            },
                        },
                    ]
                },
            },
        },
        ERROR_SCHEMA,
    ]
}

VERIFY_SCHEMA: Dict[str, Any] = {
    "anyOf": [
        {
            "type": "object",
            "additionalProperties": False,
            "required": ["command", "certificate", "qsc", "oracle"],
            "properties": {
                "command": {"const": "verify"},
                "certificate": CERTIFICATE_SCHEMA,
                "qsc": QSC_SCHEMA,
                "oracle": {"anyOf": [{"type": "null"}, KL_REPORT_SCHEMA]},
            },
        },
        ERROR_SCHEMA,
    ]
}

SEARCH_SCHEMA: Dict[str, Any] = {
    "anyOf": [
        {
            "type": "object",
            "additionalProperties": False,
            "required": ["command", "d", "strategy", "seed", "qsc", "certificate"],
            "properties": {
                "command": {"const": "search"},
                "d": {"type": "integer"},
                "strategy": {"enum": ["exhaustive", "greedy"]},
                "seed": {"type": "integer"},
                "qsc": QSC_SCHEMA,
                "certificate": CERTIFICATE_SCHEMA,
            },
        },
        ERROR_SCHEMA,
    ]
}

BOUNDS_SCHEMA: Dict[str, Any] = {
    "anyOf": [
        {
            "type": "object",
            "additionalProperties": False,
            "required": ["command", "certificate", "reports"],
            "properties": {
                "command": {"const": "bounds"},
                "certificate": CERTIFICATE_SCHEMA,
                "reports": {"type": "array", "items": BOUND_SCHEMA},
            },
        },
        ERROR_SCHEMA,
    ]
}

UST_SCHEMA: Dict[str, Any] = {
    "anyOf": [
        {
            "type": "object",
            "additionalProperties": False,
            "required": [
                "command",
                "ust_distance",
                "classical_union_distance",
                "strict",
                "exclusion_dim",
                "exclusion_reading",
                "qsc_distance",
            ],
            "properties": {
                "command": {"const": "ust"},
                "ust_distance": DISTANCE,
                "classical_union_distance": DISTANCE,
                "strict": {"type": "boolean"},
                "exclusion_dim": {"type": "integer"},
                "exclusion_reading": {"type": "string"},
                "qsc_distance": DISTANCE,
            },
        },
        ERROR_SCHEMA,
    ]
}

SWEEP_SCHEMA: Dict[str, Any] = {
    "type": "object",
    "additionalProperties": False,
    "required": ["command", "score", "max_score", "results"],
    "properties": {
        "command": {"const": "examples"},
        "score": {"type": "integer", "minimum": 0},
        "max_score": {"type": "integer", "minimum": 0},
        "results": {
            "type": "array",
            "items": {
                "type": "object",
                "additionalProperties": False,
                "required": [
                    "name",
                    "expected_certified",
                    "certificate",
                    "labels",
                    "bounds",
                    "ust",
                    "oracle",
                ],
                "properties": {
                    "name": {"type": "string"},
                    "expected_certified": {"type": "boolean"},
                    "certificate": CERTIFICATE_SCHEMA,
                    "labels": {"type": "array", "items": {"type": "string"}},
                    "bounds": {"type": "array", "items": BOUND_SCHEMA},
                    "ust": UST_REPORT_SCHEMA,
                    "oracle": {"anyOf": [{"type": "null"}, KL_REPORT_SCHEMA]},
                },
            },
        },
    },
}

SCHEMAS: Dict[str, Dict[str, Any]] = {
    "analyze": ANALYZE_SCHEMA,
    "verify": VERIFY_SCHEMA,
    "search": SEARCH_SCHEMA,
    "bounds": BOUNDS_SCHEMA,
    "ust": UST_SCHEMA,
    "examples": SWEEP_SCHEMA,
    "error": ERROR_SCHEMA,
}


def validate_schema(name: str, payload: Dict[str, Any]) -> Tuple[bool, str | None]:
    schema = SCHEMAS[name]
    validator = Draft7Validator(schema)
    errors = sorted(validator.iter_errors(payload), key=lambda e: e.path)
    if errors:
        return False, errors[0].message
    return True, None
