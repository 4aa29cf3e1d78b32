"""JSON Schemas for the ``result`` payload of every subcommand.

Plain dicts that any JSON Schema validator accepts; the package itself
never imports a validator (the tests use jsonschema).
"""
from __future__ import annotations

_INT = {"type": "integer"}
_NUM = {"type": "number"}
_STR = {"type": "string"}
_PAIR = {"type": "array", "items": _INT, "minItems": 2, "maxItems": 2}
_NULLABLE_INT = {"type": ["integer", "null"]}
_NULLABLE_NUM = {"type": ["number", "null"]}


def _obj(props: dict, required=None) -> dict:
    return {
        "type": "object",
        "properties": props,
        "required": list(props) if required is None else required,
    }


_BLOCK = _obj({"kind": {"enum": ["clique", "coclique"]}, "vertices": {"type": "array", "items": _INT}})
_PARTITION = {"type": "array", "items": _BLOCK}

CHIB = _obj({
    "graph6": _STR,
    "n": _INT,
    "chi_b": _INT,
    "k": _INT,
    "c_min": _NULLABLE_INT,
    "c_max": _NULLABLE_INT,
    "feasibility": {"type": "array", "items": _obj({
        "cliques": _INT, "cocliques": _INT, "feasible": {"type": "boolean"},
        "witness": {"anyOf": [_PARTITION, {"type": "null"}]},
    })},
})

EDIT_RESULT = _obj({
    "distance": _INT,
    "edits": {"type": "array", "items": _PAIR},
    "witness_graph6": _STR,
})

DIST = _obj({
    "distance": _INT,
    "map": {"type": "array", "items": _INT},
}, required=["distance"])

FORB = _obj({**EDIT_RESULT["properties"], "graph6": _STR, "family": _STR})

MAXDIST = _obj({
    "distance": _INT,
    "extremal": _STR,
    "graphs_examined": _INT,
    "n": _INT,
    "family": _STR,
})

_PLAN = _obj({"k": _INT, "c": _INT, "p": _NUM, "q": _NUM, "d": _NUM})
_EDIT_ONE = _obj({
    "graph6": _STR,
    "plan": _PLAN,
    "edits": {"type": "array", "items": _PAIR},
    "edit_count": _INT,
    "expected": _NUM,
    "partition": _PARTITION,
    "output_graph6": _STR,
})
EDIT = _obj({"mode": {"enum": ["random", "derandomized"]}, "graphs": {"type": "array", "items": _EDIT_ONE}})

BOUNDS = _obj({
    "n": _INT,
    "h_name": _STR,
    "chi_b": _NULLABLE_INT,
    "k": _NULLABLE_INT,
    "c_min": _NULLABLE_INT,
    "c_max": _NULLABLE_INT,
    "turan_value": _NULLABLE_INT,
    "lower_bound": _NULLABLE_NUM,
    "upper_bound": _NULLABLE_NUM,
    "upper_case": {"enum": ["UB1", "UB2", None]},
    "lub_curve": {"type": "array", "items": {"type": "array", "items": _NUM}},
    "split_value": _NULLABLE_INT,
    "q_bounds": {"anyOf": [{"type": "array", "items": _INT}, {"type": "null"}]},
    "exact": _NULLABLE_INT,
    "timeouts": {"type": "array", "items": _STR},
    "notes": {"type": "array", "items": _STR},
})

CONSTRUCT = _obj({
    "k": _INT,
    "n": _INT,
    "graph6": _STR,
    "partitions": {"type": "array", "items": _obj({
        "cliques": _INT, "cocliques": _INT, "blocks": _PARTITION,
    })},
    "audit": {"type": "array", "items": _STR},
    "audit_passed": {"type": "boolean"},
})

REGULARITY = _obj({
    "n": _INT, "l": _INT, "f": _NUM, "trials": _INT,
    "seed": _NULLABLE_INT, "passed": _INT, "pass_fraction": _NUM,
    "chernoff_bound": _NUM,
})

VERIFY = _obj({
    "all_passed": {"type": "boolean"},
    "lines": {"type": "array", "items": _STR},
    "criteria": {"type": "array", "items": _obj({
        "key": _STR, "title": _STR, "passed": {"type": "boolean"}, "detail": _STR, "seconds": _NUM,
    })},
})

RESULT_SCHEMAS = {
    "chib": CHIB,
    "dist": DIST,
    "forb": FORB,
    "maxdist": MAXDIST,
    "edit": EDIT,
    "bounds": BOUNDS,
    "construct": CONSTRUCT,
    "regularity": REGULARITY,
    "verify": VERIFY,
}


def command_schema(command: str) -> dict:
    """Schema of the full envelope printed by ``gel <command> --json``."""
    return {
        "$schema": "https://json-schema.org/draft/2020-12/schema",
        **_obj({
            "command": {"const": command},
            "parameters": {"type": "object"},
            "result": RESULT_SCHEMAS[command],
            "wall_time": _NUM,
            "nodes": _INT,
        }),
    }
