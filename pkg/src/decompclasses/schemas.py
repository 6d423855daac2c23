"""JSON Schemas (draft 2020-12) for every JSON document the CLI emits.

Plain dictionaries, so they can be published or fed to any validator.
"""
from __future__ import annotations

DIALECT = "https://json-schema.org/draft/2020-12/schema"

_nat = {"type": "integer", "minimum": 0}
_pos = {"type": "integer", "minimum": 1}
PARTITION = {"type": "array", "items": _pos}
BLOCKS = {
    "type": "array",
    "minItems": 1,
    "items": {"type": "array", "prefixItems": [_pos, PARTITION], "minItems": 2, "maxItems": 2},
}
_group = {"enum": ["GL", "PGL"]}


def _obj(props: dict, required=None, **extra) -> dict:
    return {
        "type": "object",
        "properties": props,
        "required": list(props) if required is None else required,
        "additionalProperties": False,
        **extra,
    }


CLASS = _obj(
    {
        "blocks": BLOCKS,
        "dim": _nat,
        "level": _nat,
        "sheet_dense": {"type": "boolean"},
        "isolated": {"type": "boolean"},
        "sheet_nilpotent": PARTITION,
    },
    required=["blocks", "dim", "level", "sheet_dense", "isolated"],
)

CLASSES = _obj({"group": _group, "n": _pos, "classes": {"type": "array", "items": CLASS}})

HASSE = _obj({
    "group": _group,
    "n": _pos,
    "nodes": {"type": "array", "items": CLASS},
    "covers": {
        "type": "array",
        "items": {"type": "array", "prefixItems": [_nat, _nat], "minItems": 2, "maxItems": 2},
    },
})

SHEETS = _obj({
    "group": _group,
    "n": _pos,
    "levels": {
        "type": "array",
        "items": _obj({
            "level": _nat,
            "classes": {"type": "array", "items": CLASS},
            "sheets": {
                "type": "array",
                "items": _obj({"dense": BLOCKS, "nilpotent": PARTITION, "isolated": {"type": "boolean"}}),
            },
        }),
    },
})

INDUCE = _obj({
    "blocks": BLOCKS,
    "tags": {"type": "array", "items": {"type": "string"}},
    "induced": {"type": "array", "items": _obj({"tag": {"type": "string"}, "partition": PARTITION})},
    "levi_dim": _pos,
    "orbit_dim": _nat,
    "induced_orbit_dim": _nat,
})

STABTYPE = _obj({
    "datum": {"type": "string"},
    "p": _nat,
    "verdicts": {
        "type": "array",
        "items": _obj(
            {
                "levi": {"type": "string"},
                "blocks": {"type": "array", "items": _pos},
                "root_indices": {"type": "array", "items": _nat},
                "stabiliser_type": {"type": "boolean"},
            },
            required=["levi", "root_indices", "stabiliser_type"],
        ),
    },
})

VERIFY = _obj({
    "check": {"enum": ["closure", "induction"]},
    "n": _pos,
    "seed": {"type": "integer"},
    "cases": _nat,
    "mismatches": {"type": "array", "items": {"type": "string"}},
    "ok": {"type": "boolean"},
})

MICRO = _obj({
    "p": _pos,
    "k": _pos,
    "modulus": {"type": "array", "items": _nat},
    "control": {"type": "boolean"},
    "rows": {
        "type": "array",
        "items": _obj({
            "element": {"type": "string"},
            "centraliser_dim": _nat,
            "stabiliser_dim": _nat,
            "nilpotent": {"type": "boolean"},
        }),
    },
    "checks": {"type": "object", "additionalProperties": {"type": "boolean"}},
    "ok": {"type": "boolean"},
})

_PLAIN = {
    "class": CLASS,
    "classes": CLASSES,
    "hasse": HASSE,
    "sheets": SHEETS,
    "induce": INDUCE,
    "stabtype": STABTYPE,
    "verify": VERIFY,
    "micro": MICRO,
}

SCHEMAS = {name: {"$schema": DIALECT, **schema} for name, schema in _PLAIN.items()}
