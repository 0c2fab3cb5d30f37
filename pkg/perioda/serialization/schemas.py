# ========= Copyright 2024 @ Perioda Authors. All Rights Reserved. =========
# Licensed under the Apache License, Version 2.0 (the “License”);
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an “AS IS” BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
# ========= Copyright 2024 @ Perioda Authors. All Rights Reserved. =========
from typing import Any, Dict

from jsonschema.validators import Draft202012Validator as JSONValidator

from perioda.errors import InputError

_DEFS: Dict[str, Any] = {
    "rational": {
        "oneOf": [
            {"type": "integer"},
            {"type": "string", "pattern": r"^\s*-?\d+(\s*/\s*\d+)?\s*$"},
        ]
    },
    "point": {
        "type": "object",
        "properties": {
            "rat": {
                "type": "array",
                "items": {"$ref": "#/$defs/rational"},
                "minItems": 1,
            },
            "irr": {"type": "array", "items": {"$ref": "#/$defs/rational"}},
        },
        "required": ["rat"],
        "additionalProperties": False,
    },
    "lattice": {
        "type": "array",
        "items": {
            "type": "array",
            "items": {"type": "integer"},
            "minItems": 1,
        },
        "minItems": 1,
    },
    "function": {
        "type": "object",
        "properties": {
            "lattice": {"$ref": "#/$defs/lattice"},
            "entries": {
                "type": "array",
                "items": {
                    "type": "object",
                    "properties": {
                        "point": {"$ref": "#/$defs/point"},
                        "value": {"$ref": "#/$defs/rational"},
                    },
                    "required": ["point", "value"],
                    "additionalProperties": False,
                },
            },
            "zero_value": {"$ref": "#/$defs/rational"},
            "integer": {"type": "boolean"},
        },
        "required": ["lattice", "entries"],
        "additionalProperties": False,
    },
    "telescope": {
        "type": "object",
        "properties": {
            "g": {"$ref": "#/$defs/function"},
            "m": {"type": "integer", "minimum": 2},
        },
        "required": ["g", "m"],
        "additionalProperties": False,
    },
    "complex": {
        "type": "string",
        "pattern": r"^\s*[-+0-9.eE]+\s*,\s*[-+0-9.eE]+\s*$",
    },
    "window": {
        "type": "object",
        "properties": {
            "bound": {"type": "integer", "minimum": 1},
            "den_cap": {"type": "integer", "minimum": 1},
            "alpha_probes": {
                "type": "array",
                "items": {"$ref": "#/$defs/point"},
            },
        },
        "additionalProperties": False,
    },
    "dilation": {"type": "integer", "minimum": 2},
}


def _schema(body: Dict[str, Any]) -> Dict[str, Any]:
    return {
        "$schema": "https://json-schema.org/draft/2020-12/schema",
        "$defs": _DEFS,
        **body,
    }


POINT_SCHEMA = _schema({"$ref": "#/$defs/point"})
LATTICE_SCHEMA = _schema({"$ref": "#/$defs/lattice"})
FUNCTION_SCHEMA = _schema({"$ref": "#/$defs/function"})
TELESCOPE_SCHEMA = _schema({"$ref": "#/$defs/telescope"})
WINDOW_SCHEMA = _schema({"$ref": "#/$defs/window"})

RECONSTRUCT_INPUT_SCHEMA = _schema(
    {
        "type": "object",
        "properties": {
            "gP": {"$ref": "#/$defs/function"},
            "gQ": {"$ref": "#/$defs/function"},
            "P": {"$ref": "#/$defs/dilation"},
            "Q": {"$ref": "#/$defs/dilation"},
            "window": {"$ref": "#/$defs/window"},
        },
        "required": ["gP", "gQ", "P", "Q"],
        "additionalProperties": False,
    }
)

_COCYCLE_PROPERTIES = {
    "d_sigma": {"$ref": "#/$defs/function"},
    "d_tau": {"$ref": "#/$defs/function"},
    "p": {"$ref": "#/$defs/dilation"},
    "q": {"$ref": "#/$defs/dilation"},
}

DIVISOR_SOLVE_INPUT_SCHEMA = _schema(
    {
        "type": "object",
        "properties": {
            **_COCYCLE_PROPERTIES,
            "lattice_f": {"$ref": "#/$defs/lattice"},
            "ord0_f": {"type": "integer"},
        },
        "required": ["d_sigma", "d_tau", "p", "q", "lattice_f"],
        "additionalProperties": False,
    }
)

DIVISOR_CHECK_INPUT_SCHEMA = _schema(
    {
        "oneOf": [
            {
                "type": "object",
                "properties": {
                    "divisor": {"$ref": "#/$defs/function"},
                    "lattice": {"$ref": "#/$defs/lattice"},
                },
                "required": ["divisor", "lattice"],
                "additionalProperties": False,
            },
            {
                "type": "object",
                "properties": _COCYCLE_PROPERTIES,
                "required": ["d_sigma", "d_tau", "p", "q"],
                "additionalProperties": False,
            },
        ]
    }
)

WEIERSTRASS_INPUT_SCHEMA = _schema(
    {
        "type": "object",
        "properties": {
            "omega1": {"$ref": "#/$defs/complex"},
            "omega2": {"$ref": "#/$defs/complex"},
            "p": {"$ref": "#/$defs/dilation"},
            "q": {"$ref": "#/$defs/dilation"},
        },
        "required": ["omega1", "omega2"],
        "additionalProperties": False,
    }
)

REPORT_SCHEMA = _schema(
    {
        "type": "object",
        "properties": {
            "status": {"enum": ["verified", "falsified", "error"]},
            "command": {"type": "string"},
            "payload": {"type": "object"},
            "witness": {},
        },
        "required": ["status", "command", "payload"],
        "if": {"properties": {"status": {"const": "falsified"}}},
        "then": {"required": ["witness"]},
        "additionalProperties": False,
    }
)


def validate_document(document: Any, schema: Dict[str, Any]) -> None:
    r"""Validates a decoded JSON document against a schema.

    Args:
        document (Any): The decoded document.
        schema (Dict[str, Any]): One of the schemas of this module.

    Raises:
        InputError: With the first violation (in document order) as
            message and its path as witness.
    """
    errors = sorted(
        JSONValidator(schema).iter_errors(document),
        key=lambda e: [str(part) for part in e.absolute_path],
    )
    if errors:
        error = errors[0]
        path = "/".join(str(part) for part in error.absolute_path)
        raise InputError(
            f"Invalid document at '/{path}': {error.message}", witness=path
        )
