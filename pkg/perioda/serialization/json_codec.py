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
import json
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List

import numpy as np

from perioda.configs import WindowConfig
from perioda.divisors.divisor import Divisor
from perioda.errors import InputError
from perioda.lattices import Lattice, Point
from perioda.sparse import QuasiPeriodicFn, TelescopeFn
from perioda.utils import format_fraction, parse_fraction


def encode_point(point: Point) -> Dict[str, List[str]]:
    return {
        "rat": [format_fraction(v) for v in point.rat],
        "irr": [format_fraction(v) for v in point.irr],
    }


def decode_point(document: Dict[str, Any]) -> Point:
    return Point.from_parts(document["rat"], document.get("irr") or ())


def encode_lattice(lattice: Lattice) -> List[List[int]]:
    return [list(row) for row in lattice.basis]


def decode_lattice(document: List[List[int]]) -> Lattice:
    return Lattice(tuple(tuple(row) for row in document))


def encode_function(f: QuasiPeriodicFn) -> Dict[str, Any]:
    return {
        "lattice": encode_lattice(f.lattice),
        "entries": [
            {"point": encode_point(key), "value": format_fraction(value)}
            for key, value in f.entries.items()
        ],
        "zero_value": format_fraction(f.zero_value),
    }


def decode_function(document: Dict[str, Any]) -> QuasiPeriodicFn:
    lattice = decode_lattice(document["lattice"])
    entries = [
        (decode_point(item["point"]), parse_fraction(item["value"]))
        for item in document["entries"]
    ]
    return QuasiPeriodicFn(
        lattice, entries, parse_fraction(document.get("zero_value", 0))
    )


def encode_telescope(f: TelescopeFn) -> Dict[str, Any]:
    return {"g": encode_function(f.g), "m": f.m}


def decode_telescope(document: Dict[str, Any]) -> TelescopeFn:
    return TelescopeFn(decode_function(document["g"]), document["m"])


def encode_divisor(d: Divisor) -> Dict[str, Any]:
    return {**encode_function(d.underlying), "integer": True}


def decode_divisor(document: Dict[str, Any]) -> Divisor:
    r"""Decodes a divisor. A missing ``zero_value`` defaults to the value
    of the :math:`0`-coset, since divisors carry no modification at
    :math:`0`."""
    if document.get("integer") is False:
        raise InputError("Divisors must be flagged as integer-valued.")
    underlying = decode_function(document)
    if "zero_value" not in document:
        underlying = underlying.with_zero_value(underlying.zero_coset_value)
    return Divisor(underlying)


def encode_window(window: WindowConfig) -> Dict[str, Any]:
    return {
        "bound": window.bound,
        "den_cap": window.den_cap,
        "alpha_probes": [encode_point(p) for p in window.alpha_probes],
    }


def decode_window(document: Dict[str, Any]) -> WindowConfig:
    defaults = WindowConfig()
    return WindowConfig(
        bound=document.get("bound", defaults.bound),
        den_cap=document.get("den_cap", defaults.den_cap),
        alpha_probes=tuple(
            decode_point(p) for p in document.get("alpha_probes", ())
        ),
    )


def parse_complex(text: str) -> complex:
    r"""Parses a complex number written as ``"re,im"``."""
    try:
        re_part, im_part = text.split(",")
        return complex(float(re_part), float(im_part))
    except ValueError:
        raise InputError(f"Malformed complex number {text!r}.")


def format_complex(value: complex) -> str:
    return f"{value.real!r},{value.imag!r}"


class PeriodaJSONEncoder(json.JSONEncoder):
    r"""A JSON encoder for the exact and numeric types of :mod:`perioda`.
    Rationals become ``"num/den"`` strings so no precision is lost.
    """

    def default(self, obj) -> Any:
        if isinstance(obj, Fraction):
            return format_fraction(obj)
        if isinstance(obj, Point):
            return encode_point(obj)
        if isinstance(obj, Lattice):
            return encode_lattice(obj)
        if isinstance(obj, Divisor):
            return encode_divisor(obj)
        if isinstance(obj, QuasiPeriodicFn):
            return encode_function(obj)
        if isinstance(obj, TelescopeFn):
            return encode_telescope(obj)
        if isinstance(obj, Enum):
            return obj.value
        if isinstance(obj, (complex, np.complexfloating)):
            return format_complex(complex(obj))
        if isinstance(obj, np.floating):
            return float(obj)
        if isinstance(obj, np.integer):
            return int(obj)
        # Let the base class default method raise the TypeError
        return json.JSONEncoder.default(self, obj)


def dumps(document: Any) -> str:
    r"""Serializes deterministically: sorted keys and fixed separators."""
    return json.dumps(
        document, cls=PeriodaJSONEncoder, sort_keys=True, separators=(",", ":")
    )


def loads(text: str) -> Any:
    r"""Parses JSON text, turning syntax errors into :obj:`InputError`."""
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"Malformed JSON: {exc}.")
