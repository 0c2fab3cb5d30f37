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
from fractions import Fraction

import numpy as np
import pytest

from perioda.configs import WindowConfig
from perioda.divisors import Divisor
from perioda.errors import InputError
from perioda.lattices import Lattice, Point, Scalar
from perioda.serialization import (
    decode_divisor,
    decode_function,
    decode_point,
    decode_telescope,
    decode_window,
    dumps,
    encode_function,
    encode_point,
    encode_window,
    format_complex,
    loads,
    parse_complex,
)
from perioda.sparse import QuasiPeriodicFn
from perioda.types import ReportStatus

Z = Lattice.standard(1)
ALPHA = Point((Scalar("1/3", 1),))


def test_encode_point():
    assert encode_point(ALPHA) == {"rat": ["1/3"], "irr": ["1/1"]}
    assert encode_point(Point.of("-2/4", 3)) == {
        "rat": ["-1/2", "3/1"],
        "irr": ["0/1", "0/1"],
    }


def test_decode_point_defaults_to_m():
    assert decode_point({"rat": ["1/2", 0]}) == Point.of("1/2", 0)
    assert decode_point({"rat": ["1/3"], "irr": [1]}) == ALPHA


def test_decode_function():
    document = {
        "lattice": [[1]],
        "entries": [
            {"point": {"rat": ["6/5"]}, "value": "1/2"},
            {"point": {"rat": ["1/3"], "irr": ["1"]}, "value": -3},
        ],
    }
    f = decode_function(document)
    assert f(Point.of("1/5")) == Fraction(1, 2)
    assert f(ALPHA) == -3
    assert f.zero_value == 0
    assert decode_function(encode_function(f)) == f


def test_decode_function_rejects_bad_values():
    document = {
        "lattice": [[1]],
        "entries": [{"point": {"rat": ["1/5"]}, "value": "1/0"}],
    }
    with pytest.raises(InputError):
        decode_function(document)


def test_decode_divisor_takes_the_zero_coset_value():
    document = {
        "lattice": [[1, 0], [0, 1]],
        "entries": [
            {"point": {"rat": [0, 0]}, "value": -2},
            {"point": {"rat": ["1/2", 0]}, "value": 2},
        ],
    }
    d = decode_divisor(document)
    assert isinstance(d, Divisor)
    assert d.value_at_zero == -2
    assert d.underlying.zero_value == -2
    with pytest.raises(InputError):
        decode_divisor({**document, "integer": False})
    with pytest.raises(InputError):
        decode_divisor({**document, "zero_value": 0})


def test_decode_telescope():
    f = decode_telescope(
        {
            "g": {
                "lattice": [[1]],
                "entries": [{"point": {"rat": [0], "irr": [1]}, "value": 1}],
            },
            "m": 3,
        }
    )
    assert f(Point((Scalar(0, 27),))) == 1
    assert f.m == 3


def test_window_codec():
    assert decode_window({}) == WindowConfig()
    window = decode_window(
        {"bound": 2, "alpha_probes": [{"rat": [0], "irr": [1]}]}
    )
    assert window.bound == 2
    assert window.den_cap == WindowConfig().den_cap
    assert encode_window(window)["alpha_probes"] == [
        {"rat": ["0/1"], "irr": ["1/1"]}
    ]


def test_dumps_is_canonical():
    document = {"b": Fraction(2, 4), "a": [np.int64(3), np.float64(0.5)]}
    assert dumps(document) == '{"a":[3,0.5],"b":"1/2"}'
    assert dumps(ReportStatus.VERIFIED) == '"verified"'
    assert dumps(1 + 2j) == '"1.0,2.0"'
    assert dumps(Z) == "[[1]]"
    with pytest.raises(TypeError):
        dumps(object())


def test_loads_rejects_malformed_text():
    assert loads('{"a": 1}') == {"a": 1}
    with pytest.raises(InputError):
        loads('{"a": ')


@pytest.mark.parametrize(
    "text, value", [("1,2", 1 + 2j), (" -0.5 , 1e-3 ", -0.5 + 0.001j)]
)
def test_parse_complex(text, value):
    assert parse_complex(text) == value


@pytest.mark.parametrize("text", ["1", "1,2,3", "a,b"])
def test_parse_complex_rejects_malformed_text(text):
    with pytest.raises(InputError):
        parse_complex(text)


def test_format_complex():
    assert format_complex(0.3 + 1.2j) == "0.3,1.2"
    assert parse_complex(format_complex(1 / 3 - 2j)) == 1 / 3 - 2j


def test_dumps_a_function():
    f = QuasiPeriodicFn(Z, {Point.of("1/5"): 1}, zero_value="1/2")
    assert dumps(f) == (
        '{"entries":[{"point":{"irr":["0/1"],"rat":["1/5"]},"value":"1/1"}],'
        '"lattice":[[1]],"zero_value":"1/2"}'
    )
