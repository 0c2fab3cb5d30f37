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
import pytest

from perioda.errors import InputError
from perioda.serialization import (
    DIVISOR_CHECK_INPUT_SCHEMA,
    DIVISOR_SOLVE_INPUT_SCHEMA,
    FUNCTION_SCHEMA,
    POINT_SCHEMA,
    RECONSTRUCT_INPUT_SCHEMA,
    REPORT_SCHEMA,
    WEIERSTRASS_INPUT_SCHEMA,
    validate_document,
)

FIFTH = {
    "lattice": [[1]],
    "entries": [{"point": {"rat": ["1/5"]}, "value": 1}],
}


@pytest.mark.parametrize(
    "document",
    [{"rat": [0]}, {"rat": ["1/2", "-3"], "irr": [1, "2/3"]}],
)
def test_valid_points(document):
    validate_document(document, POINT_SCHEMA)


@pytest.mark.parametrize(
    "document",
    [{"rat": []}, {"rat": [0.5]}, {"irr": [1]}, {"rat": [0], "x": 1}],
)
def test_invalid_points(document):
    with pytest.raises(InputError):
        validate_document(document, POINT_SCHEMA)


def test_function_schema():
    validate_document(FIFTH, FUNCTION_SCHEMA)
    validate_document({**FIFTH, "zero_value": "1/2"}, FUNCTION_SCHEMA)
    with pytest.raises(InputError) as exc:
        validate_document({"entries": []}, FUNCTION_SCHEMA)
    assert exc.value.witness == ""


def test_reconstruct_input_schema():
    document = {"gP": FIFTH, "gQ": FIFTH, "P": 2, "Q": 3}
    validate_document(document, RECONSTRUCT_INPUT_SCHEMA)
    validate_document(
        {**document, "window": {"bound": 2}}, RECONSTRUCT_INPUT_SCHEMA
    )
    with pytest.raises(InputError) as exc:
        validate_document({**document, "P": 1}, RECONSTRUCT_INPUT_SCHEMA)
    assert exc.value.witness == "P"
    bad = {
        "lattice": [[1]],
        "entries": [{"point": {"rat": ["1/5"]}, "value": "1/x"}],
    }
    with pytest.raises(InputError) as exc:
        validate_document({**document, "gQ": bad}, RECONSTRUCT_INPUT_SCHEMA)
    assert exc.value.witness == "gQ/entries/0/value"


def test_divisor_schemas():
    divisor = {**FIFTH, "lattice": [[1, 0], [0, 1]]}
    cocycle = {"d_sigma": divisor, "d_tau": divisor, "p": 2, "q": 3}
    validate_document(cocycle, DIVISOR_CHECK_INPUT_SCHEMA)
    validate_document(
        {"divisor": divisor, "lattice": [[1, 0], [0, 1]]},
        DIVISOR_CHECK_INPUT_SCHEMA,
    )
    with pytest.raises(InputError):
        validate_document(
            {**cocycle, "lattice": [[1, 0], [0, 1]]},
            DIVISOR_CHECK_INPUT_SCHEMA,
        )
    validate_document(
        {**cocycle, "lattice_f": [[5, 0], [0, 5]], "ord0_f": -1},
        DIVISOR_SOLVE_INPUT_SCHEMA,
    )
    with pytest.raises(InputError):
        validate_document(cocycle, DIVISOR_SOLVE_INPUT_SCHEMA)


def test_weierstrass_input_schema():
    validate_document(
        {"omega1": "1,0", "omega2": "0.3,1.2e0"}, WEIERSTRASS_INPUT_SCHEMA
    )
    with pytest.raises(InputError):
        validate_document(
            {"omega1": "1", "omega2": "0,1"}, WEIERSTRASS_INPUT_SCHEMA
        )


def test_report_schema_requires_a_witness_when_falsified():
    report = {"status": "verified", "command": "lemma1", "payload": {}}
    validate_document(report, REPORT_SCHEMA)
    with pytest.raises(InputError):
        validate_document({**report, "status": "falsified"}, REPORT_SCHEMA)
    validate_document(
        {**report, "status": "falsified", "witness": [1, 2]}, REPORT_SCHEMA
    )
    with pytest.raises(InputError):
        validate_document({**report, "status": "done"}, REPORT_SCHEMA)
