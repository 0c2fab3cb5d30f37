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
from enum import Enum, IntEnum


class ReportStatus(Enum):
    VERIFIED = "verified"
    FALSIFIED = "falsified"
    ERROR = "error"

    @property
    def needs_witness(self) -> bool:
        r"""Returns whether a report with this status must carry a
        witness."""
        return self is ReportStatus.FALSIFIED


class ExitCode(IntEnum):
    SUCCESS = 0
    FALSIFIED = 1
    INVALID_INPUT = 2
    INTERNAL = 3


class CommandType(Enum):
    RECONSTRUCT = "reconstruct"
    LEMMA1 = "lemma1"
    CLOSURE = "closure"
    COUNTEREXAMPLE = "counterexample"
    DIVISOR_SOLVE = "divisor-solve"
    DIVISOR_CHECK = "divisor-check"
    WEIERSTRASS_VERIFY = "weierstrass-verify"
    SELFTEST = "selftest"

    @property
    def needs_input(self) -> bool:
        r"""Returns whether the command reads its instance from an input
        file."""
        return self in {
            CommandType.RECONSTRUCT,
            CommandType.DIVISOR_SOLVE,
            CommandType.DIVISOR_CHECK,
        }


class EngineType(Enum):
    r"""Evaluation strategies for the Weierstrass functions."""

    Q_SERIES = "q-series"
    LATTICE_SUM = "lattice-sum"


class OutputFormat(Enum):
    JSON = "json"
    TEXT = "text"
