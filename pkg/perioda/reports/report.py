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
from dataclasses import dataclass, field
from typing import Any, Dict, Optional

from colorama import Fore

from perioda.errors import InputError, InternalError
from perioda.serialization import (
    REPORT_SCHEMA,
    dumps,
    loads,
    validate_document,
)
from perioda.types import CommandType, ReportStatus

_STATUS_COLORS = {
    ReportStatus.VERIFIED: Fore.GREEN,
    ReportStatus.FALSIFIED: Fore.RED,
    ReportStatus.ERROR: Fore.YELLOW,
}


@dataclass(frozen=True)
class Report:
    r"""The outcome of one command.

    Payload and witness are normalised to plain JSON values on
    construction, so a report equals the report decoded from its own JSON.

    Args:
        status (ReportStatus): The verdict.
        command (CommandType): The command that produced the report.
        payload (Dict[str, Any], optional): Certificates and measurements.
            (default: :obj:`{}`)
        witness (Any, optional): A concrete counterexample; required when
            the status is falsified. (default: :obj:`None`)
        elapsed (float, optional): Wall time in seconds. It is shown in the
            text format only, so JSON output stays reproducible.
            (default: :obj:`0.0`)

    Raises:
        InternalError: If a falsified report carries no witness.
    """

    status: ReportStatus
    command: CommandType
    payload: Dict[str, Any] = field(default_factory=dict)
    witness: Optional[Any] = None
    elapsed: float = field(default=0.0, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, 'status', ReportStatus(self.status))
        object.__setattr__(self, 'command', CommandType(self.command))
        object.__setattr__(self, 'payload', loads(dumps(self.payload)))
        if self.witness is not None:
            object.__setattr__(self, 'witness', loads(dumps(self.witness)))
        if self.status.needs_witness and self.witness is None:
            raise InternalError(
                f"A {self.status.value} report needs a witness."
            )

    def to_dict(self) -> Dict[str, Any]:
        result: Dict[str, Any] = {
            "status": self.status.value,
            "command": self.command.value,
            "payload": self.payload,
        }
        if self.witness is not None:
            result["witness"] = self.witness
        return result

    @classmethod
    def from_dict(cls, document: Dict[str, Any]) -> "Report":
        r"""Decodes a report after validating it against the report
        schema.

        Raises:
            InputError: If the document is not a valid report.
        """
        validate_document(document, REPORT_SCHEMA)
        try:
            return cls(
                document["status"],
                document["command"],
                document["payload"],
                document.get("witness"),
            )
        except ValueError as exc:
            raise InputError(f"Malformed report: {exc}")

    def to_json(self) -> str:
        r"""Serializes the report deterministically."""
        return dumps(self.to_dict())

    def to_text(self) -> str:
        r"""A coloured, human-readable summary."""
        color = _STATUS_COLORS[self.status]
        lines = [
            f"{color}{self.command.value}: {self.status.value}{Fore.RESET} "
            f"({self.elapsed:.3f} s)"
        ]
        for key in sorted(self.payload):
            lines.append(f"  {key}: {dumps(self.payload[key])}")
        if self.witness is not None:
            lines.append(
                f"  {Fore.RED}witness{Fore.RESET}: {dumps(self.witness)}"
            )
        return "\n".join(lines)
