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
from __future__ import annotations

from abc import ABC
from dataclasses import dataclass

from perioda.errors import InputError


@dataclass(frozen=True)
class BaseConfig(ABC):  # noqa: B024
    r"""Base class of the frozen configuration records.

    Subclasses validate their fields in :obj:`__post_init__`.
    """

    def _require(self, condition: bool, name: str, expected: str) -> None:
        r"""Raises :obj:`InputError` naming the field :obj:`name` unless
        :obj:`condition` holds.
        """
        if not condition:
            raise InputError(
                f"`{name}` should be {expected}, got {getattr(self, name)}."
            )
