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

from dataclasses import dataclass, field

from perioda.configs.base_config import BaseConfig
from perioda.configs.window_config import WindowConfig
from perioda.utils import Constants


@dataclass(frozen=True)
class ReconstructConfig(BaseConfig):
    r"""Parameters of the periodicity reconstruction and its oracles.

    Args:
        window (WindowConfig, optional): Window on which the reconstructed
            function is compared with the telescoping sums.
            (default: :obj:`WindowConfig(bound=1, den_cap=2)`)
        closure_threshold_factor (int, optional): The brute-force closure of
            the valuation relations is expected to coincide with the
            residue classes once the range reaches
            :math:`factor \cdot N \cdot \prod S \cdot \prod T`.
            (default: :obj:`100`)
        telescope_guard (int, optional): Number of terms past the proven
            stopping index that must vanish. (default: :obj:`2`)
    """

    window: WindowConfig = field(
        default_factory=lambda: WindowConfig(bound=1, den_cap=2)
    )
    closure_threshold_factor: int = 100
    telescope_guard: int = Constants.TELESCOPE_GUARD_TERMS

    def __post_init__(self) -> None:
        self._require(
            self.closure_threshold_factor >= 1,
            'closure_threshold_factor',
            "a value larger than 0",
        )
        self._require(
            self.telescope_guard >= 0, 'telescope_guard', "non-negative"
        )
