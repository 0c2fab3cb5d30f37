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

from dataclasses import dataclass

from perioda.configs.base_config import BaseConfig
from perioda.types import EngineType
from perioda.utils import Constants


@dataclass(frozen=True)
class TruncationPolicy(BaseConfig):
    r"""Controls the accuracy of the Weierstrass engines.

    Args:
        radius (float, optional): Lattice points :math:`|\omega| \le R` enter
            the direct lattice sum. Only used by the lattice-sum engine.
            (default: :obj:`40.0`)
        tol (float, optional): Residual tolerance of every numeric contract.
            (default: :obj:`1e-8`)
        pole_guard_factor (float, optional): Probes closer than
            :math:`factor \cdot \min(|\omega_1|, |\omega_2|) / pq` to a pole
            are rejected. (default: :obj:`0.05`)
        engine (EngineType, optional): The evaluation strategy.
            (default: :obj:`EngineType.Q_SERIES`)
        max_terms (int, optional): Upper bound on the number of terms of the
            q-expansions. (default: :obj:`200`)
        max_retries (int, optional): How many times a probe too close to a
            pole is resampled before giving up. (default: :obj:`16`)
    """

    radius: float = 40.0
    tol: float = Constants.DEFAULT_TOLERANCE
    pole_guard_factor: float = 0.05
    engine: EngineType = EngineType.Q_SERIES
    max_terms: int = 200
    max_retries: int = 16

    def __post_init__(self) -> None:
        self._require(self.radius > 0, 'radius', "a positive value")
        self._require(self.tol > 0, 'tol', "a positive value")
        self._require(
            0 < self.pole_guard_factor < 0.5,
            'pole_guard_factor',
            "in (0, 0.5)",
        )
        self._require(self.max_terms >= 1, 'max_terms', "positive")
        self._require(self.max_retries >= 0, 'max_retries', "non-negative")
        object.__setattr__(self, 'engine', EngineType(self.engine))
