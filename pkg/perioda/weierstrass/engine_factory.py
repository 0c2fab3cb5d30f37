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
from typing import Any, Optional

from perioda.configs import TruncationPolicy
from perioda.errors import InputError
from perioda.types import EngineType
from perioda.weierstrass.base import BaseWeierstrassEngine
from perioda.weierstrass.complex_lattice import ComplexLattice
from perioda.weierstrass.lattice_sum import LatticeSumEngine
from perioda.weierstrass.qseries import QSeriesEngine


class EngineFactory:
    r"""Factory of Weierstrass engines.

    Raises:
        InputError: in case the provided engine type is unknown.
    """

    @staticmethod
    def create(
        lattice: ComplexLattice,
        policy: Optional[TruncationPolicy] = None,
    ) -> BaseWeierstrassEngine:
        r"""Creates the engine selected by :obj:`policy.engine`.

        Args:
            lattice (ComplexLattice): The period lattice.
            policy (Optional[TruncationPolicy]): Accuracy settings and
                engine choice. (default: :obj:`None`)

        Raises:
            InputError: If there is no engine of the requested type.

        Returns:
            BaseWeierstrassEngine: The initialized engine.
        """
        policy = policy or TruncationPolicy()
        engine_class: Any
        if policy.engine == EngineType.Q_SERIES:
            engine_class = QSeriesEngine
        elif policy.engine == EngineType.LATTICE_SUM:
            engine_class = LatticeSumEngine
        else:
            raise InputError(f"Unknown engine type `{policy.engine}` is input")
        return engine_class(lattice, policy)
