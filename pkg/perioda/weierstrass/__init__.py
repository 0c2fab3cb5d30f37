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
from .base import BaseWeierstrassEngine
from .complex_lattice import ComplexLattice
from .consistency import CocycleMatrices, consistency_residual
from .ellipticity import (
    reference_engine,
    verify_agreement,
    verify_consistency,
    verify_derivative,
    verify_elliptic,
    verify_quasi_periodicity,
    verify_suite,
)
from .engine_factory import EngineFactory
from .functions import ZetaCombination, g_pair
from .lattice_sum import LatticeSumEngine
from .probes import ResidualReport, sample_edge, sample_probes, sweep
from .qseries import QSeriesEngine

__all__ = [
    'BaseWeierstrassEngine',
    'CocycleMatrices',
    'ComplexLattice',
    'EngineFactory',
    'LatticeSumEngine',
    'QSeriesEngine',
    'ResidualReport',
    'ZetaCombination',
    'consistency_residual',
    'g_pair',
    'reference_engine',
    'sample_edge',
    'sample_probes',
    'sweep',
    'verify_agreement',
    'verify_consistency',
    'verify_derivative',
    'verify_elliptic',
    'verify_quasi_periodicity',
    'verify_suite',
]
