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
from .chains import (
    ChainReport,
    bounded_reconstruction,
    chain_decompose,
    chain_indices,
    max_chain_exponent,
    primitive_chain,
    primitive_chains,
)
from .congruence import CongruenceChain, congruence_chain
from .lemma import (
    ClosureReport,
    Lemma1Walk,
    equivalence_closure_bruteforce,
    lemma1_walk,
    sim_S,
)
from .periodicity import (
    PeriodicityCertificate,
    check_compatibility,
    reconstruct_periodic,
)
from .sublattice import SublatticeReport, independent_sublattice

__all__ = [
    'ChainReport',
    'ClosureReport',
    'CongruenceChain',
    'Lemma1Walk',
    'PeriodicityCertificate',
    'SublatticeReport',
    'bounded_reconstruction',
    'chain_decompose',
    'chain_indices',
    'check_compatibility',
    'congruence_chain',
    'equivalence_closure_bruteforce',
    'independent_sublattice',
    'lemma1_walk',
    'max_chain_exponent',
    'primitive_chain',
    'primitive_chains',
    'reconstruct_periodic',
    'sim_S',
]
