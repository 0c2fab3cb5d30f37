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
from .abel_jacobi import (
    PrincipalityCertificate,
    aj_sum,
    degree,
    principality_certificate,
)
from .cocycle import (
    CoboundarySolution,
    CocyclePair,
    CocycleReport,
    check_special_cocycle,
    constant_term_identity,
    ellipticity_lattices,
    injectivity_search,
    monomial_shift,
    solve_coboundary,
)
from .divisor import Divisor, as_divisor

__all__ = [
    'CoboundarySolution',
    'CocyclePair',
    'CocycleReport',
    'Divisor',
    'PrincipalityCertificate',
    'aj_sum',
    'as_divisor',
    'check_special_cocycle',
    'constant_term_identity',
    'degree',
    'ellipticity_lattices',
    'injectivity_search',
    'monomial_shift',
    'principality_certificate',
    'solve_coboundary',
]
