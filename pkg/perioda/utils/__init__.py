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
from .commons import (
    RationalLike,
    format_fraction,
    get_thread_count,
    is_multiplicatively_independent,
    lcm_all,
    ordered_map,
    parse_fraction,
    prime_set,
    prime_to_part,
    proportionality,
    solve_exponent_pair,
    solve_power,
    valuation,
)
from .constants import Constants

__all__ = [
    'Constants',
    'RationalLike',
    'format_fraction',
    'get_thread_count',
    'is_multiplicatively_independent',
    'lcm_all',
    'ordered_map',
    'parse_fraction',
    'prime_set',
    'prime_to_part',
    'proportionality',
    'solve_exponent_pair',
    'solve_power',
    'valuation',
]
