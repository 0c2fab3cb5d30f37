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
from .json_codec import (
    PeriodaJSONEncoder,
    decode_divisor,
    decode_function,
    decode_lattice,
    decode_point,
    decode_telescope,
    decode_window,
    dumps,
    encode_divisor,
    encode_function,
    encode_lattice,
    encode_point,
    encode_telescope,
    encode_window,
    format_complex,
    loads,
    parse_complex,
)
from .schemas import (
    DIVISOR_CHECK_INPUT_SCHEMA,
    DIVISOR_SOLVE_INPUT_SCHEMA,
    FUNCTION_SCHEMA,
    LATTICE_SCHEMA,
    POINT_SCHEMA,
    RECONSTRUCT_INPUT_SCHEMA,
    REPORT_SCHEMA,
    TELESCOPE_SCHEMA,
    WEIERSTRASS_INPUT_SCHEMA,
    WINDOW_SCHEMA,
    validate_document,
)

__all__ = [
    'DIVISOR_CHECK_INPUT_SCHEMA',
    'DIVISOR_SOLVE_INPUT_SCHEMA',
    'FUNCTION_SCHEMA',
    'LATTICE_SCHEMA',
    'POINT_SCHEMA',
    'PeriodaJSONEncoder',
    'RECONSTRUCT_INPUT_SCHEMA',
    'REPORT_SCHEMA',
    'TELESCOPE_SCHEMA',
    'WEIERSTRASS_INPUT_SCHEMA',
    'WINDOW_SCHEMA',
    'decode_divisor',
    'decode_function',
    'decode_lattice',
    'decode_point',
    'decode_telescope',
    'decode_window',
    'dumps',
    'encode_divisor',
    'encode_function',
    'encode_lattice',
    'encode_point',
    'encode_telescope',
    'encode_window',
    'format_complex',
    'loads',
    'parse_complex',
    'validate_document',
]
