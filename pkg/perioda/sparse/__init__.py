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
from .base import BaseSparseFn, dilate_diff
from .comparison import EqualityReport, equal_on_cosets, equal_on_window
from .counterexample import counterexample_function, unboundedness_profile
from .lazy import DilationDifferenceFn, TranslatedFn, translate
from .quasi_periodic import QuasiPeriodicFn
from .support import dilation_orbit, support_cosets
from .telescope import TelescopeFn, telescope

__all__ = [
    'BaseSparseFn',
    'DilationDifferenceFn',
    'EqualityReport',
    'QuasiPeriodicFn',
    'TelescopeFn',
    'TranslatedFn',
    'counterexample_function',
    'dilate_diff',
    'dilation_orbit',
    'equal_on_cosets',
    'equal_on_window',
    'support_cosets',
    'telescope',
    'translate',
    'unboundedness_profile',
]
