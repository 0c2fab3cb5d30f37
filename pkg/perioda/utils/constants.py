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
class Constants:
    # Default residual tolerance for every numeric contract of the
    # Weierstrass engine.
    DEFAULT_TOLERANCE = 1e-8

    # Step and tolerance of the central finite difference comparing the
    # derivative of zeta with minus wp.
    FINITE_DIFFERENCE_STEP = 1e-5
    FINITE_DIFFERENCE_TOLERANCE = 1e-5

    # Seed used by sweeps when the caller does not provide one.
    DEFAULT_SEED = 20200123

    # Environment variable capping the worker threads of probe sweeps.
    THREADS_ENV_VAR = "PERIODA_THREADS"

    # Number of extra telescope terms checked to vanish past the proven
    # stopping index.
    TELESCOPE_GUARD_TERMS = 2

    # Finite-difference probes keep this fraction of the shortest period
    # away from the poles.
    FINITE_DIFFERENCE_MARGIN = 0.25

    # Shift, in units of a + b, of the parallelogram on which the shifted
    # side of every periodicity identity is summed.
    CELL_OFFSET = 0.25
