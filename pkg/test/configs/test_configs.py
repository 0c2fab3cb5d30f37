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
from fractions import Fraction

import pytest

from perioda.configs import ReconstructConfig, TruncationPolicy, WindowConfig
from perioda.errors import InputError
from perioda.lattices import Point, Scalar
from perioda.types import EngineType


def test_window_config_defaults():
    config = WindowConfig()
    assert config.bound == 4
    assert config.den_cap == 6
    assert config.alpha_probes == ()


def test_window_coordinate_values_use_divisors_of_the_cap():
    values = WindowConfig(bound=1, den_cap=2).coordinate_values()
    assert values == [
        Fraction(-1),
        Fraction(-1, 2),
        Fraction(0),
        Fraction(1, 2),
        Fraction(1),
    ]
    values = WindowConfig(bound=1, den_cap=6).coordinate_values()
    assert Fraction(1, 3) in values
    assert Fraction(1, 4) not in values


def test_window_points_end_with_the_probes():
    probe = Point((Scalar(0, 1), Scalar(1)))
    config = WindowConfig(bound=1, den_cap=1).with_probes([probe])
    points = config.points(2)
    assert len(points) == 10
    assert points[0] == Point.of(0, 0)
    assert points[-1] == probe
    with pytest.raises(InputError):
        config.points(1)


@pytest.mark.parametrize(
    "kwargs", [{"bound": 0}, {"den_cap": 0}, {"bound": -3}]
)
def test_window_config_rejects_bad_values(kwargs):
    with pytest.raises(InputError):
        WindowConfig(**kwargs)


def test_reconstruct_config_defaults():
    config = ReconstructConfig()
    assert config.window == WindowConfig(bound=1, den_cap=2)
    assert config.closure_threshold_factor == 100
    assert config.telescope_guard == 2
    with pytest.raises(InputError):
        ReconstructConfig(closure_threshold_factor=0)
    with pytest.raises(InputError):
        ReconstructConfig(telescope_guard=-1)


def test_truncation_policy_normalises_the_engine():
    policy = TruncationPolicy(engine="lattice-sum")
    assert policy.engine is EngineType.LATTICE_SUM
    assert TruncationPolicy().engine is EngineType.Q_SERIES
    assert TruncationPolicy().tol == 1e-8


@pytest.mark.parametrize(
    "kwargs",
    [
        {"radius": 0},
        {"tol": -1.0},
        {"pole_guard_factor": 0.5},
        {"max_terms": 0},
        {"max_retries": -1},
    ],
)
def test_truncation_policy_rejects_bad_values(kwargs):
    with pytest.raises(InputError):
        TruncationPolicy(**kwargs)


def test_truncation_policy_rejects_unknown_engines():
    with pytest.raises(ValueError):
        TruncationPolicy(engine="abacus")
