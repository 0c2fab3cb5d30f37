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
import cmath
import math

import pytest

from perioda.configs import TruncationPolicy
from perioda.errors import DomainError, InputError
from perioda.types import EngineType
from perioda.weierstrass import (
    ComplexLattice,
    EngineFactory,
    LatticeSumEngine,
    QSeriesEngine,
    g_pair,
    sample_probes,
)

pytestmark = pytest.mark.numeric

SQUARE = ComplexLattice(1, 1j)
SKEWED = ComplexLattice(1, 0.3 + 1.2j)


@pytest.fixture(params=[SQUARE, SKEWED], ids=["square", "skewed"])
def engine(request):
    return EngineFactory.create(request.param)


def test_factory_selects_the_engine():
    assert isinstance(EngineFactory.create(SQUARE), QSeriesEngine)
    policy = TruncationPolicy(engine="lattice-sum")
    assert policy.engine is EngineType.LATTICE_SUM
    assert isinstance(EngineFactory.create(SQUARE, policy), LatticeSumEngine)


def test_square_lattice_quasi_periods():
    engine = EngineFactory.create(SQUARE)
    eta1, eta2 = engine.quasi_periods()
    assert eta1 == pytest.approx(math.pi, abs=1e-10)
    assert eta2 == pytest.approx(-1j * math.pi, abs=1e-10)
    assert engine.legendre_residual() < 1e-10


def test_square_lattice_half_periods():
    engine = EngineFactory.create(SQUARE)
    e1 = engine.wp(0.5)
    assert abs(e1.imag) < 1e-10
    assert e1.real > 0
    assert engine.wp(0.5j) == pytest.approx(-e1, abs=1e-9)
    assert abs(engine.wp(0.5 + 0.5j)) < 1e-9


def test_parity(engine):
    for z in sample_probes(engine, 50, seed=1):
        assert abs(engine.zeta(-z) + engine.zeta(z)) < 1e-8
        assert abs(engine.wp(-z) - engine.wp(z)) < 1e-8


def test_periodicity_far_from_the_origin(engine):
    lattice = engine.lattice
    omega = 3 * lattice.omega1 - 2 * lattice.omega2
    eta = engine.eta(omega)
    eta1, eta2 = engine.quasi_periods()
    assert eta == pytest.approx(3 * eta1 - 2 * eta2, abs=1e-10)
    for z in sample_probes(engine, 50, seed=2):
        assert abs(engine.zeta(z + omega) - engine.zeta(z) - eta) < 1e-8
        assert abs(engine.wp(z + omega) - engine.wp(z)) < 1e-8


def test_quasi_periods_are_additive(engine):
    lattice = engine.lattice
    eta1, eta2 = engine.quasi_periods()
    omega = lattice.omega1 + lattice.omega2
    assert engine.eta(omega) == pytest.approx(eta1 + eta2, abs=1e-10)
    z = sample_probes(engine, 1, seed=3)[0]
    measured = engine.zeta(z + omega) - engine.zeta(z)
    assert measured == pytest.approx(eta1 + eta2, abs=1e-8)


def test_value_does_not_depend_on_the_cell(engine):
    for z in sample_probes(engine, 30, seed=14, scale=6):
        for k in (1, 2, 6):
            assert engine.zeta_unchecked(k * z, 0.25) == pytest.approx(
                engine.zeta_unchecked(k * z), abs=1e-9
            )


def test_quasi_periods_at_the_half_periods(engine):
    assert engine.half_period_quasi_periods() == pytest.approx(
        engine.quasi_periods(), abs=1e-10
    )
    assert engine.legendre_residual() < 1e-10


def test_eta_rejects_non_lattice_vectors():
    engine = EngineFactory.create(SQUARE)
    with pytest.raises(InputError):
        engine.eta(0)
    with pytest.raises(InputError):
        engine.eta(0.5)


def test_laurent_expansion_at_the_origin(engine):
    z = 1e-3 * cmath.exp(0.7j)
    assert engine.zeta_unchecked(z) * z == pytest.approx(1, abs=1e-9)
    assert engine.wp_unchecked(z) * z**2 == pytest.approx(1, abs=1e-9)


def test_pole_guard():
    engine = EngineFactory.create(SQUARE)
    for z in (0.01, 1 + 0.01j, 1j - 0.02):
        with pytest.raises(DomainError):
            engine.zeta(z)
        with pytest.raises(DomainError):
            engine.wp(z)
    with pytest.raises(DomainError):
        g_pair(2, 3, 1 / 6 + 0.001, engine)


def test_homogeneity():
    c = 2 * cmath.exp(1j * math.pi / 6)
    base = EngineFactory.create(SKEWED)
    scaled = EngineFactory.create(
        ComplexLattice(c * SKEWED.omega1, c * SKEWED.omega2)
    )
    for z in sample_probes(base, 20, seed=4):
        assert scaled.zeta(c * z) == pytest.approx(base.zeta(z) / c, abs=1e-9)
        assert scaled.wp(c * z) == pytest.approx(
            base.wp(z) / c**2, abs=1e-9
        )


def test_finite_difference_derivative(engine):
    for z in sample_probes(engine, 20, seed=5, min_distance=0.25):
        assert engine.derivative_residual(z, 1e-5) < 1e-5


@pytest.mark.filterwarnings("ignore::UserWarning")
@pytest.mark.parametrize("lattice", [SQUARE, SKEWED])
def test_lattice_sum_agrees_with_the_q_series(lattice):
    q_series = EngineFactory.create(lattice)
    lattice_sum = EngineFactory.create(
        lattice, TruncationPolicy(engine="lattice-sum", radius=80)
    )
    for z in sample_probes(q_series, 20, seed=6):
        assert lattice_sum.zeta(z) == pytest.approx(
            q_series.zeta(z), abs=1e-3
        )
        assert lattice_sum.wp(z) == pytest.approx(q_series.wp(z), abs=1e-2)
    assert lattice_sum.legendre_residual() < 1e-2


def test_lattice_sum_warns_about_its_tail():
    engine = LatticeSumEngine(SQUARE, TruncationPolicy(radius=5))
    with pytest.warns(UserWarning, match="tail bound"):
        engine.zeta(0.4 + 0.3j)


def test_lattice_sum_tail_bound_shrinks_with_the_radius():
    small = LatticeSumEngine(SQUARE, TruncationPolicy(radius=20))
    large = LatticeSumEngine(SQUARE, TruncationPolicy(radius=40))
    w = 0.4 + 0.3j
    assert small.zeta_error_bound(w) == pytest.approx(
        4 * large.zeta_error_bound(w)
    )
    assert small.wp_error_bound(w) == pytest.approx(
        4 * large.wp_error_bound(w)
    )
