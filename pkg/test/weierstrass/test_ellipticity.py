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
import pytest

from perioda.configs import TruncationPolicy
from perioda.errors import DomainError, InputError
from perioda.weierstrass import (
    CocycleMatrices,
    ComplexLattice,
    EngineFactory,
    LatticeSumEngine,
    QSeriesEngine,
    ZetaCombination,
    consistency_residual,
    g_pair,
    reference_engine,
    sample_edge,
    sample_probes,
    sweep,
    verify_agreement,
    verify_consistency,
    verify_elliptic,
    verify_quasi_periodicity,
    verify_suite,
)

pytestmark = pytest.mark.numeric

LATTICES = [ComplexLattice(1, 1j), ComplexLattice(1, 0.3 + 1.2j)]
PAIRS = [(2, 3), (3, 5), (2, 5)]


@pytest.mark.parametrize("lattice", LATTICES, ids=["square", "skewed"])
@pytest.mark.parametrize("p, q", PAIRS)
def test_numeric_suite(lattice, p, q):
    engine = EngineFactory.create(lattice)
    reports = verify_suite(engine, p, q, samples=100)
    for report in reports:
        assert report.passed, report.to_dict()
    assert [r.name for r in reports][:2] == [
        "legendre",
        "zeta quasi-periodicity",
    ]


def test_zeta_itself_is_not_elliptic():
    engine = EngineFactory.create(LATTICES[0])
    report = verify_elliptic(ZetaCombination.zeta(), engine, samples=10)
    assert not report.passed
    assert report.max_residual == pytest.approx(3.14159, rel=1e-3)


def test_constant_is_elliptic():
    engine = EngineFactory.create(LATTICES[1])
    report = verify_elliptic(
        ZetaCombination.constant_function(2 + 1j), engine, samples=10
    )
    assert report.passed
    assert report.max_residual == 0


def test_g_pair_matches_the_combinations():
    engine = EngineFactory.create(LATTICES[1])
    for z in sample_probes(engine, 10, seed=7, scale=6):
        g_p, g_q = g_pair(2, 3, z, engine)
        assert g_p == pytest.approx(
            2 * engine.zeta_unchecked(3 * z) - engine.zeta_unchecked(6 * z),
            abs=1e-9,
        )
        assert g_q == pytest.approx(
            3 * engine.zeta_unchecked(2 * z) - engine.zeta_unchecked(6 * z),
            abs=1e-9,
        )


@pytest.mark.parametrize("p, q", PAIRS)
def test_scalar_reduction_identity(p, q):
    engine = EngineFactory.create(LATTICES[1])
    g_p = ZetaCombination.g_p(p, q)
    g_q = ZetaCombination.g_q(p, q)
    for z in sample_probes(engine, 20, seed=8, scale=p * q):
        lhs = g_q.evaluate(engine, z, checked=True) + q * g_p.evaluate(
            engine, z / q, checked=True
        )
        rhs = p * q * engine.zeta_unchecked(z) - engine.zeta_unchecked(
            p * q * z
        )
        assert abs(lhs - rhs) < 1e-8


def test_consistency_residual_for_one_probe():
    lattice = LATTICES[0]
    engine = EngineFactory.create(lattice)
    z = sample_probes(engine, 1, seed=9, scale=6)[0]
    assert consistency_residual(2, 3, z, lattice) < 1e-8
    with pytest.raises(DomainError):
        consistency_residual(2, 3, 1 / 6 + 1e-4, lattice)


def test_cocycle_matrices_reject_small_dilations():
    engine = EngineFactory.create(LATTICES[0])
    with pytest.raises(InputError):
        CocycleMatrices(1, 3, engine)


def test_consistency_reports():
    engine = EngineFactory.create(LATTICES[0])
    reports = verify_consistency(2, 3, engine, samples=20)
    assert [r.name for r in reports] == [
        "consistency (p=2, q=3)",
        "scalar reduction (p=2, q=3)",
    ]
    assert all(r.passed and r.samples == 20 for r in reports)


def test_probes_are_reproducible_and_guarded():
    engine = EngineFactory.create(LATTICES[1])
    first = sample_probes(engine, 30, seed=10, scale=15)
    assert first == sample_probes(engine, 30, seed=10, scale=15)
    assert first != sample_probes(engine, 30, seed=11, scale=15)
    for z in first:
        engine.check_pole(z, 15)


def test_probes_give_up_after_the_retries():
    policy = TruncationPolicy(pole_guard_factor=0.49, max_retries=0)
    engine = EngineFactory.create(LATTICES[0], policy)
    with pytest.raises(DomainError):
        sample_probes(engine, 50, seed=12, scale=6)


def test_sweep_of_nothing():
    report = sweep("empty", abs, [], 1e-8)
    assert report.passed
    assert report.argmax is None
    assert report.to_dict() == {
        "name": "empty",
        "max_residual": 0.0,
        "argmax": None,
        "tol": 1e-8,
        "samples": 0,
        "passed": True,
    }


def test_combination_invariants():
    with pytest.raises(InputError):
        ZetaCombination(((1, 0),))
    assert ZetaCombination.g_p(3, 5).pole_scale == 15
    assert ZetaCombination.g_q(2, 3).to_dict() == {
        "name": "g_q(p=2, q=3)",
        "terms": [["3.0,0.0", 2], ["-1.0,0.0", 6]],
        "constant": "0.0,0.0",
    }


class ShiftedEngine(QSeriesEngine):
    # zeta + 5z with wp - 5 keeps zeta' = -wp.
    def _zeta_raw(self, w):
        return super()._zeta_raw(w) + 5 * w

    def _wp_raw(self, w):
        return super()._wp_raw(w) - 5


class CubicEngine(QSeriesEngine):
    def _zeta_raw(self, w):
        return super()._zeta_raw(w) + 0.01 * w**3

    def _wp_raw(self, w):
        return super()._wp_raw(w) - 0.03 * w**2


PERTURBED_LATTICE = ComplexLattice(1, 0.3 + 1.1j)


def suite_by_name(engine):
    reports = verify_suite(engine, 2, 3, samples=50)
    return {report.name: report for report in reports}


def test_shifted_zeta_is_falsified():
    reports = suite_by_name(ShiftedEngine(PERTURBED_LATTICE))
    # Legendre's relation does not see a linear shift of zeta.
    assert reports["legendre"].passed
    assert reports["zeta' + wp"].passed
    for name in (
        "zeta quasi-periodicity",
        "agreement with LatticeSumEngine",
        "ellipticity of g_p(p=2, q=3)",
        "ellipticity of g_q(p=2, q=3)",
    ):
        assert reports[name].passed is False, name
    assert reports["zeta quasi-periodicity"].max_residual == pytest.approx(
        5, rel=1e-6
    )


def test_cubic_perturbation_is_falsified():
    reports = suite_by_name(CubicEngine(PERTURBED_LATTICE))
    assert reports["zeta' + wp"].passed
    for name in (
        "legendre",
        "zeta quasi-periodicity",
        "agreement with LatticeSumEngine",
        "ellipticity of g_p(p=2, q=3)",
        "consistency (p=2, q=3)",
    ):
        assert reports[name].passed is False, name


def test_perturbed_legendre_residual():
    a, b = PERTURBED_LATTICE.reduced_basis
    engine = CubicEngine(PERTURBED_LATTICE)
    expected = abs(0.01 / 4 * (a**3 * b - b**3 * a))
    assert engine.legendre_residual() == pytest.approx(expected, rel=1e-6)
    assert EngineFactory.create(PERTURBED_LATTICE).legendre_residual() < 1e-10


@pytest.mark.parametrize("lattice", LATTICES, ids=["square", "skewed"])
def test_edge_jumps_match_the_quasi_periods(lattice):
    engine = EngineFactory.create(lattice)
    for index in (0, 1):
        points = sample_edge(engine, index, 20, seed=13)
        for w in points:
            assert lattice.reduced_coordinates(w)[index] == pytest.approx(0.5)
            assert engine.edge_residual(index, w) < 1e-10
    report = verify_quasi_periodicity(engine, samples=21)
    assert report.passed
    assert report.samples == 21


def test_reference_engines():
    q_series = EngineFactory.create(LATTICES[1])
    lattice_sum = reference_engine(q_series)
    assert isinstance(lattice_sum, LatticeSumEngine)
    assert not lattice_sum.warn_tail
    assert isinstance(reference_engine(lattice_sum), QSeriesEngine)


@pytest.mark.parametrize("lattice", LATTICES, ids=["square", "skewed"])
def test_engines_agree_within_the_tail_bound(lattice):
    q_series = EngineFactory.create(lattice)
    lattice_sum = reference_engine(q_series)
    assert verify_agreement(q_series, lattice_sum, samples=30).passed
    assert verify_agreement(lattice_sum, q_series, samples=30).passed
