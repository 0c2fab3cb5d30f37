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
import random
from fractions import Fraction

import pytest

from perioda.errors import InputError
from perioda.lattices import Lattice, Point, Scalar
from perioda.reconstruct import (
    bounded_reconstruction,
    chain_decompose,
    chain_indices,
    congruence_chain,
    independent_sublattice,
    max_chain_exponent,
    primitive_chain,
    primitive_chains,
)
from perioda.sparse import QuasiPeriodicFn, dilate_diff, telescope
from perioda.utils.sampling import random_function

Z = Lattice.standard(1)
ALPHA = Point((Scalar(0, 1),))


@pytest.fixture
def alpha_difference() -> QuasiPeriodicFn:
    return dilate_diff(QuasiPeriodicFn(Z, {ALPHA: 1}), 2)


def test_empty_chain():
    report = chain_decompose(QuasiPeriodicFn.zero(Z), ALPHA, 2)
    assert report.is_empty
    assert report.exponent == 0
    assert report.chain_sum == 0
    assert not report.primitive


def test_single_point_chain_does_not_vanish():
    report = chain_decompose(QuasiPeriodicFn(Z, {ALPHA: 1}), ALPHA, 2)
    assert report.points == [ALPHA]
    assert report.exponent == 0
    assert report.primitive
    assert report.chain_sum == 1


def test_chain_of_a_dilation_difference(alpha_difference):
    half = ALPHA.scale(Fraction(1, 2))
    assert chain_indices(alpha_difference, ALPHA, 2) == [-1, 0]
    report = primitive_chain(alpha_difference, ALPHA, 2)
    assert report.z == half
    assert report.indices == (0, 1)
    assert report.points == [half, ALPHA]
    assert report.exponent == 1
    assert report.primitive
    assert report.chain_sum == 0
    assert report.to_dict()["chain_sum"] == "0/1"


def test_primitive_chains_cover_every_orbit(alpha_difference):
    reports = primitive_chains(alpha_difference, 2)
    assert len(reports) == 2
    assert all(r.chain_sum == 0 for r in reports)
    assert max_chain_exponent(alpha_difference, 2) == 1
    assert max_chain_exponent(QuasiPeriodicFn.zero(Z), 2) == 0


@pytest.mark.parametrize("seed", range(10))
def test_primitive_chains_vanish_for_random_functions(seed):
    rng = random.Random(seed)
    f = random_function(rng, Z, 2, 4, alpha_cosets=2)
    P = rng.choice([2, 3, 5])
    for report in primitive_chains(dilate_diff(f, P), P):
        assert report.primitive
        assert report.chain_sum == 0


def test_chains_are_read_off_m_only(alpha_difference):
    with pytest.raises(InputError):
        chain_decompose(alpha_difference, Point.of("1/2"), 2)


def test_bounded_reconstruction_matches_the_telescope(alpha_difference):
    f = telescope(alpha_difference, 2)
    for z in (ALPHA, ALPHA.scale(Fraction(1, 2)), ALPHA + Point.of("1/2")):
        assert bounded_reconstruction(alpha_difference, z, 2, 2) == f(z)
    assert bounded_reconstruction(alpha_difference, ALPHA, 2, 2) == 1
    with pytest.raises(InputError):
        bounded_reconstruction(alpha_difference, ALPHA, 2, -1)


def test_independent_sublattice_is_the_lattice_for_coprime_dilations():
    e = QuasiPeriodicFn(Z, {Point.of("1/5"): 1, ALPHA: 2})
    report = independent_sublattice(dilate_diff(e, 2), dilate_diff(e, 3), 2, 3)
    assert report.lattice == Z
    assert report.holds


def test_independent_sublattice_for_a_shared_factor():
    e = QuasiPeriodicFn(Z, {Point.of("1/7"): 1})
    report = independent_sublattice(
        dilate_diff(e, 6), dilate_diff(e, 10), 6, 10
    )
    assert (report.n_P, report.n_Q) == (1, 1)
    assert report.lattice == Lattice.standard(1, 4)


def test_independent_sublattice_verifies_probes():
    e = QuasiPeriodicFn(Z, {ALPHA + Point.of("1/3"): 1})
    probes = [ALPHA, ALPHA.scale(6), ALPHA.scale(Fraction(1, 10))]
    report = independent_sublattice(
        dilate_diff(e, 6), dilate_diff(e, 10), 6, 10, probes
    )
    assert report.holds
    assert report.checks == 3


def test_independent_sublattice_reports_a_witness():
    gP = QuasiPeriodicFn(Z, {ALPHA: 1})
    report = independent_sublattice(gP, QuasiPeriodicFn.zero(Z), 6, 10, [
        ALPHA.scale(6)
    ])
    assert not report.holds
    assert report.witness == (ALPHA.scale(6), Point.of(4))
    assert report.values == (Fraction(1), Fraction(0))
    assert "witness" in report.to_dict()


def test_independent_sublattice_rejects_bad_input():
    e = QuasiPeriodicFn(Z, {Point.of("1/7"): 1})
    with pytest.raises(InputError):
        independent_sublattice(dilate_diff(e, 2), dilate_diff(e, 4), 2, 4)
    with pytest.raises(InputError):
        independent_sublattice(
            dilate_diff(e, 2), dilate_diff(e, 3), 2, 3, [Point.of(1)]
        )


def test_congruence_chain_relates_lattice_points():
    lattice = Lattice.standard(2)
    x, y = Point.of(1, 0), Point.of(7, 6)
    chain = congruence_chain(x, y, 6, 2, 3, lattice)
    assert lattice.contains(chain.z)
    assert lattice.scale(6).contains(chain.x - chain.z)
    assert lattice.scale(6).contains(chain.z - chain.y)
    assert len(chain.walks) == 2
    constant = QuasiPeriodicFn(lattice, {Point.of(0, 0): 1})
    assert chain.values_along(constant) == (1, 1, 1)


@pytest.mark.parametrize(
    "x, y, N, P, Q",
    [
        (Point.of(1, 0), Point.of(2, 0), 6, 2, 3),
        (Point.of(0, 0), Point.of(6, 0), 6, 2, 3),
        (Point.of(1, 0), Point.of(7, 6), 6, 2, 4),
        (Point.of("1/2", 0), Point.of(7, 6), 6, 2, 3),
    ],
)
def test_congruence_chain_rejects_bad_input(x, y, N, P, Q):
    with pytest.raises(InputError):
        congruence_chain(x, y, N, P, Q, Lattice.standard(2))
