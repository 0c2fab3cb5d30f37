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

from perioda.divisors import (
    Divisor,
    aj_sum,
    as_divisor,
    degree,
    principality_certificate,
)
from perioda.errors import InputError
from perioda.lattices import Lattice, Point, Scalar
from perioda.sparse import QuasiPeriodicFn
from perioda.utils.sampling import random_divisor, random_principal_divisor

Z2 = Lattice.standard(2)


@pytest.fixture
def wp_prime_divisor() -> Divisor:
    return Divisor.from_points(
        Z2,
        [
            (Point.of("1/2", 0), 1),
            (Point.of(0, "1/2"), 1),
            (Point.of("1/2", "1/2"), 1),
            (Point.of(0, 0), -3),
        ],
    )


@pytest.fixture
def half_divisor() -> Divisor:
    return Divisor.from_points(
        Z2,
        [
            (Point.of("1/2", 0), 1),
            (Point.of(0, "1/2"), 1),
            (Point.of(0, 0), -2),
        ],
    )


def test_from_points_adds_repeated_points():
    d = Divisor.from_points(
        Z2, [(Point.of("1/2", 0), 1), (Point.of("3/2", 1), 2)]
    )
    assert d(Point.of("1/2", 0)) == 3
    assert d.support == (Point.of("1/2", 0),)


def test_value_at_zero_follows_the_lattice():
    d = Divisor.from_points(Z2, [(Point.of(0, 0), -3)])
    assert d.value_at_zero == -3
    assert d(Point.of(1, 1)) == -3


@pytest.mark.parametrize(
    "f",
    [
        QuasiPeriodicFn(Lattice.standard(1), {Point.of("1/2"): 1}),
        QuasiPeriodicFn(Z2, {Point((Scalar(0, 1), Scalar(0))): 1}),
        QuasiPeriodicFn(Z2, {Point.of("1/2", 0): Fraction(1, 2)}),
        QuasiPeriodicFn(Z2, {}, zero_value=1),
    ],
)
def test_divisor_invariants(f):
    with pytest.raises(InputError):
        Divisor(f)


def test_as_divisor_checks_integrality():
    f = QuasiPeriodicFn(Z2, {Point.of("1/2", 0): 2})
    assert as_divisor(f)(Point.of("1/2", 0)) == 2
    with pytest.raises(InputError):
        as_divisor(QuasiPeriodicFn(Z2, {Point.of("1/2", 0): "1/2"}))


def test_degree_examples(wp_prime_divisor, half_divisor):
    simple = Divisor.from_points(
        Z2, [(Point.of("1/2", 0), 1), (Point.of(0, 0), -1)]
    )
    assert degree(simple, Z2) == 0
    assert degree(wp_prime_divisor, Z2) == 0
    assert degree(half_divisor, Z2) == 0
    two = Divisor.from_points(
        Z2, [(Point.of("1/2", 0), 1), (Point.of(0, "1/2"), 1)]
    )
    assert degree(two, Z2) == 2
    assert degree(two, Lattice.standard(2, 2)) == 8


@pytest.mark.parametrize("seed", range(5))
def test_degree_is_lattice_covariant(seed):
    rng = random.Random(seed)
    d = random_divisor(rng, Z2, 4, 6)
    sub = Lattice(((2, 1), (0, 3)))
    assert degree(d, sub) == sub.index * degree(d, Z2)


def test_degree_rejects_non_periods():
    d = Divisor.from_points(
        Lattice.standard(2, 2), [(Point.of(1, 0), 1), (Point.of(0, 0), -1)]
    )
    with pytest.raises(InputError):
        degree(d, Z2)


def test_aj_sum_examples(wp_prime_divisor, half_divisor):
    assert aj_sum(wp_prime_divisor, Z2) == (Fraction(1), Fraction(1))
    assert aj_sum(half_divisor, Z2) == (Fraction(1, 2), Fraction(1, 2))
    assert aj_sum(Divisor.zero(Z2), Z2) == (Fraction(0), Fraction(0))


def test_principality_examples(wp_prime_divisor, half_divisor):
    certificate = principality_certificate(wp_prime_divisor, Z2)
    assert certificate.verdict
    assert certificate.principal_in_k
    certificate = principality_certificate(half_divisor, Z2)
    assert not certificate.verdict
    assert certificate.principal_in_k
    assert certificate.to_dict()["aj"] == ["1/2", "1/2"]


def test_principality_over_a_coarser_lattice():
    lattice = Lattice.standard(2, 2)
    d = Divisor.from_points(
        lattice,
        [(Point.of(1, 0), 1), (Point.of(-1, 0), 1), (Point.of(0, 0), -2)],
    )
    certificate = principality_certificate(d, lattice)
    assert certificate.aj == (Fraction(2), Fraction(0))
    assert certificate.verdict
    assert not principality_certificate(
        Divisor.from_points(
            lattice, [(Point.of(1, 0), 1), (Point.of(0, 0), -1)]
        ),
        lattice,
    ).verdict


@pytest.mark.parametrize("seed", range(5))
def test_principality_ignores_representatives(seed):
    rng = random.Random(seed)
    d = random_principal_divisor(rng, Z2, 3, 4)
    shifted = Divisor.from_points(
        Z2,
        [
            (key + Point.of(rng.randint(-3, 3), rng.randint(-3, 3)), int(v))
            for key, v in d.underlying.entries.items()
        ],
    )
    assert shifted == d
    assert principality_certificate(shifted, Z2).verdict
    assert principality_certificate(d, Z2).verdict


def test_divisor_arithmetic(half_divisor):
    assert (half_divisor - half_divisor).is_zero
    assert -(-half_divisor) == half_divisor
    assert half_divisor.over(Lattice.standard(2, 2)) == half_divisor
    assert "Divisor(" in repr(half_divisor)
