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
r"""Random instances for property sweeps and the self-test. Every generator
takes a :obj:`random.Random`, so a seed fixes the whole sweep."""

import random
from fractions import Fraction
from math import gcd
from typing import TYPE_CHECKING, List, Tuple

from perioda.lattices import Lattice, Point, Scalar

if TYPE_CHECKING:
    from perioda.divisors import Divisor
    from perioda.sparse import QuasiPeriodicFn

_NONZERO = [-3, -2, -1, 1, 2, 3]


def random_fraction(rng: random.Random, max_denominator: int) -> Fraction:
    r"""A rational in :math:`[0, 1)` with denominator at most
    :obj:`max_denominator`."""
    den = rng.randint(1, max_denominator)
    return Fraction(rng.randrange(den), den)


def random_point(
    rng: random.Random,
    rank: int,
    max_denominator: int,
    alpha: bool = False,
) -> Point:
    r"""A random point with small denominators; with :obj:`alpha` set,
    every coordinate also gets a non-zero :math:`\alpha`-part, so the point
    lies off :math:`M`."""
    coords = []
    for _ in range(rank):
        irr = Fraction(0)
        if alpha:
            irr = Fraction(rng.choice(_NONZERO), rng.randint(1, 3))
        coords.append(Scalar(random_fraction(rng, max_denominator), irr))
    return Point(tuple(coords))


def random_function(
    rng: random.Random,
    lattice: Lattice,
    max_cosets: int,
    max_denominator: int,
    alpha_cosets: int = 0,
) -> "QuasiPeriodicFn":
    r"""A random quasi-periodic function with value :math:`0` at :math:`0`.

    Args:
        rng (random.Random): The source of randomness.
        lattice (Lattice): The period lattice.
        max_cosets (int): Largest number of rational cosets.
        max_denominator (int): Largest coordinate denominator.
        alpha_cosets (int, optional): Number of additional cosets off
            :math:`M`. (default: :obj:`0`)

    Returns:
        QuasiPeriodicFn: The function, possibly with fewer cosets when
            representatives collide.
    """
    from perioda.sparse import QuasiPeriodicFn

    pairs: List[Tuple[Point, Fraction]] = []
    rational = rng.randint(1, max_cosets)
    for i in range(rational + alpha_cosets):
        point = random_point(
            rng, lattice.rank, max_denominator, alpha=i >= rational
        )
        value = Fraction(rng.choice(_NONZERO), rng.randint(1, 4))
        pairs.append((point, value))
    return QuasiPeriodicFn.from_pairs(lattice, pairs)


def random_coprime_pair(
    rng: random.Random, low: int = 2, high: int = 30
) -> Tuple[int, int]:
    r"""Two distinct coprime integers in :math:`[low, high]`."""
    while True:
        p, q = rng.randint(low, high), rng.randint(low, high)
        if p != q and gcd(p, q) == 1:
            return p, q


def random_divisor(
    rng: random.Random,
    lattice: Lattice,
    max_points: int,
    max_denominator: int,
) -> "Divisor":
    r"""A random rank-2 divisor supported on rational points."""
    from perioda.divisors import Divisor

    pairs = [
        (
            random_point(rng, 2, max_denominator),
            rng.choice([-2, -1, 1, 2]),
        )
        for _ in range(rng.randint(1, max_points))
    ]
    return Divisor.from_points(lattice, pairs)


def random_principal_divisor(
    rng: random.Random,
    lattice: Lattice,
    max_points: int,
    max_denominator: int,
) -> "Divisor":
    r"""A random divisor principal for :obj:`lattice`.

    A random divisor is corrected at :math:`0` to degree :math:`0`, and then
    by :math:`\delta_w - \delta_0` with :math:`w` minus its Abel-Jacobi sum,
    which moves the sum into the lattice without changing the degree.
    """
    from perioda.divisors import Divisor, aj_sum, degree

    d = random_divisor(rng, lattice, max_points, max_denominator)
    zero = Point.zero(2)
    d = d + Divisor.from_points(lattice, [(zero, -degree(d, lattice))])
    w = -Point.of(*aj_sum(d, lattice))
    return d + Divisor.from_points(lattice, [(w, 1), (zero, -1)])
