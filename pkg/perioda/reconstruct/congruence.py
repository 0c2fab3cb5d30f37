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
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import List, Tuple

from perioda.errors import InputError
from perioda.lattices import Lattice, Point
from perioda.reconstruct.lemma import Lemma1Walk, lemma1_walk
from perioda.sparse import BaseSparseFn
from perioda.utils import prime_set


@dataclass(frozen=True)
class CongruenceChain:
    r"""Points :math:`x \sim_S z \sim_T y` of a lattice, related
    coordinate-wise in an adapted basis.

    Attributes:
        x (Point): Start.
        z (Point): Middle point.
        y (Point): End.
        basis (Lattice): The adapted basis the walks were taken in.
        walks (List[Lemma1Walk]): One walk per basis coordinate.
    """

    x: Point
    z: Point
    y: Point
    basis: Lattice
    walks: List[Lemma1Walk]

    def values_along(
        self, f: BaseSparseFn
    ) -> Tuple[Fraction, Fraction, Fraction]:
        r"""Evaluates :obj:`f` at the three points."""
        return f(self.x), f(self.z), f(self.y)


def congruence_chain(
    x: Point, y: Point, N: int, P: int, Q: int, lattice: Lattice
) -> CongruenceChain:
    r"""Connects two lattice points congruent modulo :math:`N\Lambda`.

    In a basis where neither point has a zero coordinate, every coordinate
    pair is connected by a walk with :math:`S` the primes of :obj:`P` and
    :math:`T` those of :obj:`Q`.

    Args:
        x (Point): Non-zero lattice point.
        y (Point): Non-zero lattice point with :math:`x - y \in N\Lambda`.
        N (int): The modulus.
        P (int): First dilation.
        Q (int): Second dilation, coprime to :obj:`P`.
        lattice (Lattice): The lattice :math:`\Lambda`.

    Returns:
        CongruenceChain: The three points with their walks.
    """
    if N < 1:
        raise InputError(f"`N` should be a value larger than 0, got {N}.")
    if P < 2 or Q < 2 or gcd(P, Q) != 1:
        raise InputError(
            f"Dilations must be coprime and >= 2, got {P} and {Q}."
        )
    for v in (x, y):
        if v.is_zero or not lattice.contains(v):
            raise InputError(
                f"{v} is not a non-zero lattice point.", witness=v
            )
    if not lattice.scale(N).contains(x - y):
        raise InputError(
            f"{x} and {y} are not congruent modulo {N}.", witness=(x, y)
        )
    basis = lattice.adapted_basis(x, y)
    cx = [int(c) for c in basis.coordinates(x.rat)]
    cy = [int(c) for c in basis.coordinates(y.rat)]
    walks = [
        lemma1_walk(a, b, N, prime_set(P), prime_set(Q))
        for a, b in zip(cx, cy)
    ]
    z = Point.of(*basis.combine([Fraction(w.z) for w in walks]))
    return CongruenceChain(x, z, y, basis, walks)
