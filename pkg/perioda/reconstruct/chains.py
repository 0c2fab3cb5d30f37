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
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Tuple

from perioda.errors import InputError
from perioda.lattices import Point
from perioda.sparse import QuasiPeriodicFn
from perioda.sparse.base import check_dilation
from perioda.utils import format_fraction, proportionality, solve_power

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ChainReport:
    r"""The :math:`P`-chain through a point off :math:`M`.

    Attributes:
        z (Point): The point the chain is read from.
        points (List[Point]): :math:`z, Pz, \ldots, P^{n(z)} z`.
        exponent (int): :math:`n(z)`, the largest :math:`i \ge 0` with
            :math:`P^i z` in the support, :obj:`0` for an empty chain.
        primitive (bool): Whether :math:`z` is in the support and no
            :math:`P^{-i} z` with :math:`i \ge 1` is.
        chain_sum (Fraction): :math:`\sum_i g_P(P^i z)` over the points.
        indices (Tuple[int, ...]): Every :math:`n \in \mathbb{Z}` with
            :math:`P^n z` in the support.
    """

    z: Point
    points: List[Point]
    exponent: int
    primitive: bool
    chain_sum: Fraction
    indices: Tuple[int, ...]

    @property
    def is_empty(self) -> bool:
        return not self.points

    def to_dict(self) -> Dict[str, Any]:
        from perioda.serialization import encode_point

        return {
            "z": encode_point(self.z),
            "points": [encode_point(p) for p in self.points],
            "exponent": self.exponent,
            "primitive": self.primitive,
            "chain_sum": format_fraction(self.chain_sum),
            "indices": list(self.indices),
        }


def _check_off_m(z: Point) -> None:
    if z.in_m:
        raise InputError(
            f"Chains are read off M only; {z} is rational.", witness=z
        )


def chain_indices(gP: QuasiPeriodicFn, z: Point, P: int) -> List[int]:
    r"""Returns every integer :math:`n` (negative ones included) with
    :math:`P^n z` in the support of :obj:`gP`.

    The :math:`\alpha`-part of a support coset fixes :math:`n` uniquely;
    membership of the rational part is then tested exactly.

    Args:
        gP (QuasiPeriodicFn): The function whose support is searched.
        z (Point): A point off :math:`M`.
        P (int): The dilation.

    Returns:
        List[int]: The sorted indices.
    """
    check_dilation(P)
    _check_off_m(z)
    indices = set()
    for key in gP.support:
        if key.in_m:
            continue
        ratio = proportionality(key.irr, z.irr)
        if ratio is None:
            continue
        n = solve_power(P, ratio)
        if n is None:
            continue
        if gP.lattice.contains(z.scale(Fraction(P) ** n) - key):
            indices.add(n)
    return sorted(indices)


def chain_decompose(gP: QuasiPeriodicFn, z: Point, P: int) -> ChainReport:
    r"""Reports the :math:`P`-chain read from :obj:`z`.

    Args:
        gP (QuasiPeriodicFn): The dilation difference by :obj:`P`.
        z (Point): A point off :math:`M`, so its orbit points are pairwise
            distinct modulo the lattice.
        P (int): The dilation.

    Returns:
        ChainReport: Points, exponent, primitivity and chain sum.

    Raises:
        InputError: If :obj:`z` lies in :math:`M`.
    """
    indices = tuple(chain_indices(gP, z, P))
    upper = [n for n in indices if n >= 0]
    exponent = max(upper) if upper else 0
    points = (
        [z.scale(P**i) for i in range(exponent + 1)] if upper else []
    )
    chain_sum = sum((gP(p) for p in points), Fraction(0))
    primitive = 0 in indices and min(indices) == 0
    return ChainReport(z, points, exponent, primitive, chain_sum, indices)


def primitive_chain(gP: QuasiPeriodicFn, z: Point, P: int) -> ChainReport:
    r"""Walks back from :obj:`z` to the start of its chain and reports the
    chain from there. An empty chain is reported from :obj:`z`."""
    indices = chain_indices(gP, z, P)
    if not indices:
        return chain_decompose(gP, z, P)
    return chain_decompose(gP, z.scale(Fraction(P) ** indices[0]), P)


def primitive_chains(gP: QuasiPeriodicFn, P: int) -> List[ChainReport]:
    r"""Returns one primitive chain for every orbit of support cosets off
    :math:`M`, ordered as the support."""
    reports: List[ChainReport] = []
    covered = set()
    for key in gP.support:
        if key.in_m or key in covered:
            continue
        report = primitive_chain(gP, key, P)
        start = report.z
        for n in report.indices:
            covered.add(gP.lattice.reduce(start.scale(Fraction(P) ** n)))
        reports.append(report)
    logger.debug("Found %d primitive chains off M.", len(reports))
    return reports


def max_chain_exponent(gP: QuasiPeriodicFn, P: int) -> int:
    r"""The largest exponent over the primitive chains off :math:`M`, with
    :obj:`0` for an empty support."""
    return max((r.exponent for r in primitive_chains(gP, P)), default=0)


def bounded_reconstruction(
    gP: QuasiPeriodicFn, z: Point, P: int, n_P: int
) -> Fraction:
    r"""Evaluates :math:`\sum_{i=1}^{n_P} g_P(P^{-i} z)`, which equals the
    telescoping sum at support points off :math:`M` once :obj:`n_P`
    exceeds every chain exponent."""
    check_dilation(P)
    if n_P < 0:
        raise InputError(f"`n_P` should be non-negative, got {n_P}.")
    return sum(
        (gP(z.scale(Fraction(1, P**i))) for i in range(1, n_P + 1)),
        Fraction(0),
    )
