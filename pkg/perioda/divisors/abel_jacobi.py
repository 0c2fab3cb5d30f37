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
from typing import Any, Dict, Tuple

from perioda.divisors.divisor import Divisor
from perioda.errors import InputError
from perioda.lattices import Lattice, Point
from perioda.sparse import QuasiPeriodicFn
from perioda.utils import format_fraction

logger = logging.getLogger(__name__)


def _over(d: Divisor, lattice: Lattice) -> QuasiPeriodicFn:
    if lattice.rank != 2:
        raise InputError(f"Divisors live on rank-2 lattices, got {lattice}.")
    if not d.underlying.is_periodic_under(lattice):
        raise InputError(
            f"The divisor is not periodic under {lattice.basis}.",
            witness=lattice.basis,
        )
    return d.underlying.over(lattice)


def degree(d: Divisor, lattice: Lattice) -> int:
    r"""Sums the multiplicities over a fundamental domain of
    :obj:`lattice`.

    Args:
        d (Divisor): A divisor periodic under :obj:`lattice`.
        lattice (Lattice): The lattice defining the torus.

    Returns:
        int: The degree. Passing to a sublattice of index :math:`k`
            multiplies it by :math:`k`.

    Raises:
        InputError: If :obj:`d` is not periodic under :obj:`lattice`.
    """
    f = _over(d, lattice)
    return int(sum(f.entries.values(), Fraction(0)))


def aj_sum(d: Divisor, lattice: Lattice) -> Tuple[Fraction, Fraction]:
    r"""Computes :math:`\sum z \, d(z)` over the reduced representatives of
    :obj:`lattice`. The class of the result modulo :obj:`lattice` does not
    depend on the representatives.

    Args:
        d (Divisor): A divisor periodic under :obj:`lattice`.
        lattice (Lattice): The lattice defining the torus.

    Returns:
        Tuple[Fraction, Fraction]: The Abel-Jacobi sum.
    """
    f = _over(d, lattice)
    total = [Fraction(0), Fraction(0)]
    for key, value in f.entries.items():
        for i, c in enumerate(key.rat):
            total[i] += c * value
    return total[0], total[1]


@dataclass(frozen=True)
class PrincipalityCertificate:
    r"""The Abel-Jacobi verdict for a divisor on
    :math:`\mathbb{C} / L`.

    Attributes:
        lattice_used (Lattice): The lattice :math:`L`.
        degree (int): The degree over a fundamental domain of :math:`L`.
        aj (Tuple[Fraction, Fraction]): The Abel-Jacobi sum.
        verdict (bool): Whether the degree vanishes and the sum lies in
            :math:`L`.
        principal_in_k (bool): Whether the divisor is principal for some
            sublattice of :math:`M`; with supports in :math:`M` this only
            needs degree :math:`0`.
    """

    lattice_used: Lattice
    degree: int
    aj: Tuple[Fraction, Fraction]
    verdict: bool
    principal_in_k: bool

    def __post_init__(self) -> None:
        expected = self.degree == 0 and self.lattice_used.contains(
            Point.of(*self.aj)
        )
        if self.verdict != expected:
            raise InputError(
                f"Inconsistent principality verdict {self.verdict} for "
                f"degree {self.degree} and sum {self.aj}."
            )

    def to_dict(self) -> Dict[str, Any]:
        from perioda.serialization import encode_lattice

        return {
            "lattice_used": encode_lattice(self.lattice_used),
            "degree": self.degree,
            "aj": [format_fraction(v) for v in self.aj],
            "verdict": self.verdict,
            "principal_in_k": self.principal_in_k,
        }


def principality_certificate(
    d: Divisor, lattice: Lattice
) -> PrincipalityCertificate:
    r"""Decides by Abel-Jacobi whether :obj:`d` is the divisor of an
    elliptic function for :obj:`lattice`.

    Args:
        d (Divisor): A divisor periodic under :obj:`lattice`.
        lattice (Lattice): The period lattice.

    Returns:
        PrincipalityCertificate: Degree, sum and verdicts.
    """
    deg = degree(d, lattice)
    aj = aj_sum(d, lattice)
    verdict = deg == 0 and lattice.contains(Point.of(*aj))
    logger.debug(
        "Degree %d, Abel-Jacobi sum %s, verdict %s.", deg, aj, verdict
    )
    return PrincipalityCertificate(lattice, deg, aj, verdict, deg == 0)
