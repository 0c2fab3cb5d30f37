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
from typing import Any, Dict, Optional, Sequence, Tuple

from perioda.errors import InputError
from perioda.lattices import Lattice, Point
from perioda.reconstruct.chains import max_chain_exponent
from perioda.sparse import QuasiPeriodicFn, TelescopeFn
from perioda.sparse.base import check_dilation
from perioda.utils import format_fraction, is_multiplicatively_independent

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SublatticeReport:
    r"""A period lattice for points off :math:`M` and its verification.

    Attributes:
        lattice (Lattice): :math:`\Lambda' = P^{2n_P}\Lambda +
            Q^{2n_Q}\Lambda`. It is not claimed to be the largest such
            lattice.
        n_P (int): One more than the largest chain exponent of
            :math:`g_P` off :math:`M`.
        n_Q (int): The same for :math:`g_Q`.
        checks (int): Number of probe and generator pairs verified.
        witness (Tuple[Point, Point], optional): A probe and a generator
            where periodicity fails. (default: :obj:`None`)
        values (Tuple[Fraction, Fraction], optional): The two values at
            the witness. (default: :obj:`None`)
    """

    lattice: Lattice
    n_P: int
    n_Q: int
    checks: int
    witness: Optional[Tuple[Point, Point]] = None
    values: Optional[Tuple[Fraction, Fraction]] = None

    @property
    def holds(self) -> bool:
        return self.witness is None

    def to_dict(self) -> Dict[str, Any]:
        from perioda.serialization import encode_lattice, encode_point

        result: Dict[str, Any] = {
            "lattice": encode_lattice(self.lattice),
            "n_P": self.n_P,
            "n_Q": self.n_Q,
            "checks": self.checks,
            "holds": self.holds,
        }
        if self.witness is not None and self.values is not None:
            result["witness"] = [encode_point(p) for p in self.witness]
            result["values"] = [format_fraction(v) for v in self.values]
        return result


def independent_sublattice(
    gP: QuasiPeriodicFn,
    gQ: QuasiPeriodicFn,
    P: int,
    Q: int,
    probes: Sequence[Point] = (),
) -> SublatticeReport:
    r"""Computes a lattice under which a function with dilation differences
    :obj:`gP` and :obj:`gQ` is periodic off :math:`M`, for dilations that
    are multiplicatively independent but possibly not coprime.

    Args:
        gP (QuasiPeriodicFn): The dilation difference by :obj:`P`.
        gQ (QuasiPeriodicFn): The dilation difference by :obj:`Q`.
        P (int): First dilation.
        Q (int): Second dilation.
        probes (Sequence[Point], optional): Points off :math:`M` at which
            :math:`f(z + \lambda') = f(z)` is verified for every generator
            :math:`\lambda'`, with :math:`f` the telescoping sum of
            :obj:`gP`. (default: :obj:`()`)

    Returns:
        SublatticeReport: The lattice and the verification outcome.

    Raises:
        InputError: If the dilations are multiplicatively dependent, the
            lattices differ or a probe lies in :math:`M`.
    """
    check_dilation(P)
    check_dilation(Q)
    if not is_multiplicatively_independent(P, Q):
        raise InputError(
            f"{P} and {Q} are multiplicatively dependent.", witness=(P, Q)
        )
    if gP.lattice != gQ.lattice:
        raise InputError("Both dilation differences must share one lattice.")
    base = gP.lattice
    n_P = 1 + max_chain_exponent(gP, P)
    n_Q = 1 + max_chain_exponent(gQ, Q)
    lattice = base.scale(P ** (2 * n_P)).join(base.scale(Q ** (2 * n_Q)))
    logger.info("Sublattice for (%d, %d) has index %d.", P, Q, lattice.index)

    f = TelescopeFn(gP, P)
    checks = 0
    for z in probes:
        if z.in_m:
            raise InputError(f"Probe {z} is not off M.", witness=z)
        value = f(z)
        for generator in lattice.generators:
            checks += 1
            shifted = f(z + generator)
            if shifted != value:
                return SublatticeReport(
                    lattice, n_P, n_Q, checks, (z, generator), (value, shifted)
                )
    return SublatticeReport(lattice, n_P, n_Q, checks)
