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
from math import gcd
from typing import Any, Dict, List, Optional

from perioda.configs import ReconstructConfig, WindowConfig
from perioda.errors import (
    InputError,
    PeriodaError,
    TheoremViolation,
    UnsupportedError,
)
from perioda.lattices import Point
from perioda.sparse import (
    EqualityReport,
    QuasiPeriodicFn,
    TelescopeFn,
    dilate_diff,
    equal_on_cosets,
    equal_on_window,
    support_cosets,
)
from perioda.sparse.base import check_dilation
from perioda.utils import format_fraction, ordered_map

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PeriodicityCertificate:
    r"""The outcome of a successful reconstruction.

    Attributes:
        result (QuasiPeriodicFn): The reconstructed function, modified at
            :math:`0` to take the value :obj:`constant_c`.
        constant_c (Fraction): The value on :math:`\Lambda \setminus \{0\}`.
        window_checked (WindowConfig): The window the result was compared
            with both telescoping sums on.
        cross_telescope_checked (bool): Whether both telescoping sums agree
            on every candidate coset and on the window.
        candidate_cosets (List[Point]): The cosets the support was bounded
            by, the :math:`0`-coset included.
    """

    result: QuasiPeriodicFn
    constant_c: Fraction
    window_checked: WindowConfig
    cross_telescope_checked: bool
    candidate_cosets: List[Point]

    def __post_init__(self) -> None:
        if not (
            self.result.zero_value
            == self.constant_c
            == self.result.zero_coset_value
        ):
            raise TheoremViolation(
                "The reconstructed function is not constant on the lattice."
            )

    def to_dict(self) -> Dict[str, Any]:
        from perioda.serialization import encode_function, encode_window

        return {
            "result": encode_function(self.result),
            "constant_c": format_fraction(self.constant_c),
            "window_checked": encode_window(self.window_checked),
            "cross_telescope_checked": self.cross_telescope_checked,
            "candidate_count": len(self.candidate_cosets),
        }


def _check_pair(
    gP: QuasiPeriodicFn, gQ: QuasiPeriodicFn, P: int, Q: int
) -> None:
    check_dilation(P)
    check_dilation(Q)
    if gP.lattice != gQ.lattice:
        raise InputError(
            "Both dilation differences must share one lattice.",
            witness=(gP.lattice.basis, gQ.lattice.basis),
        )


def check_compatibility(
    gP: QuasiPeriodicFn, gQ: QuasiPeriodicFn, P: int, Q: int
) -> EqualityReport:
    r"""Compares :math:`g_P(Qx) - g_P(x)` with :math:`g_Q(Px) - g_Q(x)`
    exactly, coset by coset. Equality is necessary for :obj:`gP` and
    :obj:`gQ` to be the dilation differences of a single function.

    Args:
        gP (QuasiPeriodicFn): Candidate dilation difference by :obj:`P`.
        gQ (QuasiPeriodicFn): Candidate dilation difference by :obj:`Q`.
        P (int): First dilation.
        Q (int): Second dilation.

    Returns:
        EqualityReport: The verdict with the first differing coset.
    """
    _check_pair(gP, gQ, P, Q)
    return equal_on_cosets(dilate_diff(gP, Q), dilate_diff(gQ, P))


def reconstruct_periodic(
    gP: QuasiPeriodicFn,
    gQ: QuasiPeriodicFn,
    P: int,
    Q: int,
    window: Optional[WindowConfig] = None,
    config: Optional[ReconstructConfig] = None,
) -> PeriodicityCertificate:
    r"""Reconstructs the periodic function with prescribed dilation
    differences by two coprime dilations.

    The function is built from the telescoping sum of :obj:`gP` on the
    finitely many cosets that can carry its support, cross-checked against
    the telescoping sum of :obj:`gQ`, and modified at :math:`0` to the
    constant it takes on the rest of the lattice. Its dilation differences
    are then verified exactly, and it is compared with both sums on a
    window. Passing the exact check proves :obj:`gP` and :obj:`gQ`
    compatible; :func:`check_compatibility` runs only when a check fails,
    to tell an incompatible pair from a violation.

    Args:
        gP (QuasiPeriodicFn): The dilation difference by :obj:`P`, with
            value :math:`0` at :math:`0`.
        gQ (QuasiPeriodicFn): The dilation difference by :obj:`Q` over the
            same lattice.
        P (int): First dilation, at least :obj:`2`.
        Q (int): Second dilation, coprime to :obj:`P`.
        window (WindowConfig, optional): Overrides the window of
            :obj:`config`. (default: :obj:`None`)
        config (ReconstructConfig, optional): Reconstruction parameters.
            (default: :obj:`None`)

    Returns:
        PeriodicityCertificate: The reconstructed function and the checks
            it passed.

    Raises:
        UnsupportedError: If :math:`\gcd(P, Q) \ne 1`.
        InputError: If an input is malformed or the pair is incompatible;
            the witness is the first offending coset.
        TheoremViolation: If a check guaranteed by the theory fails.
    """
    config = config or ReconstructConfig()
    window = window or config.window
    _check_pair(gP, gQ, P, Q)
    if gcd(P, Q) != 1:
        raise UnsupportedError(
            f"Reconstruction needs coprime dilations, got {P} and {Q}; "
            "use the independent sublattice instead.",
            witness=(P, Q),
        )
    for name, g in (("gP", gP), ("gQ", gQ)):
        if g.zero_value != 0:
            raise InputError(
                f"`{name}` must vanish at 0, got {g.zero_value}.",
                witness=Point.zero(g.rank),
            )
    try:
        return _reconstruct(gP, gQ, P, Q, window, config)
    except PeriodaError as error:
        # A compatible pair passes every check, so a failure is either an
        # incompatible pair or a genuine violation.
        compatibility = check_compatibility(gP, gQ, P, Q)
        if compatibility.equal:
            raise
        raise InputError(
            "The dilation differences are incompatible at coset "
            f"{compatibility.witness}: {compatibility.values}.",
            witness=compatibility.witness,
        ) from error


def _reconstruct(
    gP: QuasiPeriodicFn,
    gQ: QuasiPeriodicFn,
    P: int,
    Q: int,
    window: WindowConfig,
    config: ReconstructConfig,
) -> PeriodicityCertificate:
    lattice = gP.lattice
    sum_p = TelescopeFn(gP, P, config.telescope_guard)
    sum_q = TelescopeFn(gQ, Q, config.telescope_guard)
    candidates = support_cosets(gP, gQ, P, Q)
    lattice_point = lattice.generators[0]
    probes = [c for c in candidates if not c.is_zero] + [lattice_point]

    values = ordered_map(lambda x: (sum_p(x), sum_q(x)), probes)
    entries: Dict[Point, Fraction] = {}
    for x, (value_p, value_q) in zip(probes, values):
        if value_p != value_q:
            raise TheoremViolation(
                f"Telescoping sums disagree at {x}: {value_p} != {value_q}."
            )
        entries[lattice.reduce(x)] = value_p
    constant_c = entries[Point.zero(lattice.rank)]
    result = QuasiPeriodicFn(lattice, entries, constant_c)
    logger.info(
        "Reconstructed %d cosets from %d candidates, c = %s.",
        len(result.entries),
        len(candidates),
        constant_c,
    )

    for m, g in ((P, gP), (Q, gQ)):
        report = equal_on_cosets(dilate_diff(result, m), g)
        if not report.equal:
            raise TheoremViolation(
                f"Dilation difference by {m} is wrong at {report.witness}: "
                f"{report.values}."
            )
    for reference in (sum_p, sum_q):
        report = equal_on_window(result, reference, window, skip_zero=True)
        if not report.equal:
            raise TheoremViolation(
                f"Reconstruction differs from a telescoping sum at "
                f"{report.witness}: {report.values}."
            )
    return PeriodicityCertificate(
        result,
        constant_c,
        window,
        True,
        candidates + [Point.zero(lattice.rank)],
    )
