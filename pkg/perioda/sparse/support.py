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
from typing import Iterable, List, Set

from perioda.errors import InputError
from perioda.lattices import Lattice, Point, height_key
from perioda.sparse.base import check_dilation
from perioda.sparse.quasi_periodic import QuasiPeriodicFn
from perioda.utils import (
    is_multiplicatively_independent,
    proportionality,
    solve_exponent_pair,
)

logger = logging.getLogger(__name__)


def dilation_orbit(lattice: Lattice, s: Point, m: int) -> Set[Point]:
    r"""Returns :math:`\{m^n s : n \ge 1\}` modulo :obj:`lattice` for a
    rational point :obj:`s`. The orbit is eventually periodic, so the
    enumeration stops at the first repeated coset."""
    if not s.in_m:
        raise InputError(f"Orbits are finite only for rational points: {s}.")
    seen: Set[Point] = set()
    current = lattice.reduce(s.scale(m))
    while current not in seen:
        seen.add(current)
        current = lattice.reduce(current.scale(m))
    return seen


def _orbit_union(
    lattice: Lattice, points: Iterable[Point], m: int
) -> Set[Point]:
    r"""Returns the union of the dilation orbits of the rational points
    among :obj:`points`. Every coset already collected comes with its
    whole forward orbit, so each enumeration stops at the first coset seen
    before."""
    seen: Set[Point] = set()
    for s in points:
        if not s.in_m:
            continue
        current = lattice.reduce(s.scale(m))
        while current not in seen:
            seen.add(current)
            current = lattice.reduce(current.scale(m))
    return seen


def support_cosets(
    gP: QuasiPeriodicFn, gQ: QuasiPeriodicFn, P: int, Q: int
) -> List[Point]:
    r"""Bounds the support of any function whose dilation differences by
    :obj:`P` and :obj:`Q` are :obj:`gP` and :obj:`gQ`.

    Such a function can be non-zero at :math:`z` only if
    :math:`z \in P^n s + \Lambda` and :math:`z \in Q^k t + \Lambda` for
    some :math:`n, k \ge 1` and support cosets :math:`s` of :obj:`gP`,
    :math:`t` of :obj:`gQ`. Rational orbits are enumerated until they
    repeat; for representatives off :math:`M` the exponents are fixed by
    the :math:`\alpha`-parts, because :obj:`P` and :obj:`Q` are
    multiplicatively independent.

    Args:
        gP (QuasiPeriodicFn): The dilation difference by :obj:`P`.
        gQ (QuasiPeriodicFn): The dilation difference by :obj:`Q`.
        P (int): First dilation.
        Q (int): Second dilation.

    Returns:
        List[Point]: Reduced coset representatives, ordered by
            :func:`height_key`.

    Raises:
        InputError: If :obj:`P` and :obj:`Q` are multiplicatively dependent
            or the functions live over different lattices.
    """
    check_dilation(P)
    check_dilation(Q)
    if not is_multiplicatively_independent(P, Q):
        raise InputError(
            f"{P} and {Q} are multiplicatively dependent.", witness=(P, Q)
        )
    if gP.lattice != gQ.lattice:
        raise InputError(
            "Both dilation differences must share one lattice.",
            witness=(gP.lattice.basis, gQ.lattice.basis),
        )
    lattice = gP.lattice

    rational_p = _orbit_union(lattice, gP.support, P)
    rational_q = _orbit_union(lattice, gQ.support, Q)
    candidates = rational_p & rational_q

    for s in gP.support:
        if s.in_m:
            continue
        for t in gQ.support:
            if t.in_m:
                continue
            ratio = proportionality(t.irr, s.irr)
            if ratio is None:
                continue
            exponents = solve_exponent_pair(P, Q, ratio)
            if exponents is None:
                continue
            n, k = exponents
            if n < 1 or k < 1:
                continue
            if lattice.contains(s.scale(P**n) - t.scale(Q**k)):
                candidates.add(lattice.reduce(s.scale(P**n)))

    logger.debug(
        "Support bound: %d rational and %d total candidate cosets.",
        len(rational_p & rational_q),
        len(candidates),
    )
    return sorted(candidates, key=height_key)
