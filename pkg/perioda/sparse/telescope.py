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
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import List, Tuple

from perioda.errors import InputError, InternalError
from perioda.lattices import Point
from perioda.sparse.base import BaseSparseFn, check_dilation
from perioda.sparse.quasi_periodic import QuasiPeriodicFn
from perioda.utils import (
    Constants,
    lcm_all,
    prime_set,
    proportionality,
    solve_power,
    valuation,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class TelescopeFn(BaseSparseFn):
    r"""The lazy sum :math:`x \mapsto \sum_{i \ge 1} g(x / m^i)`.

    For :math:`x \ne 0` only finitely many terms are non-zero, and the
    largest index that can contribute is computed exactly from :math:`x`
    and the support of :obj:`g`. The value at :math:`0` is :math:`0`.

    Args:
        g (QuasiPeriodicFn): The summand. It must vanish at :math:`0` and
            on the :math:`0`-coset, otherwise the sum diverges at lattice
            points.
        m (int): The dilation factor, at least :obj:`2`.
        guard (int, optional): Number of terms past the stopping index that
            are checked to vanish. (default: :obj:`2`)

    Raises:
        InputError: If :obj:`g` does not vanish on the lattice.
    """

    g: QuasiPeriodicFn
    m: int
    guard: int = field(default=Constants.TELESCOPE_GUARD_TERMS)

    def __post_init__(self) -> None:
        check_dilation(self.m)
        if self.g.zero_value != 0 or self.g.zero_coset_value != 0:
            raise InputError(
                "Telescoping sums diverge for summands that do not vanish "
                f"on the lattice: g(0) = {self.g.zero_value}, "
                f"g(lambda) = {self.g.zero_coset_value}.",
                witness=Point.zero(self.g.rank),
            )

    @property
    def rank(self) -> int:
        return self.g.rank

    @cached_property
    def _prime(self) -> Tuple[int, int]:
        p = prime_set(self.m)[0]
        return p, valuation(self.m, p)

    @cached_property
    def _rational_keys(self) -> List[Point]:
        return [key for key in self.g.support if key.in_m]

    @cached_property
    def _irrational_keys(self) -> List[Point]:
        return [key for key in self.g.support if not key.in_m]

    @cached_property
    def _denominator_valuation(self) -> int:
        r"""The :math:`p`-adic valuation of the common denominator of the
        basis coordinates of the rational support."""
        p, _ = self._prime
        common = lcm_all(
            c.denominator
            for key in self._rational_keys
            for c in self.g.lattice.coordinates(key.rat)
        )
        return valuation(common, p)

    def stop_index(self, x: Point) -> int:
        r"""Returns an index beyond which :math:`g(x / m^i) = 0`.

        For rational :math:`x` the basis coordinates of :math:`x / m^i`
        must have the denominators of some support coset, which bounds
        :math:`i` through the :math:`p`-adic valuation for a prime
        :math:`p \mid m`. For :math:`x` off :math:`M` the
        :math:`\alpha`-parts must match exactly, which fixes :math:`i` for
        every support coset.

        Args:
            x (Point): A non-zero point.

        Returns:
            int: The stopping index, :obj:`0` if no term can contribute.
        """
        if x.in_m:
            if not self._rational_keys:
                return 0
            p, step = self._prime
            bounds = [
                (self._denominator_valuation + valuation(c.numerator, p))
                // step
                for c in self.g.lattice.coordinates(x.rat)
                if c != 0
            ]
            return max(min(bounds), 0)
        stop = 0
        for key in self._irrational_keys:
            ratio = proportionality(x.irr, key.irr)
            if ratio is None:
                continue
            exponent = solve_power(self.m, ratio)
            if exponent is not None and exponent > stop:
                stop = exponent
        return stop

    def terms(self, x: Point) -> List[Fraction]:
        r"""Returns the terms :math:`g(x / m^i)` for
        :math:`1 \le i \le` :meth:`stop_index`."""
        stop = self.stop_index(x)
        return [
            self.g(x.scale(Fraction(1, self.m**i)))
            for i in range(1, stop + 1)
        ]

    def evaluate(self, x: Point) -> Fraction:
        if x.is_zero:
            return Fraction(0)
        stop = self.stop_index(x)
        for i in range(stop + 1, stop + self.guard + 1):
            if self.g(x.scale(Fraction(1, self.m**i))) != 0:
                raise InternalError(
                    f"Telescope term {i} at {x} does not vanish past the "
                    f"stopping index {stop}."
                )
        logger.debug("Telescope at %s stops at %d.", x, stop)
        return sum(self.terms(x), Fraction(0))

    def dilate_diff(self, m: int) -> BaseSparseFn:
        if check_dilation(m) == self.m:
            return self.g
        return super().dilate_diff(m)


def telescope(g: QuasiPeriodicFn, m: int) -> TelescopeFn:
    r"""Builds the telescoping sum :math:`\sum_{i \ge 1} g(x / m^i)`, the
    function whose dilation difference by :obj:`m` is :obj:`g`.

    Args:
        g (QuasiPeriodicFn): The summand, vanishing on the lattice.
        m (int): The dilation factor.

    Returns:
        TelescopeFn: The lazy sum.
    """
    return TelescopeFn(g, m)
