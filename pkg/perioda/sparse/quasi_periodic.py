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
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from types import MappingProxyType
from typing import Dict, Iterable, Mapping, Tuple

from perioda.errors import InputError
from perioda.lattices import Lattice, Point, height_key
from perioda.sparse.base import BaseSparseFn, check_dilation
from perioda.utils import RationalLike, parse_fraction

logger = logging.getLogger(__name__)


def _ordered(entries: Mapping[Point, Fraction]) -> Mapping[Point, Fraction]:
    return MappingProxyType(
        {
            key: entries[key]
            for key in sorted(entries, key=height_key)
            if entries[key] != 0
        }
    )


@dataclass(frozen=True, eq=False)
class QuasiPeriodicFn(BaseSparseFn):
    r"""A :math:`\Lambda`-periodic function with finitely many non-zero
    cosets, together with an explicit value at the single point :math:`0`.

    Evaluation at :math:`0` returns :obj:`zero_value`; evaluation at
    :math:`\lambda \in \Lambda \setminus \{0\}` returns the entry of the
    :math:`0`-coset. The two are independent, which is how a modification
    at :math:`0` is represented.

    Args:
        lattice (Lattice): The period lattice :math:`\Lambda`.
        entries (Mapping[Point, RationalLike] or Iterable): Coset
            representatives and their values. Representatives are reduced
            modulo the lattice; zero values are dropped.
            (default: :obj:`{}`)
        zero_value (RationalLike, optional): The value at :math:`0`.
            (default: :obj:`0`)

    Raises:
        InputError: If two representatives name the same coset or a
            representative has the wrong rank.
    """

    lattice: Lattice
    entries: Mapping[Point, Fraction] = field(default_factory=dict)
    zero_value: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        zero_value = parse_fraction(self.zero_value)
        object.__setattr__(self, 'zero_value', zero_value)
        items = (
            self.entries.items()
            if isinstance(self.entries, Mapping)
            else self.entries
        )
        normalized: Dict[Point, Fraction] = {}
        for point, value in items:
            if point.rank != self.lattice.rank:
                raise InputError(
                    f"Representative {point} does not have rank "
                    f"{self.lattice.rank}.",
                    witness=point,
                )
            key = self.lattice.reduce(point)
            if key in normalized:
                raise InputError(
                    f"Coset {key} is listed twice.", witness=key
                )
            normalized[key] = parse_fraction(value)
        object.__setattr__(self, 'entries', _ordered(normalized))

    @classmethod
    def from_pairs(
        cls,
        lattice: Lattice,
        pairs: Iterable[Tuple[Point, RationalLike]],
        zero_value: RationalLike = 0,
    ) -> QuasiPeriodicFn:
        r"""Builds a function from possibly repeated cosets, summing the
        values of repeated ones."""
        sums: Dict[Point, Fraction] = defaultdict(Fraction)
        for point, value in pairs:
            sums[lattice.reduce(point)] += parse_fraction(value)
        return cls(lattice, sums, zero_value)

    @classmethod
    def _from_reduced(
        cls,
        lattice: Lattice,
        entries: Mapping[Point, Fraction],
        zero_value: Fraction,
    ) -> QuasiPeriodicFn:
        r"""Builds a function from representatives that are already
        reduced modulo :obj:`lattice`, one per coset."""
        fn = cls.__new__(cls)
        object.__setattr__(fn, 'lattice', lattice)
        object.__setattr__(fn, 'entries', _ordered(entries))
        object.__setattr__(fn, 'zero_value', parse_fraction(zero_value))
        return fn

    @classmethod
    def zero(cls, lattice: Lattice) -> QuasiPeriodicFn:
        return cls(lattice)

    @property
    def rank(self) -> int:
        return self.lattice.rank

    @property
    def support(self) -> Tuple[Point, ...]:
        r"""The reduced representatives of the non-zero cosets."""
        return tuple(self.entries)

    @property
    def is_zero(self) -> bool:
        return not self.entries and self.zero_value == 0

    def value_on_coset(self, x: Point) -> Fraction:
        r"""Returns the value on the coset of :obj:`x`, ignoring the special
        value at :math:`0`."""
        return self.entries.get(self.lattice.reduce(x), Fraction(0))

    @property
    def zero_coset_value(self) -> Fraction:
        return self.value_on_coset(Point.zero(self.rank))

    @property
    def is_modified_at_zero(self) -> bool:
        return self.zero_value != self.zero_coset_value

    def evaluate(self, x: Point) -> Fraction:
        if x.is_zero:
            return self.zero_value
        return self.value_on_coset(x)

    def with_zero_value(self, value: RationalLike) -> QuasiPeriodicFn:
        return QuasiPeriodicFn(self.lattice, self.entries, value)

    def pullback(self, m: int) -> QuasiPeriodicFn:
        r"""Returns :math:`x \mapsto f(mx)` in closed form.

        The coset :math:`s + \Lambda` pulls back to the :math:`m^r` cosets
        :math:`(s + \lambda) / m + \Lambda` with :math:`\lambda` running
        over :math:`\Lambda / m\Lambda`.

        Args:
            m (int): A positive integer.

        Returns:
            QuasiPeriodicFn: The pulled-back function over the same lattice.
        """
        if m < 1:
            raise InputError(f"Pullbacks need a positive factor, got {m}.")
        if m == 1:
            return self
        # The shifts have basis coordinates in [0, m), so every (key +
        # shift) / m is again a reduced representative.
        shifts = self.lattice.coset_representatives(self.lattice.scale(m))
        entries = {
            (key + shift).scale(Fraction(1, m)): value
            for key, value in self.entries.items()
            for shift in shifts
        }
        logger.debug(
            "Pulled back %d cosets by %d into %d cosets.",
            len(self.entries),
            m,
            len(entries),
        )
        return QuasiPeriodicFn._from_reduced(
            self.lattice, entries, self.zero_value
        )

    def dilate_diff(self, m: int) -> QuasiPeriodicFn:
        return self.pullback(check_dilation(m)) - self

    def is_periodic_under(self, lattice: Lattice) -> bool:
        r"""Checks :math:`f(x + \lambda) = f(x)` for all :math:`x \ne 0` and
        :math:`\lambda` in :obj:`lattice`, ignoring the value at
        :math:`0`."""
        if lattice.rank != self.rank:
            raise InputError(
                f"Rank mismatch: {lattice.rank} != {self.rank}."
            )
        for generator in lattice.generators:
            for key, value in self.entries.items():
                if self.value_on_coset(key + generator) != value:
                    return False
                if self.value_on_coset(key - generator) != value:
                    return False
        return True

    def over(self, lattice: Lattice) -> QuasiPeriodicFn:
        r"""Re-expresses the function over another period lattice.

        Args:
            lattice (Lattice): A lattice under which the function is
                periodic.

        Returns:
            QuasiPeriodicFn: The same function with keys reduced modulo
                :obj:`lattice`.

        Raises:
            InputError: If the function is not periodic under
                :obj:`lattice`.
        """
        if lattice == self.lattice:
            return self
        if not self.is_periodic_under(lattice):
            raise InputError(
                f"The function is not periodic under {lattice.basis}.",
                witness=lattice,
            )
        common = self.lattice.meet(lattice)
        entries: Mapping[Point, Fraction] = self.entries
        if common != self.lattice:
            shifts = self.lattice.coset_representatives(common)
            entries = {
                common.reduce(key + shift): value
                for key, value in self.entries.items()
                for shift in shifts
            }
        if common != lattice:
            entries = {
                lattice.reduce(key): value for key, value in entries.items()
            }
        return QuasiPeriodicFn(lattice, entries, self.zero_value)

    def _aligned(
        self, other: QuasiPeriodicFn
    ) -> Tuple[QuasiPeriodicFn, QuasiPeriodicFn]:
        if other.rank != self.rank:
            raise InputError(f"Rank mismatch: {self.rank} != {other.rank}.")
        if other.lattice == self.lattice:
            return self, other.over(self.lattice)
        common = self.lattice.meet(other.lattice)
        return self.over(common), other.over(common)

    def __add__(self, other: QuasiPeriodicFn) -> QuasiPeriodicFn:
        left, right = self._aligned(other)
        sums: Dict[Point, Fraction] = defaultdict(Fraction, left.entries)
        for key, value in right.entries.items():
            sums[key] += value
        return QuasiPeriodicFn._from_reduced(
            left.lattice, sums, left.zero_value + right.zero_value
        )

    def __neg__(self) -> QuasiPeriodicFn:
        return self.scale(-1)

    def __sub__(self, other: QuasiPeriodicFn) -> QuasiPeriodicFn:
        return self + (-other)

    def scale(self, factor: RationalLike) -> QuasiPeriodicFn:
        factor = parse_fraction(factor)
        return QuasiPeriodicFn._from_reduced(
            self.lattice,
            {key: value * factor for key, value in self.entries.items()},
            self.zero_value * factor,
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QuasiPeriodicFn):
            return NotImplemented
        if other.rank != self.rank:
            return False
        try:
            left, right = self._aligned(other)
        except InputError:
            return False
        return (
            dict(left.entries) == dict(right.entries)
            and left.zero_value == right.zero_value
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        body = ", ".join(f"{k}: {v}" for k, v in self.entries.items())
        return (
            f"QuasiPeriodicFn(lattice={self.lattice.basis}, "
            f"entries={{{body}}}, zero_value={self.zero_value})"
        )
