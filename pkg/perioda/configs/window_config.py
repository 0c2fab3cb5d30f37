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

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

from perioda.configs.base_config import BaseConfig
from perioda.errors import InputError
from perioda.lattices import Point, height_key


@dataclass(frozen=True)
class WindowConfig(BaseConfig):
    r"""The finite verification surface used when two functions are compared
    pointwise.

    Args:
        bound (int, optional): Half-width :math:`B` of the box
            :math:`[-B, B]^r` in reference coordinates. (default: :obj:`4`)
        den_cap (int, optional): Denominator cap :math:`D`; every rational
            :math:`k/d` with :math:`d \mid D` and :math:`|k| \le B d` is a
            coordinate value of the window. (default: :obj:`6`)
        alpha_probes (Sequence[Point], optional): Extra points, typically
            with a non-zero :math:`\alpha`-part, that a box of rationals
            cannot contain. (default: :obj:`()`)
    """

    bound: int = 4
    den_cap: int = 6
    alpha_probes: Tuple[Point, ...] = ()

    def __post_init__(self) -> None:
        self._require(self.bound >= 1, 'bound', "a value larger than 0")
        self._require(self.den_cap >= 1, 'den_cap', "a value larger than 0")
        object.__setattr__(self, 'alpha_probes', tuple(self.alpha_probes))

    def with_probes(self, probes: Sequence[Point]) -> WindowConfig:
        r"""Returns a copy with additional :math:`\alpha`-probes."""
        return WindowConfig(
            self.bound, self.den_cap, self.alpha_probes + tuple(probes)
        )

    def coordinate_values(self) -> List[Fraction]:
        r"""Returns the sorted set of admissible coordinate values."""
        values = set()
        for d in range(1, self.den_cap + 1):
            if self.den_cap % d:
                continue
            for k in range(-self.bound * d, self.bound * d + 1):
                values.add(Fraction(k, d))
        return sorted(values)

    def points(self, rank: int) -> List[Point]:
        r"""Enumerates the window in rank :obj:`rank`.

        Args:
            rank (int): The rank of the ambient space.

        Returns:
            List[Point]: The box points ordered by :func:`height_key`,
                followed by the :math:`\alpha`-probes in their given order.

        Raises:
            InputError: If an :math:`\alpha`-probe has another rank.
        """
        for probe in self.alpha_probes:
            if probe.rank != rank:
                raise InputError(
                    f"Probe {probe} does not have rank {rank}.", witness=probe
                )
        values = self.coordinate_values()
        box = [
            Point.of(*coords)
            for coords in itertools.product(values, repeat=rank)
        ]
        box.sort(key=height_key)
        return box + list(self.alpha_probes)
