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

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Tuple

from perioda.errors import InputError
from perioda.lattices import Lattice, Point
from perioda.sparse import QuasiPeriodicFn
from perioda.sparse.base import check_dilation


@dataclass(frozen=True, eq=False)
class Divisor:
    r"""An integer-valued rank-:math:`2` function on
    :math:`\mathbb{C} / \Lambda`, read in coordinates with respect to a
    basis :math:`(\omega_1, \omega_2)`.

    Supports lie in :math:`M = \mathbb{Q}\Lambda`, and the value at
    :math:`0` is the value of the :math:`0`-coset: divisors carry no
    modification at :math:`0`.

    Args:
        underlying (QuasiPeriodicFn): The multiplicity function.

    Raises:
        InputError: If a type invariant fails.
    """

    underlying: QuasiPeriodicFn

    def __post_init__(self) -> None:
        f = self.underlying
        if f.rank != 2:
            raise InputError(f"Divisors have rank 2, got {f.rank}.")
        for key, value in f.entries.items():
            if not key.in_m:
                raise InputError(
                    f"Divisor supports must lie in M, got {key}.", witness=key
                )
            if value.denominator != 1:
                raise InputError(
                    f"Divisor values must be integers, got {value} at {key}.",
                    witness=key,
                )
        if f.is_modified_at_zero:
            raise InputError(
                f"Divisor value at 0 ({f.zero_value}) must equal the value "
                f"on the lattice ({f.zero_coset_value}).",
                witness=Point.zero(2),
            )

    @classmethod
    def from_points(
        cls, lattice: Lattice, multiplicities: Iterable[Tuple[Point, int]]
    ) -> Divisor:
        r"""Builds :math:`\sum n_i \delta_{z_i}` from (point, multiplicity)
        pairs, repeated points adding up."""
        f = QuasiPeriodicFn.from_pairs(lattice, multiplicities)
        return cls(f.with_zero_value(f.zero_coset_value))

    @classmethod
    def zero(cls, lattice: Lattice) -> Divisor:
        return cls(QuasiPeriodicFn.zero(lattice))

    @property
    def lattice(self) -> Lattice:
        return self.underlying.lattice

    @property
    def is_zero(self) -> bool:
        return self.underlying.is_zero

    @property
    def support(self) -> Tuple[Point, ...]:
        return self.underlying.support

    def __call__(self, x: Point) -> int:
        return int(self.underlying(x))

    @property
    def value_at_zero(self) -> int:
        return int(self.underlying.zero_value)

    def pullback(self, p: int) -> Divisor:
        r"""Returns :math:`(\sigma d)(z) = d(pz)`."""
        return Divisor(self.underlying.pullback(p))

    def coboundary(self, p: int) -> Divisor:
        r"""Returns :math:`d(pz) - d(z)`."""
        return self.pullback(check_dilation(p)) - self

    def over(self, lattice: Lattice) -> Divisor:
        return Divisor(self.underlying.over(lattice))

    def __add__(self, other: Divisor) -> Divisor:
        return Divisor(self.underlying + other.underlying)

    def __sub__(self, other: Divisor) -> Divisor:
        return Divisor(self.underlying - other.underlying)

    def __neg__(self) -> Divisor:
        return Divisor(-self.underlying)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Divisor):
            return NotImplemented
        return self.underlying == other.underlying

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        body = " + ".join(
            f"{int(v)}*[{k}]" for k, v in self.underlying.entries.items()
        )
        return f"Divisor({body or '0'} mod {self.lattice.basis})"


def as_divisor(f: QuasiPeriodicFn) -> Divisor:
    r"""Reads a quasi-periodic function as a divisor, checking integrality
    of its values."""
    values = list(f.entries.values()) + [f.zero_value]
    if any(Fraction(v).denominator != 1 for v in values):
        raise InputError("Divisor values must be integers.")
    return Divisor(f)
