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
from typing import Iterable, Sequence, Tuple, Union

from perioda.errors import InputError
from perioda.utils.commons import RationalLike, lcm_all, parse_fraction

ScalarLike = Union["Scalar", RationalLike]


@dataclass(frozen=True)
class Scalar:
    r"""An exact number :math:`a + b\alpha` where :math:`a, b` are
    rationals and :math:`\alpha` is a formal irrational without relations.

    Attributes:
        rat (Fraction): The rational part :math:`a`.
        irr (Fraction): The coefficient :math:`b` of :math:`\alpha`.
            (default: :obj:`0`)
    """

    rat: Fraction
    irr: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, 'rat', parse_fraction(self.rat))
        object.__setattr__(self, 'irr', parse_fraction(self.irr))

    @classmethod
    def of(cls, value: ScalarLike) -> "Scalar":
        if isinstance(value, Scalar):
            return value
        return cls(parse_fraction(value))

    @property
    def is_rational(self) -> bool:
        return self.irr == 0

    def __add__(self, other: "Scalar") -> "Scalar":
        return Scalar(self.rat + other.rat, self.irr + other.irr)

    def __sub__(self, other: "Scalar") -> "Scalar":
        return Scalar(self.rat - other.rat, self.irr - other.irr)

    def __neg__(self) -> "Scalar":
        return Scalar(-self.rat, -self.irr)

    def scale(self, factor: RationalLike) -> "Scalar":
        r"""Multiplies by an exact rational."""
        factor = parse_fraction(factor)
        return Scalar(self.rat * factor, self.irr * factor)

    def __str__(self) -> str:
        if self.irr == 0:
            return str(self.rat)
        return f"{self.rat}+{self.irr}a"


@dataclass(frozen=True)
class Point:
    r"""A point of :math:`V = (\mathbb{Q} \oplus \mathbb{Q}\alpha)^r` in
    reference coordinates.

    Attributes:
        coords (Tuple[Scalar, ...]): The :math:`r` exact coordinates.
    """

    coords: Tuple[Scalar, ...]

    def __post_init__(self) -> None:
        coords = tuple(Scalar.of(c) for c in self.coords)
        if not coords:
            raise InputError("Points need at least one coordinate.")
        object.__setattr__(self, 'coords', coords)

    @classmethod
    def of(cls, *values: ScalarLike) -> "Point":
        r"""Builds a point from scalars or rationals, e.g.
        ``Point.of("1/3", 2)``."""
        return cls(tuple(Scalar.of(v) for v in values))

    @classmethod
    def from_parts(
        cls,
        rat: Sequence[RationalLike],
        irr: Sequence[RationalLike] = (),
    ) -> "Point":
        r"""Builds a point from its rational part and its
        :math:`\alpha`-part (zero when omitted)."""
        if irr and len(irr) != len(rat):
            raise InputError(
                f"Rational and irrational parts differ in length: "
                f"{len(rat)} != {len(irr)}."
            )
        irr = irr or [0] * len(rat)
        return cls(tuple(Scalar(r, i) for r, i in zip(rat, irr)))

    @classmethod
    def zero(cls, rank: int) -> "Point":
        return cls(tuple(Scalar(Fraction(0)) for _ in range(rank)))

    @property
    def rank(self) -> int:
        return len(self.coords)

    @property
    def rat(self) -> Tuple[Fraction, ...]:
        return tuple(c.rat for c in self.coords)

    @property
    def irr(self) -> Tuple[Fraction, ...]:
        return tuple(c.irr for c in self.coords)

    @property
    def in_m(self) -> bool:
        r"""Whether the point lies in :math:`M = \mathbb{Q}\Lambda`."""
        return all(c.is_rational for c in self.coords)

    @property
    def is_zero(self) -> bool:
        return all(c.rat == 0 and c.irr == 0 for c in self.coords)

    def _check_rank(self, other: "Point") -> None:
        if other.rank != self.rank:
            raise InputError(
                f"Rank mismatch: {self.rank} != {other.rank}.",
                witness=(self, other),
            )

    def __add__(self, other: "Point") -> "Point":
        self._check_rank(other)
        return Point(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Point") -> "Point":
        self._check_rank(other)
        return Point(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "Point":
        return Point(tuple(-c for c in self.coords))

    def scale(self, factor: RationalLike) -> "Point":
        r"""Multiplies every coordinate by an exact rational."""
        factor = parse_fraction(factor)
        return Point(tuple(c.scale(factor) for c in self.coords))

    def __str__(self) -> str:
        return "(" + ", ".join(str(c) for c in self.coords) + ")"


def height_key(point: Point) -> Tuple:
    r"""Deterministic ordering of points: common denominator first, then
    rational points before :math:`\alpha`-points, then size, then
    coordinates with positive values ahead of negative ones.
    """
    parts: Iterable[Fraction] = point.rat + point.irr
    denominator = lcm_all(p.denominator for p in parts)
    size = max(abs(v) for v in point.rat + point.irr)
    coordinates = tuple(
        (abs(c.rat), c.rat < 0, abs(c.irr), c.irr < 0) for c in point.coords
    )
    return (denominator, not point.in_m, size, coordinates)
