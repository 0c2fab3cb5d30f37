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
from typing import Any, Dict, Optional, Tuple

from perioda.configs import WindowConfig
from perioda.errors import InputError
from perioda.lattices import Point, height_key
from perioda.sparse.base import BaseSparseFn
from perioda.sparse.quasi_periodic import QuasiPeriodicFn
from perioda.utils import format_fraction, ordered_map

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EqualityReport:
    r"""The verdict of an exact comparison.

    Attributes:
        equal (bool): Whether no difference was found.
        checked (int): How many points or cosets were compared.
        witness (Point, optional): The first point where the functions
            differ. (default: :obj:`None`)
        values (Tuple[Fraction, Fraction], optional): The two values at the
            witness. (default: :obj:`None`)
    """

    equal: bool
    checked: int
    witness: Optional[Point] = None
    values: Optional[Tuple[Fraction, Fraction]] = None

    def __bool__(self) -> bool:
        return self.equal

    def to_dict(self) -> Dict[str, Any]:
        from perioda.serialization import encode_point

        result: Dict[str, Any] = {
            "equal": self.equal,
            "checked": self.checked,
        }
        if self.witness is not None and self.values is not None:
            result["witness"] = encode_point(self.witness)
            result["values"] = [format_fraction(v) for v in self.values]
        return result


def equal_on_cosets(
    f1: QuasiPeriodicFn, f2: QuasiPeriodicFn
) -> EqualityReport:
    r"""Compares two quasi-periodic functions exactly, coset by coset, after
    refining both to the intersection of their lattices. The value at
    :math:`0` is compared first.

    Args:
        f1 (QuasiPeriodicFn): First function.
        f2 (QuasiPeriodicFn): Second function of the same rank.

    Returns:
        EqualityReport: The verdict, with the first differing coset (in
            :func:`height_key` order) as witness.
    """
    if f1.rank != f2.rank:
        raise InputError(f"Rank mismatch: {f1.rank} != {f2.rank}.")
    common = f1.lattice.meet(f2.lattice)
    left, right = f1.over(common), f2.over(common)
    zero = Point.zero(f1.rank)
    if left.zero_value != right.zero_value:
        return EqualityReport(
            False, 1, zero, (left.zero_value, right.zero_value)
        )
    # Both key sets are reduced modulo the common lattice.
    keys = set(left.entries) | set(right.entries)
    zero_value = Fraction(0)
    differing = [
        key
        for key in keys
        if left.entries.get(key, zero_value)
        != right.entries.get(key, zero_value)
    ]
    if not differing:
        return EqualityReport(True, len(keys) + 1)
    key = min(differing, key=height_key)
    values = (
        left.entries.get(key, zero_value),
        right.entries.get(key, zero_value),
    )
    return EqualityReport(False, len(keys) + 1, key, values)


def equal_on_window(
    f1: BaseSparseFn,
    f2: BaseSparseFn,
    window: WindowConfig,
    skip_zero: bool = False,
) -> EqualityReport:
    r"""Compares two functions pointwise on a finite window.

    Args:
        f1 (BaseSparseFn): First function.
        f2 (BaseSparseFn): Second function of the same rank.
        window (WindowConfig): The points to compare at.
        skip_zero (bool, optional): Whether to leave out the point
            :math:`0`, where a modification is allowed.
            (default: :obj:`False`)

    Returns:
        EqualityReport: The verdict, with the first differing window point
            as witness.
    """
    if f1.rank != f2.rank:
        raise InputError(f"Rank mismatch: {f1.rank} != {f2.rank}.")
    points = [
        x
        for x in window.points(f1.rank)
        if not (skip_zero and x.is_zero)
    ]
    values = ordered_map(lambda x: (f1(x), f2(x)), points)
    for x, (a, b) in zip(points, values):
        if a != b:
            logger.debug("Functions differ at %s: %s != %s.", x, a, b)
            return EqualityReport(False, len(points), x, (a, b))
    return EqualityReport(True, len(points))
