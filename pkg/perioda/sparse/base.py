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
from abc import ABC, abstractmethod
from fractions import Fraction

from perioda.errors import InputError
from perioda.lattices import Point


class BaseSparseFn(ABC):
    r"""An exact function :math:`V \to \mathbb{Q}` that can be evaluated at
    any point of :math:`V`."""

    @property
    @abstractmethod
    def rank(self) -> int:
        pass

    @abstractmethod
    def evaluate(self, x: Point) -> Fraction:
        r"""Returns the exact value at :obj:`x`.

        Args:
            x (Point): A point of the same rank.

        Returns:
            Fraction: The value.
        """
        pass

    def __call__(self, x: Point) -> Fraction:
        if x.rank != self.rank:
            raise InputError(
                f"Rank mismatch: function of rank {self.rank}, "
                f"point of rank {x.rank}.",
                witness=x,
            )
        return self.evaluate(x)

    def dilate_diff(self, m: int) -> "BaseSparseFn":
        r"""Returns :math:`x \mapsto f(mx) - f(x)` as a lazy function."""
        from perioda.sparse.lazy import DilationDifferenceFn

        return DilationDifferenceFn(self, m)

    def translate(self, t: Point) -> "BaseSparseFn":
        r"""Returns :math:`x \mapsto f(x + t)` as a lazy function."""
        from perioda.sparse.lazy import TranslatedFn

        return TranslatedFn(self, t)


def check_dilation(m: int) -> int:
    if isinstance(m, bool) or not isinstance(m, int) or m < 2:
        raise InputError(f"Dilations should be integers >= 2, got {m!r}.")
    return m


def dilate_diff(f: BaseSparseFn, m: int) -> BaseSparseFn:
    r"""Returns the dilation difference :math:`f_m(x) = f(mx) - f(x)`.

    A :obj:`QuasiPeriodicFn` input yields a :obj:`QuasiPeriodicFn` over the
    same lattice; a telescoping sum dilated by its own factor yields its
    summand; anything else yields a lazy function.

    Args:
        f (BaseSparseFn): The function to differentiate.
        m (int): The dilation factor, at least :obj:`2`.

    Returns:
        BaseSparseFn: The dilation difference.
    """
    return f.dilate_diff(check_dilation(m))
