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

from perioda.errors import InputError
from perioda.lattices import Point
from perioda.sparse.base import BaseSparseFn, check_dilation


@dataclass(frozen=True)
class DilationDifferenceFn(BaseSparseFn):
    r"""The lazy function :math:`x \mapsto f(mx) - f(x)`."""

    inner: BaseSparseFn
    m: int

    def __post_init__(self) -> None:
        check_dilation(self.m)

    @property
    def rank(self) -> int:
        return self.inner.rank

    def evaluate(self, x: Point) -> Fraction:
        return self.inner(x.scale(self.m)) - self.inner(x)


@dataclass(frozen=True)
class TranslatedFn(BaseSparseFn):
    r"""The lazy function :math:`x \mapsto f(x + t)`."""

    inner: BaseSparseFn
    shift: Point

    def __post_init__(self) -> None:
        if self.shift.rank != self.inner.rank:
            raise InputError(
                f"Cannot translate a rank-{self.inner.rank} function by "
                f"{self.shift}.",
                witness=self.shift,
            )

    @property
    def rank(self) -> int:
        return self.inner.rank

    def evaluate(self, x: Point) -> Fraction:
        return self.inner(x + self.shift)


def translate(f: BaseSparseFn, t: Point) -> BaseSparseFn:
    r"""Returns :math:`x \mapsto f(x + t)`."""
    return TranslatedFn(f, t)
