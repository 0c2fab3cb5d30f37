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
import warnings
from math import ceil
from typing import Optional, Tuple

import numpy as np

from perioda.configs import TruncationPolicy
from perioda.weierstrass.base import BaseWeierstrassEngine
from perioda.weierstrass.complex_lattice import ComplexLattice

logger = logging.getLogger(__name__)


class LatticeSumEngine(BaseWeierstrassEngine):
    r"""Evaluates :math:`\zeta` and :math:`\wp` by the symmetric lattice sum
    over :math:`0 < |\omega| \le R`.

    The odd terms cancel in pairs, so the tails are bounded by
    :math:`2\pi|z|^3/(AR^2)` for :math:`\zeta` and
    :math:`6\pi|z|^2/(AR^2)` for :math:`\wp`, with :math:`A` the covolume.
    A warning is emitted whenever a bound exceeds the tolerance.

    Args:
        lattice (ComplexLattice): The period lattice.
        policy (TruncationPolicy, optional): Accuracy settings; the sum
            runs up to :obj:`radius`. (default: :obj:`None`)
        warn_tail (bool, optional): Whether to warn about tail bounds above
            the tolerance. (default: :obj:`True`)
    """

    def __init__(
        self,
        lattice: ComplexLattice,
        policy: Optional[TruncationPolicy] = None,
        warn_tail: bool = True,
    ) -> None:
        super().__init__(lattice, policy)
        self.warn_tail = warn_tail
        a, b = lattice.reduced_basis
        radius = self.policy.radius
        # Reduced bases satisfy 2 |m a + n b|^2 >= (m^2 + n^2) |a|^2.
        bound = ceil(np.sqrt(2) * radius / abs(a)) + 1
        m, n = np.meshgrid(
            np.arange(-bound, bound + 1), np.arange(-bound, bound + 1)
        )
        omegas = (m * a + n * b).ravel()
        keep = (np.abs(omegas) <= radius) & (omegas != 0)
        self._omegas = omegas[keep]
        logger.debug(
            "Lattice sum over %d points with R = %s.",
            len(self._omegas),
            radius,
        )

    def zeta_error_bound(self, w: complex) -> float:
        r"""Bound on the truncation error of :math:`\zeta(w)`."""
        radius = self.policy.radius
        return 2 * np.pi * abs(w) ** 3 / (self.lattice.area * radius**2)

    def wp_error_bound(self, w: complex) -> float:
        r"""Bound on the truncation error of :math:`\wp(w)`."""
        radius = self.policy.radius
        return 6 * np.pi * abs(w) ** 2 / (self.lattice.area * radius**2)

    def _warn_tail(self, name: str, bound: float) -> None:
        if self.warn_tail and bound > self.policy.tol:
            warnings.warn(
                f"The truncated lattice sum of {name} has a tail bound of "
                f"{bound:.3g}, above the tolerance {self.policy.tol:.3g}. "
                "Increase `radius` or use the q-series engine."
            )

    def _zeta_raw(self, w: complex) -> complex:
        self._warn_tail("zeta", self.zeta_error_bound(w))
        omegas = self._omegas
        terms = 1 / (w - omegas) + 1 / omegas + w / omegas**2
        return complex(1 / w + np.sum(terms))

    def _wp_raw(self, w: complex) -> complex:
        self._warn_tail("wp", self.wp_error_bound(w))
        omegas = self._omegas
        terms = 1 / (w - omegas) ** 2 - 1 / omegas**2
        return complex(1 / w**2 + np.sum(terms))

    def _reduced_quasi_periods(self) -> Tuple[complex, complex]:
        a, b = self.lattice.reduced_basis
        return 2 * self._zeta_raw(a / 2), 2 * self._zeta_raw(b / 2)
