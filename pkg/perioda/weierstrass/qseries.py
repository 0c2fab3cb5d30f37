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
from functools import cached_property
from math import ceil
from typing import Optional, Tuple

import numpy as np

from perioda.configs import TruncationPolicy
from perioda.weierstrass.base import BaseWeierstrassEngine
from perioda.weierstrass.complex_lattice import ComplexLattice

logger = logging.getLogger(__name__)


class QSeriesEngine(BaseWeierstrassEngine):
    r"""Evaluates :math:`\zeta` and :math:`\wp` through their
    :math:`q`-expansions in the reduced basis :math:`(a, b)`.

    With :math:`u = z/a`, :math:`\tau = b/a` and
    :math:`Q = e^{2\pi i\tau}`:

    .. math::
        a\,\zeta(z) = \eta_\tau u + \pi\cot(\pi u)
            + 4\pi\sum_{n \ge 1} \frac{Q^n}{1 - Q^n}\sin(2\pi n u),

    where :math:`\eta_\tau = \frac{\pi^2}{3} E_2(\tau)`. A reduced basis has
    :math:`\mathrm{Im}\,\tau \ge \sqrt{3}/2`, so a few dozen terms reach
    double precision for :math:`|\mathrm{Im}\,u| \le \frac{3}{4}
    \mathrm{Im}\,\tau`, which covers the centred parallelogram and its
    shifts by up to :math:`(a + b)/4`.

    Args:
        lattice (ComplexLattice): The period lattice.
        policy (TruncationPolicy, optional): Accuracy settings; only
            :obj:`max_terms` bounds the expansion.
            (default: :obj:`None`)
    """

    def __init__(
        self,
        lattice: ComplexLattice,
        policy: Optional[TruncationPolicy] = None,
    ) -> None:
        super().__init__(lattice, policy)
        a, b = lattice.reduced_basis
        self._scale = a
        self._tau = b / a
        terms = ceil(80 / (np.pi * self._tau.imag)) + 2
        self._n = np.arange(1, min(terms, self.policy.max_terms) + 1)
        q_n = np.exp(2j * np.pi * self._tau * self._n)
        self._weights = q_n / (1 - q_n)
        logger.debug(
            "q-series engine: tau = %s, %d terms.", self._tau, len(self._n)
        )

    @cached_property
    def _eta_tau(self) -> complex:
        e2 = 1 - 24 * np.sum(self._n * self._weights)
        return complex(np.pi**2 / 3 * e2)

    def _zeta_raw(self, w: complex) -> complex:
        u = w / self._scale
        series = np.sum(self._weights * np.sin(2 * np.pi * self._n * u))
        value = (
            self._eta_tau * u + np.pi / np.tan(np.pi * u) + 4 * np.pi * series
        )
        return complex(value / self._scale)

    def _wp_raw(self, w: complex) -> complex:
        u = w / self._scale
        series = np.sum(
            self._n * self._weights * np.cos(2 * np.pi * self._n * u)
        )
        value = (
            -self._eta_tau
            + (np.pi / np.sin(np.pi * u)) ** 2
            - 8 * np.pi**2 * series
        )
        return complex(value / self._scale**2)

    def _reduced_quasi_periods(self) -> Tuple[complex, complex]:
        # eta(b) is summed at the half period b / 2.
        b = self._scale * self._tau
        return self._eta_tau / self._scale, 2 * self._zeta_raw(b / 2)
