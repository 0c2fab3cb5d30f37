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
from abc import ABC, abstractmethod
from functools import cached_property
from typing import Optional, Tuple

import numpy as np

from perioda.configs import TruncationPolicy
from perioda.errors import DomainError, InputError
from perioda.weierstrass.complex_lattice import ComplexLattice

logger = logging.getLogger(__name__)


class BaseWeierstrassEngine(ABC):
    r"""Abstract base class of the numeric Weierstrass functions of a
    lattice.

    Subclasses evaluate :math:`\zeta` and :math:`\wp` on the centred
    fundamental parallelogram of the reduced basis, and on its shifts by up
    to :math:`(a + b)/4`, together with the two reduced quasi-periods. The
    base class moves arguments there and adds the quasi-periods back.

    Args:
        lattice (ComplexLattice): The period lattice.
        policy (TruncationPolicy, optional): Accuracy settings.
            (default: :obj:`None`)
    """

    def __init__(
        self,
        lattice: ComplexLattice,
        policy: Optional[TruncationPolicy] = None,
    ) -> None:
        self.lattice = lattice
        self.policy = policy or TruncationPolicy()

    @abstractmethod
    def _zeta_raw(self, w: complex) -> complex:
        r"""Evaluates :math:`\zeta` at a point of the centred fundamental
        parallelogram or of its shifts, without reduction."""
        pass

    @abstractmethod
    def _wp_raw(self, w: complex) -> complex:
        r"""Evaluates :math:`\wp` at a point of the centred fundamental
        parallelogram."""
        pass

    @abstractmethod
    def _reduced_quasi_periods(self) -> Tuple[complex, complex]:
        r"""Returns :math:`(\eta(a), \eta(b))` for the reduced basis
        :math:`(a, b)`."""
        pass

    @cached_property
    def _etas(self) -> Tuple[complex, complex]:
        return self._reduced_quasi_periods()

    def pole_guard(self, scale: int = 1) -> float:
        r"""Smallest distance from a pole accepted for an argument that is
        dilated by up to :obj:`scale`."""
        return self.policy.pole_guard_factor * self.lattice.min_period / scale

    def check_pole(self, z: complex, scale: int = 1) -> None:
        r"""Checks that :math:`\mathrm{scale} \cdot z` keeps a distance of
        at least :math:`factor \cdot \min|\omega|` from the lattice, which
        keeps every argument :math:`kz` with :math:`k \mid scale` away from
        the poles.

        Raises:
            DomainError: If the point is too close to a pole.
        """
        distance = self.lattice.distance_to_lattice(scale * complex(z))
        guard = self.policy.pole_guard_factor * self.lattice.min_period
        if not np.isfinite(distance) or distance < guard:
            raise DomainError(
                f"{z} lies within {distance / scale:.3g} of a pole of the "
                f"dilation by {scale}, below the guard "
                f"{self.pole_guard(scale):.3g}.",
                witness=complex(z),
            )

    def zeta_unchecked(self, z: complex, offset: float = 0.0) -> complex:
        r"""Evaluates :math:`\zeta(z)` without the pole guard.

        Args:
            z (complex): The argument.
            offset (float, optional): The series is summed on the
                parallelogram centred at :math:`\mathrm{offset} \cdot
                (a + b)`. A correct engine gives the same value for every
                offset in :math:`[-1/4, 1/4]`. (default: :obj:`0.0`)
        """
        w, n1, n2 = self.lattice.reduce(z, offset)
        eta_a, eta_b = self._etas
        return self._zeta_raw(w) + n1 * eta_a + n2 * eta_b

    def wp_unchecked(self, z: complex) -> complex:
        r"""Evaluates :math:`\wp(z)` without the pole guard."""
        w, _, _ = self.lattice.reduce(z)
        return self._wp_raw(w)

    def zeta(self, z: complex) -> complex:
        r"""Evaluates the Weierstrass zeta function
        :math:`\zeta(z) = 1/z + \sum'_\omega [1/(z-\omega) + 1/\omega +
        z/\omega^2]`.

        Args:
            z (complex): The argument.

        Returns:
            complex: :math:`\zeta(z)`.

        Raises:
            DomainError: If :obj:`z` is too close to a lattice point.
        """
        self.check_pole(z)
        return self.zeta_unchecked(z)

    def wp(self, z: complex) -> complex:
        r"""Evaluates the Weierstrass function :math:`\wp = -\zeta'`.

        Args:
            z (complex): The argument.

        Returns:
            complex: :math:`\wp(z)`.

        Raises:
            DomainError: If :obj:`z` is too close to a lattice point.
        """
        self.check_pole(z)
        return self.wp_unchecked(z)

    def eta(self, omega: complex) -> complex:
        r"""Returns the quasi-period :math:`\eta(\omega) =
        \zeta(z + \omega) - \zeta(z)` of a lattice vector, additive in
        :obj:`omega`.

        Args:
            omega (complex): A non-zero lattice vector.

        Returns:
            complex: :math:`\eta(\omega)`.

        Raises:
            InputError: If :obj:`omega` is zero or not a lattice vector.
        """
        coordinates = self.lattice.lattice_coordinates(omega)
        if coordinates is None:
            raise InputError(f"{omega} is not a lattice vector.")
        n1, n2 = coordinates
        if n1 == 0 and n2 == 0:
            raise InputError("The quasi-period of 0 is not defined.")
        eta_a, eta_b = self._etas
        return n1 * eta_a + n2 * eta_b

    def quasi_periods(self) -> Tuple[complex, complex]:
        r"""Returns :math:`(\eta(\omega_1), \eta(\omega_2))` for the basis
        the lattice was given in."""
        return self.eta(self.lattice.omega1), self.eta(self.lattice.omega2)

    def half_period_quasi_periods(self) -> Tuple[complex, complex]:
        r"""Returns :math:`(2\zeta(\omega_1/2), 2\zeta(\omega_2/2))`, with
        :math:`\zeta` summed directly at the half periods of the reduced
        basis rather than taken from the stored quasi-periods."""
        a, b = self.lattice.reduced_basis
        eta_a, eta_b = 2 * self._zeta_raw(a / 2), 2 * self._zeta_raw(b / 2)
        etas = []
        for omega in (self.lattice.omega1, self.lattice.omega2):
            coordinates = self.lattice.lattice_coordinates(omega)
            assert coordinates is not None
            n1, n2 = coordinates
            etas.append(n1 * eta_a + n2 * eta_b)
        return etas[0], etas[1]

    def legendre_residual(self) -> float:
        r"""Returns :math:`|\eta_1\omega_2 - \eta_2\omega_1 - 2\pi i|` for
        the quasi-periods of :meth:`half_period_quasi_periods`.

        The relation is invariant under :math:`\zeta \mapsto \zeta + cz`;
        :func:`verify_agreement` catches such a shift.
        """
        eta1, eta2 = self.half_period_quasi_periods()
        lattice = self.lattice
        return abs(
            eta1 * lattice.omega2 - eta2 * lattice.omega1 - 2j * np.pi
        )

    def edge_residual(self, index: int, w: complex) -> float:
        r"""Compares the jump of the series across an edge of the centred
        parallelogram with the stored quasi-period.

        Args:
            index (int): :obj:`0` for the edge :math:`a/2 + sb`, :obj:`1`
                for the edge :math:`b/2 + sa`.
            w (complex): A point of that edge.

        Returns:
            float: :math:`|\zeta(w) - \zeta(w - \omega) - \eta(\omega)|`
                with :math:`\omega` the reduced basis vector, both values of
                :math:`\zeta` summed without reduction.
        """
        omega = self.lattice.reduced_basis[index]
        jump = self._zeta_raw(w) - self._zeta_raw(w - omega)
        return abs(jump - self._etas[index])

    def zeta_error_bound(self, w: complex) -> float:
        r"""Bound on the truncation error of :math:`\zeta` at a point of the
        centred parallelogram, beyond rounding."""
        return 0.0

    def wp_error_bound(self, w: complex) -> float:
        r"""Bound on the truncation error of :math:`\wp` at a point of the
        centred parallelogram, beyond rounding."""
        return 0.0

    def derivative_residual(self, z: complex, h: float) -> float:
        r"""Compares the central difference of :math:`\zeta` at :obj:`z`
        with :math:`-\wp(z)`."""
        self.check_pole(z)
        slope = (self.zeta_unchecked(z + h) - self.zeta_unchecked(z - h)) / (
            2 * h
        )
        return abs(slope + self.wp_unchecked(z))
