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
from functools import cached_property
from typing import Any, Dict, Optional, Tuple

import numpy as np

from perioda.errors import InputError

# Offsets scanned around the rounded coordinates of a reduced basis.
_NEIGHBOURS = [(i, j) for i in (-1, 0, 1) for j in (-1, 0, 1)]


@dataclass(frozen=True)
class ComplexLattice:
    r"""A lattice :math:`\Lambda = \mathbb{Z}\omega_1 + \mathbb{Z}\omega_2`
    in :math:`\mathbb{C}`.

    Args:
        omega1 (complex): First period.
        omega2 (complex): Second period, with
            :math:`\mathrm{Im}(\omega_2 / \omega_1) > 0`.

    Raises:
        InputError: If a period is zero or the basis is not positively
            oriented.
    """

    omega1: complex
    omega2: complex

    def __post_init__(self) -> None:
        object.__setattr__(self, 'omega1', complex(self.omega1))
        object.__setattr__(self, 'omega2', complex(self.omega2))
        if self.omega1 == 0 or self.omega2 == 0:
            raise InputError(
                f"Periods must be non-zero, got {self.omega1} and "
                f"{self.omega2}."
            )
        if not np.isfinite([self.omega1, self.omega2]).all():
            raise InputError("Periods must be finite.")
        if (self.omega2 / self.omega1).imag <= 0:
            raise InputError(
                f"Im(omega2/omega1) should be positive, got "
                f"{(self.omega2 / self.omega1).imag}.",
                witness=(self.omega1, self.omega2),
            )

    @property
    def tau(self) -> complex:
        return self.omega2 / self.omega1

    @property
    def area(self) -> float:
        r"""The covolume :math:`|\mathrm{Im}(\bar\omega_1 \omega_2)|`."""
        return abs((self.omega1.conjugate() * self.omega2).imag)

    @cached_property
    def reduced_basis(self) -> Tuple[complex, complex]:
        r"""A Lagrange-Gauss reduced, positively oriented basis
        :math:`(a, b)` with :math:`|a| \le |b|` and
        :math:`|\mathrm{Re}(b/a)| \le 1/2`."""
        a, b = self.omega1, self.omega2
        if abs(a) > abs(b):
            a, b = b, a
        while True:
            m = round((b * a.conjugate()).real / abs(a) ** 2)
            b = b - m * a
            if abs(b) >= abs(a):
                break
            a, b = b, a
        if (b / a).imag < 0:
            b = -b
        return a, b

    @property
    def min_period(self) -> float:
        r"""The length of a shortest non-zero lattice vector."""
        return abs(self.reduced_basis[0])

    @cached_property
    def _reduced_inverse(self) -> np.ndarray:
        a, b = self.reduced_basis
        matrix = np.array([[a.real, b.real], [a.imag, b.imag]])
        return np.linalg.inv(matrix)

    def reduced_coordinates(self, z: complex) -> np.ndarray:
        r"""Real coordinates :math:`(x, y)` with :math:`z = xa + yb` in the
        reduced basis."""
        return self._reduced_inverse @ np.array([z.real, z.imag])

    def reduce(
        self, z: complex, offset: float = 0.0
    ) -> Tuple[complex, int, int]:
        r"""Moves :obj:`z` into the fundamental parallelogram of the reduced
        basis centred at :math:`\mathrm{offset} \cdot (a + b)`.

        Args:
            z (complex): The point.
            offset (float, optional): Shift of the parallelogram along
                :math:`a + b`, in units of the basis. (default: :obj:`0.0`)

        Returns:
            Tuple[complex, int, int]: :math:`(w, n_1, n_2)` with
                :math:`z = w + n_1 a + n_2 b`.
        """
        a, b = self.reduced_basis
        x, y = self.reduced_coordinates(complex(z))
        n1, n2 = int(np.rint(x - offset)), int(np.rint(y - offset))
        return complex(z) - n1 * a - n2 * b, n1, n2

    def distance_to_lattice(self, z: complex) -> float:
        r"""Distance from :obj:`z` to the nearest lattice point."""
        a, b = self.reduced_basis
        w, _, _ = self.reduce(z)
        return min(abs(w - i * a - j * b) for i, j in _NEIGHBOURS)

    def lattice_coordinates(
        self, omega: complex, atol: float = 1e-9
    ) -> Optional[Tuple[int, int]]:
        r"""Integer coordinates of :obj:`omega` in the reduced basis, or
        :obj:`None` when it is not a lattice point."""
        x, y = self.reduced_coordinates(complex(omega))
        n1, n2 = int(np.rint(x)), int(np.rint(y))
        if max(abs(x - n1), abs(y - n2)) > atol:
            return None
        return n1, n2

    @classmethod
    def parse(cls, omega1: str, omega2: str) -> "ComplexLattice":
        r"""Builds a lattice from two ``"re,im"`` strings."""
        from perioda.serialization import parse_complex

        return cls(parse_complex(omega1), parse_complex(omega2))

    def to_dict(self) -> Dict[str, Any]:
        from perioda.serialization import format_complex

        return {
            "omega1": format_complex(self.omega1),
            "omega2": format_complex(self.omega2),
        }
