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
from typing import Optional

import numpy as np

from perioda.configs import TruncationPolicy
from perioda.errors import InputError
from perioda.utils import Constants
from perioda.weierstrass.base import BaseWeierstrassEngine
from perioda.weierstrass.complex_lattice import ComplexLattice
from perioda.weierstrass.engine_factory import EngineFactory
from perioda.weierstrass.functions import ZetaCombination


class CocycleMatrices:
    r"""The matrices :math:`A(z) = \begin{pmatrix} 1 & g_p(z) \\ 0 & p
    \end{pmatrix}` and :math:`B(z) = \begin{pmatrix} 1 & g_q(z) \\ 0 & q
    \end{pmatrix}` of the rank-2 difference system, which satisfy
    :math:`A(z/q)B(z) = B(z/p)A(z)`.

    The identity holds entrywise for any function in place of
    :math:`\zeta`, so the right-hand side is summed on the parallelogram
    shifted by :obj:`Constants.CELL_OFFSET`; the residual then also measures
    whether the engine's :math:`\zeta` is single-valued.

    Args:
        p (int): First dilation, at least 2.
        q (int): Second dilation, at least 2.
        engine (BaseWeierstrassEngine): The engine evaluating
            :math:`\zeta`.
    """

    def __init__(self, p: int, q: int, engine: BaseWeierstrassEngine) -> None:
        if p < 2 or q < 2:
            raise InputError(
                f"Dilations should be integers larger than 1, got {p} and {q}."
            )
        self.p = p
        self.q = q
        self.engine = engine
        self.g_p = ZetaCombination.g_p(p, q)
        self.g_q = ZetaCombination.g_q(p, q)

    @property
    def pole_scale(self) -> int:
        return self.p * self.q

    def A(self, z: complex, offset: float = 0.0) -> np.ndarray:
        value = self.g_p.evaluate(self.engine, z, True, offset)
        return np.array([[1, value], [0, self.p]], dtype=complex)

    def B(self, z: complex, offset: float = 0.0) -> np.ndarray:
        value = self.g_q.evaluate(self.engine, z, True, offset)
        return np.array([[1, value], [0, self.q]], dtype=complex)

    def residual(self, z: complex) -> float:
        r"""Largest entry modulus of :math:`A(z/q)B(z) - B(z/p)A(z)`.

        All arguments of :math:`\zeta` lie in
        :math:`\{z, pz, qz, pqz\}`, so a single guard at :math:`pq` covers
        them.

        Raises:
            DomainError: If :obj:`z` is too close to a pole.
        """
        self.engine.check_pole(z, self.pole_scale)
        p, q = self.p, self.q
        left = self.A(z / q) @ self.B(z)
        offset = Constants.CELL_OFFSET
        right = self.B(z / p, offset) @ self.A(z, offset)
        return float(np.max(np.abs(left - right)))

    def scalar_reduction_residual(self, z: complex) -> float:
        r"""Largest entry modulus of both products against
        :math:`\begin{pmatrix} 1 & pq\zeta(z) - \zeta(pqz) \\ 0 & pq
        \end{pmatrix}`, the latter summed on the shifted parallelogram."""
        self.engine.check_pole(z, self.pole_scale)
        p, q = self.p, self.q
        engine = self.engine
        offset = Constants.CELL_OFFSET
        value = p * q * engine.zeta_unchecked(z, offset)
        value -= engine.zeta_unchecked(p * q * z, offset)
        expected = np.array([[1, value], [0, p * q]], dtype=complex)
        left = self.A(z / q) @ self.B(z)
        right = self.B(z / p) @ self.A(z)
        return float(
            max(
                np.max(np.abs(left - expected)),
                np.max(np.abs(right - expected)),
            )
        )


def consistency_residual(
    p: int,
    q: int,
    z: complex,
    lattice: ComplexLattice,
    policy: Optional[TruncationPolicy] = None,
) -> float:
    r"""Returns the largest entry modulus of
    :math:`A(z/q)B(z) - B(z/p)A(z)` for the lattice.

    Args:
        p (int): First dilation.
        q (int): Second dilation.
        z (complex): The probe.
        lattice (ComplexLattice): The period lattice.
        policy (TruncationPolicy, optional): Accuracy settings.
            (default: :obj:`None`)

    Returns:
        float: The residual.

    Raises:
        DomainError: If :obj:`z` is too close to a pole of an entry.
    """
    engine = EngineFactory.create(lattice, policy)
    return CocycleMatrices(p, q, engine).residual(z)
