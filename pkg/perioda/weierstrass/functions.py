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
from typing import Any, Dict, Tuple

from perioda.errors import InputError
from perioda.utils import lcm_all
from perioda.weierstrass.base import BaseWeierstrassEngine


@dataclass(frozen=True)
class ZetaCombination:
    r"""The function :math:`z \mapsto \sum_k c_k \zeta(a_k z) + c`.

    Args:
        terms (Tuple[Tuple[complex, int], ...]): The pairs
            :math:`(c_k, a_k)` with positive integer dilations
            :math:`a_k`.
        constant (complex, optional): The constant :math:`c`.
            (default: :obj:`0`)
        name (str, optional): A label used in reports.
            (default: :obj:`"custom"`)
    """

    terms: Tuple[Tuple[complex, int], ...]
    constant: complex = 0
    name: str = "custom"

    def __post_init__(self) -> None:
        terms = tuple((complex(c), int(a)) for c, a in self.terms)
        for _, a in terms:
            if a < 1:
                raise InputError(
                    f"Dilations should be positive integers, got {a}."
                )
        object.__setattr__(self, 'terms', terms)
        object.__setattr__(self, 'constant', complex(self.constant))

    @classmethod
    def g_p(cls, p: int, q: int) -> "ZetaCombination":
        r""":math:`g_p(z) = p\zeta(qz) - \zeta(pqz)`."""
        return cls(((p, q), (-1, p * q)), name=f"g_p(p={p}, q={q})")

    @classmethod
    def g_q(cls, p: int, q: int) -> "ZetaCombination":
        r""":math:`g_q(z) = q\zeta(pz) - \zeta(pqz)`."""
        return cls(((q, p), (-1, p * q)), name=f"g_q(p={p}, q={q})")

    @classmethod
    def zeta(cls) -> "ZetaCombination":
        return cls(((1, 1),), name="zeta")

    @classmethod
    def constant_function(cls, c: complex) -> "ZetaCombination":
        return cls((), c, name="constant")

    @property
    def pole_scale(self) -> int:
        r"""The smallest :math:`k` such that every pole lies in
        :math:`\frac{1}{k}\Lambda`."""
        return lcm_all(a for _, a in self.terms)

    def evaluate(
        self,
        engine: BaseWeierstrassEngine,
        z: complex,
        checked: bool = False,
        offset: float = 0.0,
    ) -> complex:
        r"""Evaluates the combination.

        Args:
            engine (BaseWeierstrassEngine): The engine evaluating
                :math:`\zeta`.
            z (complex): The argument.
            checked (bool, optional): Whether the caller has already run
                the pole guard at :obj:`pole_scale`. (default: :obj:`False`)
            offset (float, optional): Passed on to
                :meth:`BaseWeierstrassEngine.zeta_unchecked`.
                (default: :obj:`0.0`)

        Returns:
            complex: The value at :obj:`z`.

        Raises:
            DomainError: If :obj:`z` is too close to a pole.
        """
        if not checked:
            engine.check_pole(z, self.pole_scale)
        total = self.constant
        for c, a in self.terms:
            total += c * engine.zeta_unchecked(a * z, offset)
        return total

    def to_dict(self) -> Dict[str, Any]:
        from perioda.serialization import format_complex

        return {
            "name": self.name,
            "terms": [[format_complex(c), a] for c, a in self.terms],
            "constant": format_complex(self.constant),
        }


def g_pair(
    p: int, q: int, z: complex, engine: BaseWeierstrassEngine
) -> Tuple[complex, complex]:
    r"""Evaluates :math:`(g_p(z), g_q(z))` with one pole check at
    :math:`pq`.

    Args:
        p (int): First dilation.
        q (int): Second dilation.
        z (complex): The argument.
        engine (BaseWeierstrassEngine): The engine evaluating
            :math:`\zeta`.

    Returns:
        Tuple[complex, complex]: :math:`g_p(z)` and :math:`g_q(z)`.
    """
    engine.check_pole(z, p * q)
    return (
        ZetaCombination.g_p(p, q).evaluate(engine, z, checked=True),
        ZetaCombination.g_q(p, q).evaluate(engine, z, checked=True),
    )
