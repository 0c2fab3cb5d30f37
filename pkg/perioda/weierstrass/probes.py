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
from typing import Any, Callable, Dict, List, Optional

import numpy as np

from perioda.errors import DomainError
from perioda.utils import Constants, ordered_map
from perioda.weierstrass.base import BaseWeierstrassEngine

logger = logging.getLogger(__name__)


def sample_probes(
    engine: BaseWeierstrassEngine,
    n: int,
    seed: int = Constants.DEFAULT_SEED,
    scale: int = 1,
    min_distance: Optional[float] = None,
) -> List[complex]:
    r"""Draws probes uniformly from the centred fundamental parallelogram,
    resampling those that fail the pole guard at :obj:`scale`.

    Args:
        engine (BaseWeierstrassEngine): The engine whose lattice and policy
            are used.
        n (int): Number of probes.
        seed (int, optional): Seed of the generator.
            (default: :obj:`Constants.DEFAULT_SEED`)
        scale (int, optional): The largest dilation applied to the probes.
            (default: :obj:`1`)
        min_distance (float, optional): A stricter lower bound on the
            distance of :math:`scale \cdot z` to the lattice.
            (default: :obj:`None`)

    Returns:
        List[complex]: The probes, identical for identical arguments.

    Raises:
        DomainError: If a probe still fails the guard after
            :obj:`policy.max_retries` resamplings.
    """
    rng = np.random.default_rng(seed)
    a, b = engine.lattice.reduced_basis
    probes: List[complex] = []
    for _ in range(n):
        for attempt in range(engine.policy.max_retries + 1):
            s, t = rng.uniform(-0.5, 0.5, size=2)
            z = complex(s * a + t * b)
            try:
                engine.check_pole(z, scale)
            except DomainError:
                logger.debug("Resampling probe %s (attempt %d).", z, attempt)
                continue
            if (
                min_distance is not None
                and engine.lattice.distance_to_lattice(scale * z)
                < min_distance
            ):
                continue
            probes.append(z)
            break
        else:
            raise DomainError(
                f"No admissible probe after {engine.policy.max_retries} "
                "retries.",
                witness=z,
            )
    return probes


def sample_edge(
    engine: BaseWeierstrassEngine,
    index: int,
    n: int,
    seed: int = Constants.DEFAULT_SEED,
) -> List[complex]:
    r"""Draws points uniformly from an edge :math:`\omega/2 + s\omega'`,
    :math:`|s| \le 1/2`, of the centred fundamental parallelogram.

    Args:
        engine (BaseWeierstrassEngine): The engine whose lattice is used.
        index (int): :obj:`0` for the edge through :math:`a/2`, :obj:`1`
            for the edge through :math:`b/2`.
        n (int): Number of points.
        seed (int, optional): Seed of the generator.
            (default: :obj:`Constants.DEFAULT_SEED`)

    Returns:
        List[complex]: The points, identical for identical arguments.
    """
    rng = np.random.default_rng(seed)
    basis = engine.lattice.reduced_basis
    omega, other = basis[index], basis[1 - index]
    return [complex(omega / 2 + s * other) for s in rng.uniform(-0.5, 0.5, n)]


@dataclass(frozen=True)
class ResidualReport:
    r"""The largest residual of a numeric identity over a probe set.

    Attributes:
        name (str): What was checked.
        max_residual (float): The largest residual.
        argmax (complex, optional): The probe attaining it, :obj:`None`
            when nothing was probed.
        tol (float): The tolerance.
        samples (int): Number of probes.
    """

    name: str
    max_residual: float
    argmax: Optional[complex]
    tol: float
    samples: int

    @property
    def passed(self) -> bool:
        return bool(self.max_residual < self.tol)

    def to_dict(self) -> Dict[str, Any]:
        from perioda.serialization import format_complex

        return {
            "name": self.name,
            "max_residual": float(self.max_residual),
            "argmax": (
                None if self.argmax is None else format_complex(self.argmax)
            ),
            "tol": self.tol,
            "samples": self.samples,
            "passed": self.passed,
        }


def sweep(
    name: str,
    residual: Callable[[complex], float],
    probes: List[complex],
    tol: float,
) -> ResidualReport:
    r"""Evaluates :obj:`residual` at every probe, in parallel when
    ``PERIODA_THREADS`` allows it, and keeps the largest value."""
    values = ordered_map(residual, probes)
    if not values:
        return ResidualReport(name, 0.0, None, tol, 0)
    index = int(np.argmax(values))
    logger.debug(
        "%s: max residual %.3g at %s.", name, values[index], probes[index]
    )
    return ResidualReport(
        name, float(values[index]), probes[index], tol, len(probes)
    )
