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
from typing import List, Optional

from perioda.utils import Constants
from perioda.weierstrass.base import BaseWeierstrassEngine
from perioda.weierstrass.consistency import CocycleMatrices
from perioda.weierstrass.functions import ZetaCombination
from perioda.weierstrass.lattice_sum import LatticeSumEngine
from perioda.weierstrass.probes import (
    ResidualReport,
    sample_edge,
    sample_probes,
    sweep,
)
from perioda.weierstrass.qseries import QSeriesEngine

logger = logging.getLogger(__name__)


def verify_elliptic(
    descriptor: ZetaCombination,
    engine: BaseWeierstrassEngine,
    samples: int = 100,
    seed: int = Constants.DEFAULT_SEED,
) -> ResidualReport:
    r"""Measures :math:`\max |f(z + \omega) - f(z)|` over random probes and
    both periods :math:`\omega \in \{\omega_1, \omega_2\}`.

    The shifted values are summed on the parallelogram moved by
    :obj:`Constants.CELL_OFFSET`, so the reduction of the arguments differs
    between the two sides.

    Args:
        descriptor (ZetaCombination): The function :math:`f`.
        engine (BaseWeierstrassEngine): The engine evaluating
            :math:`\zeta`.
        samples (int, optional): Number of probes. (default: :obj:`100`)
        seed (int, optional): Seed of the probes.
            (default: :obj:`Constants.DEFAULT_SEED`)

    Returns:
        ResidualReport: Passes iff the largest residual is below the
            policy tolerance. For :math:`\zeta` itself the residual is about
            :math:`\max|\eta_i|`.
    """
    scale = descriptor.pole_scale
    probes = sample_probes(engine, samples, seed, scale)
    periods = (engine.lattice.omega1, engine.lattice.omega2)
    offset = Constants.CELL_OFFSET

    def residual(z: complex) -> float:
        value = descriptor.evaluate(engine, z, checked=True)
        return max(
            abs(
                descriptor.evaluate(engine, z + omega, True, offset) - value
            )
            for omega in periods
        )

    return sweep(
        f"ellipticity of {descriptor.name}",
        residual,
        probes,
        engine.policy.tol,
    )


def verify_quasi_periodicity(
    engine: BaseWeierstrassEngine,
    samples: int = 100,
    seed: int = Constants.DEFAULT_SEED,
) -> ResidualReport:
    r"""Measures how far the series jumps by something other than the
    stored quasi-periods across the edges of the centred parallelogram.

    Half of the samples lie on each edge; see
    :meth:`BaseWeierstrassEngine.edge_residual`.
    """
    tol = engine.policy.tol
    reports = [
        sweep(
            "zeta quasi-periodicity",
            lambda w, index=index: engine.edge_residual(index, w),
            sample_edge(engine, index, (samples + 1 - index) // 2, seed),
            tol,
        )
        for index in (0, 1)
    ]
    worst = max(reports, key=lambda report: report.max_residual)
    return ResidualReport(
        worst.name,
        worst.max_residual,
        worst.argmax,
        tol,
        sum(report.samples for report in reports),
    )


def reference_engine(engine: BaseWeierstrassEngine) -> BaseWeierstrassEngine:
    r"""Returns an engine of the other kind for the same lattice and
    policy; the lattice sum is built without tail warnings."""
    if isinstance(engine, LatticeSumEngine):
        return QSeriesEngine(engine.lattice, engine.policy)
    return LatticeSumEngine(engine.lattice, engine.policy, warn_tail=False)


def verify_agreement(
    engine: BaseWeierstrassEngine,
    reference: BaseWeierstrassEngine,
    samples: int = 100,
    seed: int = Constants.DEFAULT_SEED,
) -> ResidualReport:
    r"""Compares :math:`\zeta` and :math:`\wp` of two engines on the centred
    parallelogram.

    Args:
        engine (BaseWeierstrassEngine): The engine under test.
        reference (BaseWeierstrassEngine): An engine of the same lattice.
        samples (int, optional): Number of probes. (default: :obj:`100`)
        seed (int, optional): Seed of the probes.
            (default: :obj:`Constants.DEFAULT_SEED`)

    Returns:
        ResidualReport: The largest difference in excess of the sum of the
            error bounds of both engines.
    """
    probes = sample_probes(engine, samples, seed)

    def residual(z: complex) -> float:
        zeta_gap = abs(engine.zeta_unchecked(z) - reference.zeta_unchecked(z))
        wp_gap = abs(engine.wp_unchecked(z) - reference.wp_unchecked(z))
        zeta_slack = engine.zeta_error_bound(z)
        zeta_slack += reference.zeta_error_bound(z)
        wp_slack = engine.wp_error_bound(z) + reference.wp_error_bound(z)
        return max(zeta_gap - zeta_slack, wp_gap - wp_slack, 0.0)

    return sweep(
        f"agreement with {type(reference).__name__}",
        residual,
        probes,
        engine.policy.tol,
    )


def verify_derivative(
    engine: BaseWeierstrassEngine,
    samples: int = 100,
    seed: int = Constants.DEFAULT_SEED,
    h: float = Constants.FINITE_DIFFERENCE_STEP,
    tol: float = Constants.FINITE_DIFFERENCE_TOLERANCE,
) -> ResidualReport:
    r"""Compares the central difference of :math:`\zeta` with
    :math:`-\wp`."""
    margin = Constants.FINITE_DIFFERENCE_MARGIN * engine.lattice.min_period
    probes = sample_probes(engine, samples, seed, min_distance=margin)
    return sweep(
        "zeta' + wp",
        lambda z: engine.derivative_residual(z, h),
        probes,
        tol,
    )


def verify_consistency(
    p: int,
    q: int,
    engine: BaseWeierstrassEngine,
    samples: int = 100,
    seed: int = Constants.DEFAULT_SEED,
) -> List[ResidualReport]:
    r"""Sweeps the matrix consistency equation and its scalar reduction for
    one pair of dilations.

    Returns:
        List[ResidualReport]: The consistency and scalar-reduction reports.
    """
    matrices = CocycleMatrices(p, q, engine)
    probes = sample_probes(engine, samples, seed, matrices.pole_scale)
    tol = engine.policy.tol
    return [
        sweep(f"consistency (p={p}, q={q})", matrices.residual, probes, tol),
        sweep(
            f"scalar reduction (p={p}, q={q})",
            matrices.scalar_reduction_residual,
            probes,
            tol,
        ),
    ]


def verify_suite(
    engine: BaseWeierstrassEngine,
    p: int,
    q: int,
    samples: int = 100,
    seed: int = Constants.DEFAULT_SEED,
    legendre_tol: Optional[float] = None,
    reference: Optional[BaseWeierstrassEngine] = None,
) -> List[ResidualReport]:
    r"""Runs every numeric contract of the engine for one pair of
    dilations.

    Args:
        engine (BaseWeierstrassEngine): The engine under test.
        p (int): First dilation.
        q (int): Second dilation.
        samples (int, optional): Probes per contract. (default: :obj:`100`)
        seed (int, optional): Seed of the probes.
            (default: :obj:`Constants.DEFAULT_SEED`)
        legendre_tol (float, optional): Tolerance of the Legendre relation.
            (default: :obj:`None`, meaning the policy tolerance)
        reference (BaseWeierstrassEngine, optional): The engine the values
            are compared with. (default: :obj:`None`, meaning
            :func:`reference_engine`)

    Returns:
        List[ResidualReport]: One report per contract, in a fixed order.
    """
    tol = legendre_tol or engine.policy.tol
    reference = reference or reference_engine(engine)
    reports = [
        ResidualReport("legendre", engine.legendre_residual(), None, tol, 0),
        verify_quasi_periodicity(engine, samples, seed),
        verify_agreement(engine, reference, samples, seed),
        verify_elliptic(ZetaCombination.g_p(p, q), engine, samples, seed),
        verify_elliptic(ZetaCombination.g_q(p, q), engine, samples, seed),
        *verify_consistency(p, q, engine, samples, seed),
        verify_derivative(engine, samples, seed),
    ]
    for report in reports:
        logger.info(
            "%s: %.3g (%s).",
            report.name,
            report.max_residual,
            "pass" if report.passed else "fail",
        )
    return reports
