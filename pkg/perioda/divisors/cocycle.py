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
import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Any, Dict, List, Optional, Sequence, Tuple

from perioda.configs import ReconstructConfig
from perioda.divisors.abel_jacobi import (
    PrincipalityCertificate,
    aj_sum,
    degree,
    principality_certificate,
)
from perioda.divisors.divisor import Divisor
from perioda.errors import InputError, TheoremViolation, UnsupportedError
from perioda.lattices import Lattice, Point
from perioda.reconstruct import reconstruct_periodic
from perioda.sparse import dilate_diff, equal_on_cosets
from perioda.utils import format_fraction, is_multiplicatively_independent

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CocyclePair:
    r"""A divisor cocycle on :math:`\Gamma \cong \mathbb{Z}^2`, given on the
    generators :math:`\sigma: z \mapsto pz` and :math:`\tau: z \mapsto qz`.

    Args:
        d_sigma (Divisor): The value on :math:`\sigma`.
        d_tau (Divisor): The value on :math:`\tau`.
        p (int): The dilation of :math:`\sigma`.
        q (int): The dilation of :math:`\tau`, multiplicatively
            independent of :obj:`p`.
    """

    d_sigma: Divisor
    d_tau: Divisor
    p: int
    q: int

    def __post_init__(self) -> None:
        if not is_multiplicatively_independent(self.p, self.q):
            raise InputError(
                f"{self.p} and {self.q} are multiplicatively dependent.",
                witness=(self.p, self.q),
            )
        if self.d_sigma.lattice != self.d_tau.lattice:
            raise InputError("Both cocycle values must share one lattice.")

    @classmethod
    def of_coboundary(cls, e: Divisor, p: int, q: int) -> "CocyclePair":
        r"""The cocycle :math:`d_\gamma = \gamma(e) - e`."""
        return cls(e.coboundary(p), e.coboundary(q), p, q)


def constant_term_identity(
    d_sigma0: int, d_tau0: int, p: int, q: int
) -> bool:
    r"""Checks :math:`p^{d_\tau(0)} = q^{d_\sigma(0)}`, which for
    multiplicatively independent :obj:`p`, :obj:`q` holds only when both
    values vanish."""
    return Fraction(p) ** d_tau0 == Fraction(q) ** d_sigma0


@dataclass(frozen=True)
class CocycleReport:
    r"""The outcome of :func:`check_special_cocycle`.

    Attributes:
        passed (bool): Whether the cocycle is special.
        reason (str): Why it failed, empty when it passed.
        constant_term_holds (bool): Whether
            :math:`p^{d_\tau(0)} = q^{d_\sigma(0)}` holds.
        witness (Point, optional): The offending coset.
            (default: :obj:`None`)
    """

    passed: bool
    reason: str
    constant_term_holds: bool
    witness: Optional[Point] = None

    def to_dict(self) -> Dict[str, Any]:
        from perioda.serialization import encode_point

        result: Dict[str, Any] = {
            "passed": self.passed,
            "reason": self.reason,
            "constant_term_holds": self.constant_term_holds,
        }
        if self.witness is not None:
            result["witness"] = encode_point(self.witness)
        return result


def check_special_cocycle(c: CocyclePair) -> CocycleReport:
    r"""Checks that a cocycle is special: both values vanish at
    :math:`0`, and
    :math:`d_\tau(pz) - d_\tau(z) = d_\sigma(qz) - d_\sigma(z)` holds on
    every coset.

    Args:
        c (CocyclePair): The cocycle.

    Returns:
        CocycleReport: The verdict with a witness coset on failure.
    """
    zero = Point.zero(2)
    s0, t0 = c.d_sigma.value_at_zero, c.d_tau.value_at_zero
    constant = constant_term_identity(s0, t0, c.p, c.q)
    if s0 != 0 or t0 != 0:
        return CocycleReport(
            False,
            f"not special: d_sigma(0) = {s0}, d_tau(0) = {t0}",
            constant,
            zero,
        )
    report = equal_on_cosets(
        dilate_diff(c.d_tau.underlying, c.p),
        dilate_diff(c.d_sigma.underlying, c.q),
    )
    if not report.equal:
        return CocycleReport(
            False,
            f"cocycle identity fails with values {report.values}",
            constant,
            report.witness,
        )
    return CocycleReport(True, "", constant)


def ellipticity_lattices(
    p: int, q: int, lattice: Lattice
) -> Tuple[Lattice, Lattice, Lattice]:
    r"""Returns :math:`(p-1)L`, :math:`(q-1)L` and
    :math:`\gcd(p-1, q-1)L`."""
    return (
        lattice.scale(p - 1),
        lattice.scale(q - 1),
        lattice.scale(gcd(p - 1, q - 1)),
    )


@dataclass(frozen=True)
class CoboundarySolution:
    r"""A divisor trivialising a special cocycle, with its certificates.

    Attributes:
        e (Divisor): The divisor with :math:`\gamma(e) - e = d_\gamma`.
        certificate (PrincipalityCertificate): Principality of :obj:`e`
            for :obj:`lattice_prime`.
        lattice_prime (Lattice): :math:`\gcd(p-1, q-1) \cdot L_f`.
        D (int): :math:`\gcd(p-1, q-1)`.
        degree_relation (bool): Whether
            :math:`\deg d_\sigma = (p^2 - 1)\deg e` over
            :obj:`lattice_prime`.
        aj_relation (bool): Whether the Abel-Jacobi sum of
            :math:`d_\sigma` and :math:`(p-1)` times that of :obj:`e`
            agree modulo :obj:`lattice_prime`.
        side_certificates (List[PrincipalityCertificate]): Principality of
            :obj:`e` for :math:`(p-1)L_f` and :math:`(q-1)L_f`.
    """

    e: Divisor
    certificate: PrincipalityCertificate
    lattice_prime: Lattice
    D: int
    degree_relation: bool
    aj_relation: bool
    side_certificates: List[PrincipalityCertificate]

    def to_dict(self) -> Dict[str, Any]:
        from perioda.serialization import encode_divisor, encode_lattice

        return {
            "e": encode_divisor(self.e),
            "certificate": self.certificate.to_dict(),
            "lattice_prime": encode_lattice(self.lattice_prime),
            "D": self.D,
            "degree_relation": self.degree_relation,
            "aj_relation": self.aj_relation,
            "side_certificates": [
                cert.to_dict() for cert in self.side_certificates
            ],
            "value_at_zero": format_fraction(Fraction(self.e.value_at_zero)),
        }


def solve_coboundary(
    c: CocyclePair,
    lattice_f: Lattice,
    config: Optional[ReconstructConfig] = None,
) -> CoboundarySolution:
    r"""Finds the divisor :math:`e` with :math:`d_\sigma = e(pz) - e(z)`
    and :math:`d_\tau = e(qz) - e(z)`, and certifies that it is principal
    for :math:`\Lambda' = \gcd(p-1, q-1) \cdot L_f`.

    Args:
        c (CocyclePair): A special cocycle with coprime dilations.
        lattice_f (Lattice): The lattice for which both cocycle values are
            principal.
        config (ReconstructConfig, optional): Passed to the
            reconstruction. (default: :obj:`None`)

    Returns:
        CoboundarySolution: The divisor and its certificates.

    Raises:
        InputError: If the cocycle is not special or a value is not
            principal for :obj:`lattice_f`.
        UnsupportedError: If :math:`\gcd(p, q) \ne 1`.
        TheoremViolation: If a guaranteed certificate fails.
    """
    special = check_special_cocycle(c)
    if not special.passed:
        raise InputError(
            f"The cocycle is not special: {special.reason}.",
            witness=special.witness,
        )
    if gcd(c.p, c.q) != 1:
        raise UnsupportedError(
            f"Coboundaries are solved for coprime dilations, got "
            f"{c.p} and {c.q}.",
            witness=(c.p, c.q),
        )
    for name, d in (("d_sigma", c.d_sigma), ("d_tau", c.d_tau)):
        cert = principality_certificate(d, lattice_f)
        if not cert.verdict:
            raise InputError(
                f"`{name}` is not principal for {lattice_f.basis}: degree "
                f"{cert.degree}, sum {cert.aj}.",
                witness=cert.aj,
            )

    solution = reconstruct_periodic(
        c.d_sigma.underlying,
        c.d_tau.underlying,
        c.p,
        c.q,
        config=config,
    )
    try:
        e = Divisor(solution.result)
    except InputError as exc:
        raise TheoremViolation(f"The solution is not a divisor: {exc}")
    for m, d in ((c.p, c.d_sigma), (c.q, c.d_tau)):
        if e.coboundary(m) != d:
            raise TheoremViolation(f"The coboundary by {m} does not match.")

    D = gcd(c.p - 1, c.q - 1)
    lattice_p, lattice_q, lattice_prime = ellipticity_lattices(
        c.p, c.q, lattice_f
    )
    try:
        certificate = principality_certificate(e, lattice_prime)
        side = [
            principality_certificate(e, lattice_p),
            principality_certificate(e, lattice_q),
        ]
        degree_relation = degree(c.d_sigma, lattice_prime) == (
            c.p**2 - 1
        ) * degree(e, lattice_prime)
        aj_sigma = aj_sum(c.d_sigma, lattice_prime)
        aj_e = aj_sum(e, lattice_prime)
    except InputError as exc:
        raise TheoremViolation(f"The solution is not certifiable: {exc}")
    aj_relation = lattice_prime.contains(
        Point.of(*(a - (c.p - 1) * b for a, b in zip(aj_sigma, aj_e)))
    )
    checks = [certificate.verdict, degree_relation, aj_relation]
    checks += [cert.verdict for cert in side]
    if not all(checks):
        raise TheoremViolation(
            f"Principality certificates failed for {lattice_prime.basis}: "
            f"{checks}."
        )
    logger.info("Solved coboundary; e principal for D = %d.", D)
    return CoboundarySolution(
        e,
        certificate,
        lattice_prime,
        D,
        degree_relation,
        aj_relation,
        side,
    )


def monomial_shift(e: Divisor, ord0_f: int) -> int:
    r"""Returns :math:`m = e(0) - \mathrm{ord}_0 f`, the exponent for which
    :math:`z^m f(z)` has the multiplicity of :obj:`e` at :math:`0`."""
    return e.value_at_zero - ord0_f


def injectivity_search(
    rng: random.Random,
    samples: int,
    primes: Sequence[int] = (2, 3),
    lattice: Optional[Lattice] = None,
    max_denominator: int = 6,
    max_points: int = 4,
) -> Optional[Tuple[Divisor, int]]:
    r"""Searches for a non-zero divisor :math:`d` with
    :math:`d(pz) - d(z) = 0`.

    Args:
        rng (random.Random): The source of randomness.
        samples (int): Number of random divisors tried.
        primes (Sequence[int], optional): The dilations tried on every
            divisor. (default: :obj:`(2, 3)`)
        lattice (Lattice, optional): The lattice of the divisors.
            (default: :obj:`None`, meaning :math:`\mathbb{Z}^2`)
        max_denominator (int, optional): Largest coordinate denominator.
            (default: :obj:`6`)
        max_points (int, optional): Largest number of support points.
            (default: :obj:`4`)

    Returns:
        Optional[Tuple[Divisor, int]]: A counterexample and its dilation,
            or :obj:`None` if none was found.
    """
    from perioda.utils.sampling import random_divisor

    lattice = lattice or Lattice.standard(2)
    for _ in range(samples):
        d = random_divisor(rng, lattice, max_points, max_denominator)
        if d.is_zero:
            continue
        for p in primes:
            if dilate_diff(d.underlying, p).is_zero:
                return d, p
    return None
