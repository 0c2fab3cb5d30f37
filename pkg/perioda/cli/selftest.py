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
r"""A reduced acceptance corpus, run by ``perioda selftest``."""

import logging
import random
from typing import Any, Callable, Dict, List, Tuple

from perioda.configs import WindowConfig
from perioda.divisors import CocyclePair, injectivity_search, solve_coboundary
from perioda.lattices import Lattice, Point
from perioda.reconstruct import (
    equivalence_closure_bruteforce,
    reconstruct_periodic,
    sim_S,
)
from perioda.sparse import (
    QuasiPeriodicFn,
    counterexample_function,
    dilate_diff,
    equal_on_window,
    translate,
    unboundedness_profile,
)
from perioda.utils.sampling import (
    random_coprime_pair,
    random_function,
    random_principal_divisor,
)
from perioda.weierstrass import ComplexLattice, QSeriesEngine, verify_suite

logger = logging.getLogger(__name__)

Check = Callable[[random.Random], Tuple[bool, Dict[str, Any]]]


def _valuation_relations(rng: random.Random) -> Tuple[bool, Dict[str, Any]]:
    literal = [
        sim_S(12, 32, {5}, 10),
        sim_S(15, 65, {5}, 10),
        not sim_S(15, 35, {5}, 10),
    ]
    closure = equivalence_closure_bruteforce(500, 10, {5}, {2})
    passed = all(literal) and closure.matches_residues
    return passed, {"literal": literal, "closure": closure.to_dict()}


def _round_trip(rng: random.Random) -> Tuple[bool, Dict[str, Any]]:
    failures = 0
    for _ in range(10):
        lattice = Lattice.standard(rng.choice([1, 2]))
        P, Q = random_coprime_pair(rng, 2, 6)
        e = random_function(rng, lattice, 3, 6)
        result = reconstruct_periodic(
            dilate_diff(e, P), dilate_diff(e, Q), P, Q
        ).result
        if dict(result.entries) != dict(e.entries):
            failures += 1
    return failures == 0, {"instances": 10, "failures": failures}


def _one_dilation(rng: random.Random) -> Tuple[bool, Dict[str, Any]]:
    _, f = counterexample_function(2)
    report = equal_on_window(f, translate(f, Point.of(1)), WindowConfig())
    profile = unboundedness_profile(2, 10)
    passed = not report.equal and profile == list(range(1, 11))
    return passed, {"window": report.to_dict(), "profile": profile}


def _modification_at_zero(
    rng: random.Random,
) -> Tuple[bool, Dict[str, Any]]:
    lattice = Lattice.standard(1)
    f = QuasiPeriodicFn(lattice, {Point.zero(1): 1}, zero_value=0)
    periodic = [dilate_diff(f, p).is_periodic_under(lattice) for p in (2, 3)]
    result = reconstruct_periodic(
        dilate_diff(f, 2), dilate_diff(f, 3), 2, 3
    ).result
    passed = (
        all(periodic)
        and dict(result.entries) == dict(f.entries)
        and result.zero_value - f.zero_value == 1
    )
    return passed, {"zero_value": result.zero_value}


def _divisors(rng: random.Random) -> Tuple[bool, Dict[str, Any]]:
    lattice = Lattice.standard(2)
    failures = 0
    for _ in range(5):
        e = random_principal_divisor(rng, lattice, 3, 4)
        solution = solve_coboundary(
            CocyclePair.of_coboundary(e, 2, 3), lattice
        )
        if solution.e != e:
            failures += 1
    found = injectivity_search(rng, 50)
    return failures == 0 and found is None, {
        "failures": failures,
        "injectivity_counterexample": found is not None,
    }


def _weierstrass(rng: random.Random) -> Tuple[bool, Dict[str, Any]]:
    engine = QSeriesEngine(ComplexLattice(1, 1j))
    reports = verify_suite(engine, 2, 3, samples=20, seed=rng.randrange(2**31))
    return all(r.passed for r in reports), {
        "max_residuals": {r.name: r.max_residual for r in reports}
    }


CHECKS: List[Tuple[str, Check]] = [
    ("valuation relations", _valuation_relations),
    ("reconstruction round trip", _round_trip),
    ("one dilation is not enough", _one_dilation),
    ("modification at zero", _modification_at_zero),
    ("divisor coboundaries", _divisors),
    ("weierstrass contracts", _weierstrass),
]


def run_checks(seed: int) -> List[Dict[str, Any]]:
    r"""Runs every check with its own generator derived from :obj:`seed`.

    Args:
        seed (int): The seed of the whole run.

    Returns:
        List[Dict[str, Any]]: One record per check with ``name``,
            ``passed`` and ``detail``.
    """
    results = []
    for index, (name, check) in enumerate(CHECKS):
        passed, detail = check(random.Random(seed + index))
        logger.info("Self-test %s: %s.", name, "pass" if passed else "fail")
        results.append({"name": name, "passed": passed, "detail": detail})
    return results
