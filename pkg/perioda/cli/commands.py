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
from math import gcd
from pathlib import Path
from typing import Any, Callable, Dict

from perioda.cli.command_spec import CommandSpec
from perioda.divisors import (
    CocyclePair,
    check_special_cocycle,
    monomial_shift,
    principality_certificate,
    solve_coboundary,
)
from perioda.errors import InputError
from perioda.lattices import Point
from perioda.reconstruct import (
    equivalence_closure_bruteforce,
    independent_sublattice,
    lemma1_walk,
    reconstruct_periodic,
)
from perioda.reports import Report
from perioda.serialization import (
    DIVISOR_CHECK_INPUT_SCHEMA,
    DIVISOR_SOLVE_INPUT_SCHEMA,
    RECONSTRUCT_INPUT_SCHEMA,
    WEIERSTRASS_INPUT_SCHEMA,
    decode_divisor,
    decode_function,
    decode_lattice,
    decode_window,
    encode_point,
    loads,
    validate_document,
)
from perioda.sparse import (
    counterexample_function,
    equal_on_window,
    translate,
    unboundedness_profile,
)
from perioda.types import CommandType, ReportStatus
from perioda.weierstrass import ComplexLattice, EngineFactory, verify_suite

logger = logging.getLogger(__name__)

Handler = Callable[[CommandSpec], Report]


def load_input(spec: CommandSpec, schema: Dict[str, Any]) -> Any:
    r"""Reads and validates the input document of a command.

    Raises:
        InputError: If the file is unreadable, is not JSON or violates the
            schema.
    """
    if spec.input_path is None:
        raise InputError(f"`{spec.command.value}` needs an input file.")
    try:
        text = Path(spec.input_path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"Cannot read {spec.input_path}: {exc}.")
    document = loads(text)
    validate_document(document, schema)
    return document


def run_reconstruct(spec: CommandSpec) -> Report:
    document = load_input(spec, RECONSTRUCT_INPUT_SCHEMA)
    gP = decode_function(document["gP"])
    gQ = decode_function(document["gQ"])
    P, Q = spec.P or document["P"], spec.Q or document["Q"]
    window = None
    if "window" in document:
        window = decode_window(document["window"])
    config = spec.reconstruct_config(window)

    if gcd(P, Q) != 1:
        logger.info("Dilations %d and %d share a factor.", P, Q)
        report = independent_sublattice(
            gP, gQ, P, Q, config.window.alpha_probes
        )
        if report.holds:
            return Report(
                ReportStatus.VERIFIED, spec.command, report.to_dict()
            )
        return Report(
            ReportStatus.FALSIFIED,
            spec.command,
            report.to_dict(),
            witness=report.to_dict()["witness"],
        )

    certificate = reconstruct_periodic(gP, gQ, P, Q, config=config)
    return Report(ReportStatus.VERIFIED, spec.command, certificate.to_dict())


def run_lemma1(spec: CommandSpec) -> Report:
    assert spec.x is not None and spec.y is not None and spec.N is not None
    walk = lemma1_walk(spec.x, spec.y, spec.N, spec.S, spec.T)
    return Report(ReportStatus.VERIFIED, spec.command, walk.to_dict())


def run_closure(spec: CommandSpec) -> Report:
    assert spec.range_ is not None and spec.N is not None
    report = equivalence_closure_bruteforce(
        spec.range_, spec.N, spec.S, spec.T, spec.reconstruct_config()
    )
    if report.consistent:
        return Report(ReportStatus.VERIFIED, spec.command, report.to_dict())
    return Report(
        ReportStatus.FALSIFIED,
        spec.command,
        report.to_dict(),
        witness=list(report.witness or ()),
    )


def run_counterexample(spec: CommandSpec) -> Report:
    r"""Compares the one-dilation counterexample with its translate by
    :math:`1`; a difference is the expected outcome."""
    P = spec.P or 2
    g, f = counterexample_function(P)
    window = spec.window_config()
    report = equal_on_window(f, translate(f, Point.of(1)), window)
    payload = {
        "P": P,
        "g": g,
        "window": report.to_dict(),
        "profile": unboundedness_profile(P, 10),
    }
    if report.equal:
        return Report(ReportStatus.VERIFIED, spec.command, payload)
    return Report(
        ReportStatus.FALSIFIED,
        spec.command,
        payload,
        witness={
            "point": encode_point(report.witness),
            "values": list(report.values or ()),
        },
    )


def _read_cocycle(document: Dict[str, Any]) -> CocyclePair:
    return CocyclePair(
        decode_divisor(document["d_sigma"]),
        decode_divisor(document["d_tau"]),
        document["p"],
        document["q"],
    )


def run_divisor_solve(spec: CommandSpec) -> Report:
    document = load_input(spec, DIVISOR_SOLVE_INPUT_SCHEMA)
    cocycle = _read_cocycle(document)
    lattice_f = decode_lattice(document["lattice_f"])
    solution = solve_coboundary(cocycle, lattice_f, spec.reconstruct_config())
    payload = solution.to_dict()
    if "ord0_f" in document:
        payload["monomial_shift"] = monomial_shift(
            solution.e, document["ord0_f"]
        )
    return Report(ReportStatus.VERIFIED, spec.command, payload)


def run_divisor_check(spec: CommandSpec) -> Report:
    document = load_input(spec, DIVISOR_CHECK_INPUT_SCHEMA)
    if "divisor" in document:
        certificate = principality_certificate(
            decode_divisor(document["divisor"]),
            decode_lattice(document["lattice"]),
        )
        payload = certificate.to_dict()
        if certificate.verdict:
            return Report(ReportStatus.VERIFIED, spec.command, payload)
        return Report(
            ReportStatus.FALSIFIED,
            spec.command,
            payload,
            witness={"degree": certificate.degree, "aj": payload["aj"]},
        )
    report = check_special_cocycle(_read_cocycle(document))
    payload = report.to_dict()
    if report.passed:
        return Report(ReportStatus.VERIFIED, spec.command, payload)
    return Report(
        ReportStatus.FALSIFIED, spec.command, payload, payload["witness"]
    )


def run_weierstrass_verify(spec: CommandSpec) -> Report:
    lattice = ComplexLattice(1, 1j)
    p, q = 2, 3
    if spec.input_path is not None:
        document = load_input(spec, WEIERSTRASS_INPUT_SCHEMA)
        lattice = ComplexLattice.parse(document["omega1"], document["omega2"])
        p, q = document.get("p", p), document.get("q", q)
    p, q = spec.P or p, spec.Q or q
    policy = spec.truncation_policy()
    engine = EngineFactory.create(lattice, policy)
    reports = verify_suite(engine, p, q, spec.probes, spec.seed)
    payload = {
        "lattice": lattice.to_dict(),
        "p": p,
        "q": q,
        "policy": {
            "engine": policy.engine.value,
            "radius": policy.radius,
            "tol": policy.tol,
        },
        "checks": [report.to_dict() for report in reports],
    }
    failed = [report for report in reports if not report.passed]
    if not failed:
        return Report(ReportStatus.VERIFIED, spec.command, payload)
    return Report(
        ReportStatus.FALSIFIED, spec.command, payload, failed[0].to_dict()
    )


def run_selftest(spec: CommandSpec) -> Report:
    from perioda.cli.selftest import run_checks

    results = run_checks(spec.seed)
    payload = {"checks": results}
    failed = [r["name"] for r in results if not r["passed"]]
    if not failed:
        return Report(ReportStatus.VERIFIED, spec.command, payload)
    return Report(
        ReportStatus.FALSIFIED, spec.command, payload, {"failed": failed}
    )


COMMANDS: Dict[CommandType, Handler] = {
    CommandType.RECONSTRUCT: run_reconstruct,
    CommandType.LEMMA1: run_lemma1,
    CommandType.CLOSURE: run_closure,
    CommandType.COUNTEREXAMPLE: run_counterexample,
    CommandType.DIVISOR_SOLVE: run_divisor_solve,
    CommandType.DIVISOR_CHECK: run_divisor_check,
    CommandType.WEIERSTRASS_VERIFY: run_weierstrass_verify,
    CommandType.SELFTEST: run_selftest,
}
