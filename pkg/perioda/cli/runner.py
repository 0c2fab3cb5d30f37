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
import argparse
import logging
import sys
import time
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

from perioda.cli.command_spec import CommandSpec
from perioda.cli.commands import COMMANDS
from perioda.errors import InputError, InternalError
from perioda.reports import Report
from perioda.serialization import dumps, loads
from perioda.types import (
    CommandType,
    EngineType,
    ExitCode,
    OutputFormat,
    ReportStatus,
)
from perioda.utils import Constants

logger = logging.getLogger(__name__)

_EXIT_CODES = {
    ReportStatus.VERIFIED: ExitCode.SUCCESS,
    ReportStatus.FALSIFIED: ExitCode.FALSIFIED,
}


def _int_list(text: str) -> List[int]:
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected comma-separated integers, got {text!r}"
        )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        "perioda",
        description="Exact periodicity reconstruction, divisor cocycles "
        "and Weierstrass checks.",
    )
    parser.add_argument(
        'command',
        choices=[c.value for c in CommandType],
        help='The pipeline to run',
    )
    parser.add_argument('--input', dest='input_path', help='JSON instance')
    parser.add_argument(
        '--output',
        dest='output_path',
        help='Write the report here instead of standard output',
    )
    parser.add_argument(
        '--format',
        dest='output_format',
        choices=[f.value for f in OutputFormat],
        default=OutputFormat.JSON.value,
    )
    parser.add_argument('--window', type=int, help='Window half-width B')
    parser.add_argument('--den-cap', type=int, help='Denominator cap D')
    parser.add_argument(
        '--tol', type=float, default=Constants.DEFAULT_TOLERANCE
    )
    parser.add_argument('--radius', type=float, default=40.0)
    parser.add_argument(
        '--engine',
        choices=[e.value for e in EngineType],
        default=EngineType.Q_SERIES.value,
    )
    parser.add_argument('--seed', type=int, default=Constants.DEFAULT_SEED)
    parser.add_argument('--verbose', action='store_true')
    parser.add_argument('--P', type=int)
    parser.add_argument('--Q', type=int)
    parser.add_argument('--range', dest='range_', type=int)
    parser.add_argument('--N', type=int)
    parser.add_argument('--S', type=_int_list, default=[])
    parser.add_argument('--T', type=_int_list, default=[])
    parser.add_argument('--x', type=int)
    parser.add_argument('--y', type=int)
    parser.add_argument('--probes', type=int, default=100)
    return parser


def _plain(witness: object) -> object:
    if witness is None:
        return None
    try:
        return loads(dumps(witness))
    except (TypeError, ValueError):
        return str(witness)


def _error_report(
    command: CommandType, exc: BaseException, witness: object = None
) -> Report:
    payload: Dict[str, Any] = {
        "error": type(exc).__name__,
        "message": str(exc),
    }
    if witness is not None:
        payload["witness"] = witness
    return Report(ReportStatus.ERROR, command, payload)


def run(spec: CommandSpec) -> Tuple[Report, ExitCode]:
    r"""Runs one command and maps its outcome to an exit code.

    Args:
        spec (CommandSpec): The validated command.

    Returns:
        Tuple[Report, ExitCode]: The report, and :obj:`0` when verified,
            :obj:`1` when falsified, :obj:`2` for invalid input and
            :obj:`3` for internal errors.
    """
    start = time.perf_counter()
    try:
        report = COMMANDS[spec.command](spec)
        code = _EXIT_CODES[report.status]
    except InputError as exc:
        logger.warning("Invalid input: %s", exc)
        report = _error_report(spec.command, exc, _plain(exc.witness))
        code = ExitCode.INVALID_INPUT
    except InternalError as exc:
        logger.error("Internal error: %s", exc)
        report = _error_report(spec.command, exc)
        code = ExitCode.INTERNAL
    except Exception as exc:
        logger.exception("Unexpected failure.")
        report = _error_report(spec.command, exc)
        code = ExitCode.INTERNAL
    elapsed = time.perf_counter() - start
    return (
        Report(
            report.status,
            report.command,
            report.payload,
            report.witness,
            elapsed,
        ),
        code,
    )


def emit(report: Report, output_format: OutputFormat) -> str:
    r"""Serializes a report: canonical JSON, or coloured text."""
    if output_format is OutputFormat.TEXT:
        return report.to_text()
    return report.to_json()


def main(argv: Optional[List[str]] = None) -> int:
    r"""Entry point of the ``perioda`` console script."""
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
    )
    command = CommandType(args.command)
    try:
        spec = CommandSpec(
            command=command,
            input_path=args.input_path,
            output_path=args.output_path,
            output_format=args.output_format,
            window=args.window,
            den_cap=args.den_cap,
            tol=args.tol,
            radius=args.radius,
            engine=args.engine,
            seed=args.seed,
            verbose=args.verbose,
            P=args.P,
            Q=args.Q,
            range_=args.range_,
            N=args.N,
            S=tuple(args.S),
            T=tuple(args.T),
            x=args.x,
            y=args.y,
            probes=args.probes,
        )
    except InputError as exc:
        report = _error_report(command, exc)
        print(report.to_json())
        return int(ExitCode.INVALID_INPUT)

    report, code = run(spec)
    text = emit(report, spec.output_format)
    if spec.output_path is not None:
        try:
            Path(spec.output_path).write_text(text + "\n", encoding="utf-8")
        except OSError as exc:
            logger.error("Cannot write %s: %s", spec.output_path, exc)
            return int(ExitCode.INVALID_INPUT)
    else:
        print(text)
    return int(code)
