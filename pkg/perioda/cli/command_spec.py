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
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

from perioda.configs import (
    BaseConfig,
    ReconstructConfig,
    TruncationPolicy,
    WindowConfig,
)
from perioda.errors import InputError
from perioda.types import CommandType, EngineType, OutputFormat
from perioda.utils import Constants


@dataclass(frozen=True)
class CommandSpec(BaseConfig):
    r"""A fully validated command line.

    Args:
        command (CommandType): The subcommand.
        input_path (str, optional): The JSON instance, required by the
            commands that read one. (default: :obj:`None`)
        output_path (str, optional): The only file the command writes;
            standard output when absent. (default: :obj:`None`)
        output_format (OutputFormat, optional): How the report is emitted.
            (default: :obj:`OutputFormat.JSON`)
        window (int, optional): Window half-width, overriding the input and
            the command default. (default: :obj:`None`)
        den_cap (int, optional): Window denominator cap.
            (default: :obj:`None`)
        tol (float, optional): Numeric tolerance.
            (default: :obj:`Constants.DEFAULT_TOLERANCE`)
        radius (float, optional): Lattice-sum radius. (default: :obj:`40.0`)
        engine (EngineType, optional): Weierstrass engine.
            (default: :obj:`EngineType.Q_SERIES`)
        seed (int, optional): Seed of every random sweep.
            (default: :obj:`Constants.DEFAULT_SEED`)
        verbose (bool, optional): Log at debug level.
            (default: :obj:`False`)
        P (int, optional): First dilation. (default: :obj:`None`)
        Q (int, optional): Second dilation. (default: :obj:`None`)
        range_ (int, optional): Range of the closure. (default: :obj:`None`)
        N (int, optional): Modulus. (default: :obj:`None`)
        S (Tuple[int, ...], optional): First prime set.
            (default: :obj:`()`)
        T (Tuple[int, ...], optional): Second prime set.
            (default: :obj:`()`)
        x (int, optional): Start of a walk. (default: :obj:`None`)
        y (int, optional): End of a walk. (default: :obj:`None`)
        probes (int, optional): Probes per numeric contract.
            (default: :obj:`100`)

    Raises:
        InputError: If a flag is out of range or a required flag is
            missing.
    """

    command: CommandType
    input_path: Optional[str] = None
    output_path: Optional[str] = None
    output_format: OutputFormat = OutputFormat.JSON
    window: Optional[int] = None
    den_cap: Optional[int] = None
    tol: float = Constants.DEFAULT_TOLERANCE
    radius: float = 40.0
    engine: EngineType = EngineType.Q_SERIES
    seed: int = Constants.DEFAULT_SEED
    verbose: bool = False
    P: Optional[int] = None
    Q: Optional[int] = None
    range_: Optional[int] = None
    N: Optional[int] = None
    S: Tuple[int, ...] = ()
    T: Tuple[int, ...] = ()
    x: Optional[int] = None
    y: Optional[int] = None
    probes: int = 100

    def __post_init__(self) -> None:
        object.__setattr__(self, 'command', CommandType(self.command))
        object.__setattr__(
            self, 'output_format', OutputFormat(self.output_format)
        )
        object.__setattr__(self, 'engine', EngineType(self.engine))
        object.__setattr__(self, 'S', tuple(self.S))
        object.__setattr__(self, 'T', tuple(self.T))
        if self.command.needs_input and self.input_path is None:
            raise InputError(
                f"`{self.command.value}` needs an input file (--input)."
            )
        for name in ("P", "Q"):
            value = getattr(self, name)
            if value is not None and value < 2:
                raise InputError(
                    f"`{name}` should be a value larger than 1, got {value}."
                )
        for name in ("range_", "N"):
            value = getattr(self, name)
            if value is not None and value < 1:
                raise InputError(
                    f"`{name.rstrip('_')}` should be a value larger than 0, "
                    f"got {value}."
                )
        if self.probes < 1:
            raise InputError(
                f"`probes` should be a value larger than 0, got {self.probes}."
            )
        if self.command is CommandType.LEMMA1 and None in (
            self.x,
            self.y,
            self.N,
        ):
            raise InputError("`lemma1` needs --x, --y and --N.")
        if self.command in (CommandType.LEMMA1, CommandType.CLOSURE) and (
            not self.S or not self.T
        ):
            raise InputError(
                f"`{self.command.value}` needs the prime sets --S and --T."
            )
        if self.command is CommandType.CLOSURE and None in (
            self.range_,
            self.N,
        ):
            raise InputError("`closure` needs --range and --N.")
        # The configs validate their own fields.
        self.window_config()
        self.truncation_policy()

    def window_config(
        self, base: Optional[WindowConfig] = None
    ) -> WindowConfig:
        r"""The window of :obj:`base` (or the default window) with the
        flags applied."""
        base = base or WindowConfig()
        return WindowConfig(
            self.window if self.window is not None else base.bound,
            self.den_cap if self.den_cap is not None else base.den_cap,
            base.alpha_probes,
        )

    def reconstruct_config(
        self, window: Optional[WindowConfig] = None
    ) -> ReconstructConfig:
        defaults = ReconstructConfig()
        return ReconstructConfig(
            window=self.window_config(window or defaults.window)
        )

    def truncation_policy(self) -> TruncationPolicy:
        return TruncationPolicy(
            radius=self.radius, tol=self.tol, engine=self.engine
        )
