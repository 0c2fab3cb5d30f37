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
from typing import Any, Optional


class PeriodaError(Exception):
    r"""Base class of every error raised by :mod:`perioda`."""

    pass


class InputError(PeriodaError, ValueError):
    r"""Raised when an input violates a documented precondition.

    Args:
        message (str): Human-readable description of the violation.
        witness (Any, optional): A concrete object (point, coset, pair of
            values) exhibiting the violation. (default: :obj:`None`)
    """

    def __init__(self, message: str, witness: Optional[Any] = None) -> None:
        super().__init__(message)
        self.witness = witness


class UnsupportedError(InputError):
    r"""Raised for valid inputs that lie outside the implemented range of a
    theorem, e.g. non-coprime dilations for the periodicity reconstruction.
    """

    pass


class DomainError(InputError):
    r"""Raised when a numeric evaluation point is too close to a pole."""

    pass


class InternalError(PeriodaError, RuntimeError):
    r"""Raised when an internal invariant of the implementation breaks."""

    pass


class TheoremViolation(InternalError):
    r"""Raised when a check guaranteed by a proven theorem fails. This always
    indicates a bug in the implementation, never a property of the input.
    """

    pass
