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
import os
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from functools import reduce as fold
from math import gcd
from typing import (
    Callable,
    Iterable,
    List,
    Optional,
    Sequence,
    Tuple,
    TypeVar,
    Union,
)

from sympy import factorint, integer_log, multiplicity, primefactors

from perioda.errors import InputError
from perioda.utils.constants import Constants

logger = logging.getLogger(__name__)

T = TypeVar('T')
R = TypeVar('R')

RationalLike = Union[int, str, Fraction]


def parse_fraction(value: RationalLike) -> Fraction:
    r"""Parses an exact rational from an integer, a :obj:`Fraction` or a
    string of the form ``"num/den"`` or ``"n"``.

    Args:
        value (RationalLike): The value to parse.

    Returns:
        Fraction: The parsed rational.

    Raises:
        InputError: If the value is a float, a boolean or a malformed
            string.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or isinstance(value, float):
        raise InputError(
            f"Rationals must be exact, got {value!r} of type "
            f"{type(value).__name__}."
        )
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        try:
            if "/" in text:
                num, den = text.split("/", 1)
                if int(den) <= 0:
                    raise InputError(
                        f"Denominators must be positive, got {value!r}."
                    )
                return Fraction(int(num), int(den))
            return Fraction(int(text))
        except ValueError:
            raise InputError(f"Malformed rational {value!r}.")
    raise InputError(f"Cannot read a rational from {value!r}.")


def format_fraction(value: Fraction) -> str:
    r"""Formats a rational as the reduced string ``"num/den"``."""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def valuation(x: int, p: int) -> int:
    r"""Returns the power of the prime :obj:`p` dividing the non-zero
    integer :obj:`x`.

    Raises:
        InputError: If :obj:`x` is zero.
    """
    if x == 0:
        raise InputError("The valuation of 0 is not finite.")
    return int(multiplicity(p, abs(x)))


def prime_to_part(x: int, primes: Iterable[int]) -> int:
    r"""Returns the prime-to-:obj:`primes` part of :obj:`x`, retaining the
    sign.

    Example:
        >>> prime_to_part(-60, [2, 5])
        -3
    """
    result = x
    for p in primes:
        result //= p ** valuation(x, p)
    return result


def prime_set(n: int) -> List[int]:
    r"""Returns the sorted list of primes dividing :obj:`n`."""
    return [int(p) for p in primefactors(abs(n))]


def is_multiplicatively_independent(p: int, q: int) -> bool:
    r"""Checks whether :math:`p^a = q^b` holds only for :math:`a = b = 0`.

    Args:
        p (int): An integer greater than 1.
        q (int): An integer greater than 1.

    Returns:
        bool: Whether :obj:`p` and :obj:`q` are multiplicatively
            independent.
    """
    if p < 2 or q < 2:
        raise InputError(
            f"Dilations should be integers larger than 1, got {p} and {q}."
        )
    fp, fq = factorint(p), factorint(q)
    if set(fp) != set(fq):
        return True
    ratios = {Fraction(fp[prime], fq[prime]) for prime in fp}
    return len(ratios) > 1


def solve_power(base: int, ratio: Fraction) -> Optional[int]:
    r"""Finds the integer :math:`n` (possibly negative) with
    :math:`base^n = ratio`.

    Args:
        base (int): An integer greater than 1.
        ratio (Fraction): The target value.

    Returns:
        Optional[int]: The exponent, or :obj:`None` if :obj:`ratio` is not
            an integral power of :obj:`base`.
    """
    ratio = Fraction(ratio)
    if ratio <= 0:
        return None
    if ratio == 1:
        return 0
    if ratio.denominator == 1:
        exponent, exact = integer_log(ratio.numerator, base)
        return int(exponent) if exact else None
    if ratio.numerator == 1:
        exponent, exact = integer_log(ratio.denominator, base)
        return -int(exponent) if exact else None
    return None


def solve_exponent_pair(
    p: int, q: int, ratio: Fraction
) -> Optional[Tuple[int, int]]:
    r"""Finds the unique integer pair :math:`(n, m)` with
    :math:`p^n / q^m = ratio` for multiplicatively independent :obj:`p`
    and :obj:`q`.

    Args:
        p (int): First base.
        q (int): Second base, multiplicatively independent of :obj:`p`.
        ratio (Fraction): The target value.

    Returns:
        Optional[Tuple[int, int]]: The exponents, or :obj:`None` when no
            integral solution exists.
    """
    ratio = Fraction(ratio)
    if ratio <= 0:
        return None
    primes = sorted(
        set(prime_set(p))
        | set(prime_set(q))
        | set(prime_set(ratio.numerator))
        | set(prime_set(ratio.denominator))
    )
    rows = []
    for prime in primes:
        a = int(multiplicity(prime, p))
        b = int(multiplicity(prime, q))
        c = int(multiplicity(prime, ratio.numerator)) - int(
            multiplicity(prime, ratio.denominator)
        )
        if a == 0 and b == 0 and c != 0:
            return None
        rows.append((a, b, c))
    for i, (a1, b1, c1) in enumerate(rows):
        for a2, b2, c2 in rows[i + 1 :]:
            det = a2 * b1 - a1 * b2
            if det == 0:
                continue
            n = Fraction(b1 * c2 - b2 * c1, det)
            m = Fraction(a1 * c2 - a2 * c1, det)
            if n.denominator != 1 or m.denominator != 1:
                return None
            n_int, m_int = int(n), int(m)
            if Fraction(p) ** n_int / Fraction(q) ** m_int != ratio:
                return None
            return n_int, m_int
    raise InputError(
        f"{p} and {q} are not multiplicatively independent.",
        witness=(p, q),
    )


def proportionality(
    target: Sequence[Fraction], source: Sequence[Fraction]
) -> Optional[Fraction]:
    r"""Returns the non-zero scalar :math:`c` with
    :math:`target = c \cdot source`, or :obj:`None` if there is none.

    Both vectors must be non-zero.
    """
    scalar: Optional[Fraction] = None
    for t, s in zip(target, source):
        if s == 0:
            if t != 0:
                return None
            continue
        ratio = Fraction(t) / Fraction(s)
        if ratio == 0 or (scalar is not None and ratio != scalar):
            return None
        scalar = ratio
    return scalar


def lcm_all(values: Iterable[int]) -> int:
    r"""Returns the least common multiple of the given positive integers
    (:obj:`1` for an empty input)."""
    return fold(lambda a, b: a * b // gcd(a, b), values, 1)


def get_thread_count() -> int:
    r"""Reads the optional thread cap from the environment.

    Returns:
        int: The number of worker threads, :obj:`1` when the variable is
            absent or invalid.
    """
    raw = os.environ.get(Constants.THREADS_ENV_VAR)
    if raw is None:
        return 1
    try:
        threads = int(raw)
    except ValueError:
        logger.warning(
            "Ignoring non-integer %s=%r.", Constants.THREADS_ENV_VAR, raw
        )
        return 1
    return max(threads, 1)


def ordered_map(func: Callable[[T], R], items: Sequence[T]) -> List[R]:
    r"""Maps :obj:`func` over :obj:`items`, in parallel when
    ``PERIODA_THREADS`` allows it, returning results in input order.
    """
    threads = get_thread_count()
    if threads <= 1 or len(items) < 2:
        return [func(item) for item in items]
    with ThreadPoolExecutor(max_workers=threads) as executor:
        return list(executor.map(func, items))
