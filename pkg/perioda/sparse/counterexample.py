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
from fractions import Fraction
from math import gcd
from typing import List, Optional, Tuple

from sympy import nextprime

from perioda.errors import InputError
from perioda.lattices import Lattice, Point
from perioda.sparse.base import check_dilation
from perioda.sparse.quasi_periodic import QuasiPeriodicFn
from perioda.sparse.telescope import TelescopeFn, telescope


def smallest_coprime_prime(P: int) -> int:
    r"""Returns the smallest prime not dividing :obj:`P`."""
    ell = 2
    while P % ell == 0:
        ell = int(nextprime(ell))
    return ell


def counterexample_function(
    P: int, denominator: Optional[int] = None
) -> Tuple[QuasiPeriodicFn, TelescopeFn]:
    r"""Builds a function whose dilation difference by :obj:`P` alone is
    :math:`\mathbb{Z}`-periodic although the function is not.

    The summand is :math:`1` on every coset :math:`a / \ell + \mathbb{Z}`
    with :math:`\ell \nmid a`, and the function is its telescoping sum.

    Args:
        P (int): The single dilation.
        denominator (int, optional): The denominator :math:`\ell`, coprime
            to :obj:`P`. Defaults to the smallest prime not dividing
            :obj:`P`. (default: :obj:`None`)

    Returns:
        Tuple[QuasiPeriodicFn, TelescopeFn]: The summand and the sum.
    """
    check_dilation(P)
    ell = denominator or smallest_coprime_prime(P)
    if ell < 2 or gcd(ell, P) != 1:
        raise InputError(f"Denominator {ell} must be >= 2 and coprime to {P}.")
    g = QuasiPeriodicFn(
        Lattice.standard(1),
        {Point.of(Fraction(a, ell)): 1 for a in range(1, ell)},
    )
    return g, telescope(g, P)


def unboundedness_profile(
    P: int, n_max: int, denominator: Optional[int] = None
) -> List[Fraction]:
    r"""Returns :math:`f(P^n / \ell)` for :math:`1 \le n \le n_{max}`, where
    :math:`f` is the one-dilation counterexample; the value at :math:`n` is
    :math:`n`."""
    _, f = counterexample_function(P, denominator)
    ell = denominator or smallest_coprime_prime(P)
    return [f(Point.of(Fraction(P**n, ell))) for n in range(1, n_max + 1)]
