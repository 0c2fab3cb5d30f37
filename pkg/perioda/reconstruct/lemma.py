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
import warnings
from dataclasses import dataclass
from math import prod
from typing import Any, Dict, Iterable, List, Optional, Tuple

from sympy import isprime, mod_inverse

from perioda.configs import ReconstructConfig
from perioda.errors import InputError, TheoremViolation
from perioda.utils import prime_to_part, valuation

logger = logging.getLogger(__name__)


def _prime_tuple(primes: Iterable[int], name: str) -> Tuple[int, ...]:
    result = tuple(sorted(set(int(p) for p in primes)))
    for p in result:
        if not isprime(p):
            raise InputError(f"`{name}` must contain primes, got {p}.")
    return result


def _check_prime_sets(S: Iterable[int], T: Iterable[int]) -> Tuple:
    s_primes, t_primes = _prime_tuple(S, "S"), _prime_tuple(T, "T")
    if not s_primes or not t_primes:
        raise InputError("Both prime sets must be non-empty.")
    if set(s_primes) & set(t_primes):
        raise InputError(
            f"Prime sets must be disjoint, got {s_primes} and {t_primes}.",
            witness=sorted(set(s_primes) & set(t_primes)),
        )
    return s_primes, t_primes


def sim_S(x: int, y: int, S: Iterable[int], N: int) -> bool:
    r"""Decides :math:`x \sim_S y`: equal :math:`p`-adic valuations for
    every :math:`p \in S` and prime-to-:math:`S` parts (signs retained)
    congruent modulo :obj:`N`. The class of :math:`0` is :math:`\{0\}`.

    Args:
        x (int): First integer.
        y (int): Second integer.
        S (Iterable[int]): A set of primes.
        N (int): The modulus, at least :obj:`1`.

    Returns:
        bool: Whether the relation holds.

    Example:
        >>> sim_S(12, 32, {5}, 10)
        True
    """
    if N < 1:
        raise InputError(f"`N` should be a value larger than 0, got {N}.")
    if x == 0 or y == 0:
        return x == 0 and y == 0
    primes = tuple(S)
    if any(valuation(x, p) != valuation(y, p) for p in primes):
        return False
    return (prime_to_part(x, primes) - prime_to_part(y, primes)) % N == 0


@dataclass(frozen=True)
class Lemma1Walk:
    r"""A two-step walk :math:`x \sim_S z \sim_T y`.

    Attributes:
        x (int): Start.
        z (int): Middle point, :math:`x + sPN = y + tQN`.
        y (int): End.
        P (int): :math:`\prod_{p \in S} p^{v_p(x) + 1}`.
        Q (int): :math:`\prod_{q \in T} q^{v_q(y) + 1}`.
        s (int): Bezout coefficient with :math:`sP - tQ = k`.
        t (int): Bezout coefficient.
    """

    x: int
    z: int
    y: int
    P: int
    Q: int
    s: int
    t: int

    @property
    def chain(self) -> List[int]:
        return [self.x, self.z, self.y]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "chain": self.chain,
            "relations": ["S", "T"],
            "P": self.P,
            "Q": self.Q,
            "s": self.s,
            "t": self.t,
        }


def lemma1_walk(
    x: int, y: int, N: int, S: Iterable[int], T: Iterable[int]
) -> Lemma1Walk:
    r"""Connects two congruent integers by one :math:`\sim_S` step and one
    :math:`\sim_T` step.

    With :math:`y = x + kN`, the coefficients solve :math:`sP - tQ = k`
    with :math:`0 \le s < Q`; then :math:`z = x + sPN = y + tQN`.

    Args:
        x (int): Non-zero start.
        y (int): Non-zero end with :math:`x \equiv y \pmod N`.
        N (int): The modulus.
        S (Iterable[int]): Non-empty set of primes.
        T (Iterable[int]): Non-empty set of primes disjoint from :obj:`S`.

    Returns:
        Lemma1Walk: The verified walk.

    Raises:
        InputError: If a precondition fails.
    """
    s_primes, t_primes = _check_prime_sets(S, T)
    if N < 1:
        raise InputError(f"`N` should be a value larger than 0, got {N}.")
    if x == 0 or y == 0:
        raise InputError("Walks connect non-zero integers.", witness=(x, y))
    if (y - x) % N:
        raise InputError(
            f"{x} and {y} are not congruent modulo {N}.", witness=(x, y)
        )
    k = (y - x) // N
    P = prod(p ** (valuation(x, p) + 1) for p in s_primes)
    Q = prod(q ** (valuation(y, q) + 1) for q in t_primes)
    s = (k * int(mod_inverse(P, Q))) % Q
    t = (s * P - k) // Q
    z = x + s * P * N
    if z != y + t * Q * N:
        raise TheoremViolation(f"Bezout step failed for {x}, {y}.")
    if not (sim_S(x, z, s_primes, N) and sim_S(z, y, t_primes, N)):
        raise TheoremViolation(
            f"Walk {x} -> {z} -> {y} does not respect the relations."
        )
    return Lemma1Walk(x, z, y, P, Q, s, t)


@dataclass(frozen=True)
class ClosureReport:
    r"""The brute-force closure of :math:`\sim_S \cup \sim_T` on
    :math:`[-R, R] \setminus \{0\}`.

    Attributes:
        classes (List[List[int]]): The equivalence classes, each sorted,
            ordered by their smallest element.
        refines_residues (bool): Whether every class lies in one residue
            class modulo :obj:`N`.
        matches_residues (bool): Whether the classes are exactly the
            residue classes intersected with the range.
        threshold (int): The range from which a match is expected.
        witness (Tuple[int, int], optional): Two elements of one class that
            are incongruent, or two congruent elements in different
            classes. (default: :obj:`None`)
    """

    range_: int
    N: int
    classes: List[List[int]]
    refines_residues: bool
    matches_residues: bool
    threshold: int
    witness: Optional[Tuple[int, int]] = None

    @property
    def consistent(self) -> bool:
        r"""Whether the closure meets its contract: always a refinement of
        the residues, and equal to them from the threshold on."""
        if not self.refines_residues:
            return False
        return self.matches_residues or self.range_ < self.threshold

    def to_dict(self) -> Dict[str, Any]:
        return {
            "range": self.range_,
            "N": self.N,
            "class_count": len(self.classes),
            "class_sizes": [len(c) for c in self.classes],
            "refines_residues": self.refines_residues,
            "matches_residues": self.matches_residues,
            "threshold": self.threshold,
        }


class _UnionFind:
    def __init__(self, items: Iterable[int]) -> None:
        self.parent = {item: item for item in items}

    def find(self, item: int) -> int:
        root = item
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[item] != root:
            self.parent[item], item = root, self.parent[item]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def _relation_key(x: int, primes: Tuple[int, ...], N: int) -> Tuple:
    return (
        tuple(valuation(x, p) for p in primes),
        prime_to_part(x, primes) % N,
    )


def equivalence_closure_bruteforce(
    range_: int,
    N: int,
    S: Iterable[int],
    T: Iterable[int],
    config: Optional[ReconstructConfig] = None,
) -> ClosureReport:
    r"""Computes the equivalence closure of :math:`\sim_S \cup \sim_T` on
    :math:`[-R, R] \setminus \{0\}` by union-find.

    Elements with equal :math:`\sim_S`-invariants (valuations and residue
    of the prime-to-:math:`S` part) are merged directly, which is the
    same as testing every pair. The point :math:`0` forms its own class
    and is left out.

    Args:
        range_ (int): The range :math:`R`.
        N (int): The modulus.
        S (Iterable[int]): Non-empty set of primes.
        T (Iterable[int]): Non-empty set of primes disjoint from :obj:`S`.
        config (ReconstructConfig, optional): Supplies the threshold
            factor. (default: :obj:`None`)

    Returns:
        ClosureReport: The classes and their comparison with the residues.
    """
    s_primes, t_primes = _check_prime_sets(S, T)
    if N < 1 or range_ < 1:
        raise InputError(
            f"`N` and the range should be positive, got {N} and {range_}."
        )
    config = config or ReconstructConfig()
    items = [x for x in range(-range_, range_ + 1) if x != 0]
    forest = _UnionFind(items)
    for primes in (s_primes, t_primes):
        first: Dict[Tuple, int] = {}
        for x in items:
            key = _relation_key(x, primes, N)
            if key in first:
                forest.union(first[key], x)
            else:
                first[key] = x

    grouped: Dict[int, List[int]] = {}
    for x in items:
        grouped.setdefault(forest.find(x), []).append(x)
    classes = sorted(grouped.values(), key=lambda c: c[0])

    witness: Optional[Tuple[int, int]] = None
    refines = True
    for members in classes:
        for x in members[1:]:
            if (x - members[0]) % N:
                refines = False
                witness = witness or (members[0], x)
    representative: Dict[int, int] = {}
    matches = refines
    for members in classes:
        residue = members[0] % N
        if residue in representative:
            matches = False
            if witness is None:
                witness = (representative[residue], members[0])
        else:
            representative[residue] = members[0]

    threshold = (
        config.closure_threshold_factor * N * prod(s_primes) * prod(t_primes)
    )
    if not matches and range_ < threshold:
        warnings.warn(
            f"Range {range_} is below {threshold}; the closure may "
            "fragment residue classes."
        )
    logger.info(
        "Closure over [-%d, %d] has %d classes.", range_, range_, len(classes)
    )
    return ClosureReport(
        range_, N, classes, refines, matches, threshold, witness
    )
