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
import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import List, Optional, Sequence, Tuple

from sympy import Matrix, Rational
from sympy.matrices.normalforms import hermite_normal_form

from perioda.errors import InputError, InternalError
from perioda.lattices.scalar import Point, Scalar
from perioda.utils.commons import lcm_all

logger = logging.getLogger(__name__)

IntMatrix = Tuple[Tuple[int, ...], ...]


def _to_int_matrix(rows: Sequence[Sequence[int]]) -> IntMatrix:
    return tuple(tuple(int(v) for v in row) for row in rows)


def _sympy_to_ints(matrix: Matrix) -> IntMatrix:
    return tuple(
        tuple(int(matrix[i, j]) for j in range(matrix.cols))
        for i in range(matrix.rows)
    )


@dataclass(frozen=True, eq=False)
class Lattice:
    r"""A full-rank sublattice of the reference lattice :math:`\mathbb{Z}^r`.

    The basis is stored row-major; its *columns* generate the lattice.
    Equality compares the generated lattices (through the Hermite normal
    form), not the particular bases.

    Args:
        basis (Sequence[Sequence[int]]): Square integer matrix with non-zero
            determinant.

    Raises:
        InputError: If the matrix is not square, not integral or singular.
    """

    basis: IntMatrix

    def __post_init__(self) -> None:
        rows = self.basis
        if not rows or any(len(row) != len(rows) for row in rows):
            raise InputError(f"Lattice bases must be square, got {rows!r}.")
        for row in rows:
            for value in row:
                if isinstance(value, bool) or int(value) != value:
                    raise InputError(
                        f"Lattice bases must be integral, got {value!r}."
                    )
        object.__setattr__(self, 'basis', _to_int_matrix(rows))
        if self.determinant == 0:
            raise InputError(
                f"Lattice bases must have full rank, got {self.basis!r}."
            )

    @classmethod
    def standard(cls, rank: int, scale: int = 1) -> "Lattice":
        r"""Returns :math:`scale \cdot \mathbb{Z}^{rank}`."""
        return cls(
            tuple(
                tuple(scale if i == j else 0 for j in range(rank))
                for i in range(rank)
            )
        )

    @property
    def rank(self) -> int:
        return len(self.basis)

    @cached_property
    def _matrix(self) -> Matrix:
        return Matrix(self.basis)

    @cached_property
    def determinant(self) -> int:
        return int(self._matrix.det())

    @property
    def index(self) -> int:
        r"""The index of the lattice in :math:`\mathbb{Z}^r`."""
        return abs(self.determinant)

    @cached_property
    def _adjugate(self) -> IntMatrix:
        return _sympy_to_ints(self._matrix.adjugate())

    @cached_property
    def _diagonal(self) -> Optional[Tuple[int, ...]]:
        r"""The diagonal of the basis, or :obj:`None` unless the basis is
        diagonal."""
        rank = self.rank
        for i in range(rank):
            for j in range(rank):
                if i != j and self.basis[i][j]:
                    return None
        return tuple(self.basis[i][i] for i in range(rank))

    @cached_property
    def hermite(self) -> IntMatrix:
        r"""The column Hermite normal form, a canonical basis."""
        return _sympy_to_ints(hermite_normal_form(self._matrix))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Lattice):
            return NotImplemented
        return self.rank == other.rank and self.hermite == other.hermite

    def __hash__(self) -> int:
        return hash(self.hermite)

    @property
    def generators(self) -> List[Point]:
        r"""The basis columns as points."""
        return [
            Point.of(*(self.basis[i][j] for i in range(self.rank)))
            for j in range(self.rank)
        ]

    def _check_rank(self, rank: int) -> None:
        if rank != self.rank:
            raise InputError(
                f"Rank mismatch: lattice of rank {self.rank}, "
                f"input of rank {rank}."
            )

    def coordinates(self, vector: Sequence[Fraction]) -> Tuple[Fraction, ...]:
        r"""Solves for the basis coordinates of a rational vector."""
        self._check_rank(len(vector))
        det = self.determinant
        return tuple(
            Fraction(sum(a * v for a, v in zip(row, vector)), det)
            for row in self._adjugate
        )

    def combine(
        self, coefficients: Sequence[Fraction]
    ) -> Tuple[Fraction, ...]:
        r"""Returns the rational vector with the given basis coordinates."""
        self._check_rank(len(coefficients))
        return tuple(
            Fraction(sum(b * c for b, c in zip(row, coefficients)))
            for row in self.basis
        )

    def contains(self, x: Point) -> bool:
        r"""Checks lattice membership of a point.

        Args:
            x (Point): The point to test.

        Returns:
            bool: :obj:`True` iff the :math:`\alpha`-part of :obj:`x`
                vanishes and its basis coordinates are integers.
        """
        self._check_rank(x.rank)
        if not x.in_m:
            return False
        return all(c.denominator == 1 for c in self.coordinates(x.rat))

    def reduce_rational(
        self, vector: Sequence[Fraction]
    ) -> Tuple[Fraction, ...]:
        r"""Returns the representative of a rational vector modulo the
        lattice whose basis coordinates lie in :math:`[0, 1)`.

        With a common denominator :math:`D` of the vector and
        :math:`\Delta = \det B`, the coordinates are
        :math:`\mathrm{adj}(B) v / \Delta`, so the fractional parts are
        integer residues modulo :math:`|\Delta| D`.
        """
        self._check_rank(len(vector))
        diagonal = self._diagonal
        if diagonal is not None:
            return tuple(Fraction(v) % d for v, d in zip(vector, diagonal))
        vector = [Fraction(v) for v in vector]
        den = lcm_all(v.denominator for v in vector)
        numerators = [v.numerator * (den // v.denominator) for v in vector]
        modulus = self.index * den
        sign = 1 if self.determinant > 0 else -1
        residues = [
            sign * sum(a * n for a, n in zip(row, numerators)) % modulus
            for row in self._adjugate
        ]
        return tuple(
            Fraction(sum(b * k for b, k in zip(row, residues)), modulus)
            for row in self.basis
        )

    def reduce(self, x: Point) -> Point:
        r"""Returns the representative of :obj:`x` modulo the lattice whose
        rational basis coordinates lie in :math:`[0, 1)`. The
        :math:`\alpha`-part is left unchanged.

        Args:
            x (Point): The point to reduce.

        Returns:
            Point: The reduced representative.
        """
        self._check_rank(x.rank)
        rat = self.reduce_rational(x.rat)
        return Point(
            tuple(Scalar(r, c.irr) for r, c in zip(rat, x.coords))
        )

    def scale(self, factor: int) -> "Lattice":
        r"""Returns :math:`factor \cdot L` for a non-zero integer
        :obj:`factor`."""
        if factor == 0:
            raise InputError("Cannot scale a lattice by 0.")
        return Lattice(
            tuple(tuple(factor * v for v in row) for row in self.basis)
        )

    def contains_lattice(self, other: "Lattice") -> bool:
        r"""Checks whether :obj:`other` is a sublattice."""
        self._check_rank(other.rank)
        return all(self.contains(g) for g in other.generators)

    def join(self, other: "Lattice") -> "Lattice":
        r"""Returns the smallest lattice containing both lattices.

        Args:
            other (Lattice): A lattice of the same rank.

        Returns:
            Lattice: The join, in Hermite normal form.
        """
        self._check_rank(other.rank)
        stacked = Matrix.hstack(self._matrix, other._matrix)
        return Lattice(_sympy_to_ints(hermite_normal_form(stacked)))

    def meet(self, other: "Lattice") -> "Lattice":
        r"""Returns the intersection of both lattices, computed as the dual of
        the join of the dual lattices.
        """
        self._check_rank(other.rank)
        if self == other:
            return self
        duals = Matrix.hstack(self._matrix.inv().T, other._matrix.inv().T)
        scale = lcm_all(int(Rational(v).q) for v in duals)
        dual_join = hermite_normal_form((duals * scale).applyfunc(int))
        basis = (dual_join / scale).inv().T
        if any(Rational(v).q != 1 for v in basis):
            raise InternalError(
                f"Intersection basis is not integral: {basis!r}."
            )
        return Lattice(_sympy_to_ints(basis))

    def coset_representatives(self, sub: "Lattice") -> List[Point]:
        r"""Enumerates representatives of :math:`L / sub`, each reduced
        modulo :obj:`sub`.

        Args:
            sub (Lattice): A sublattice of finite index.

        Returns:
            List[Point]: Exactly :math:`[L : sub]` representatives, in a
                deterministic order.

        Raises:
            InputError: If :obj:`sub` is not contained in the lattice.
        """
        if not self.contains_lattice(sub):
            raise InputError(
                "Coset representatives need a sublattice.", witness=sub
            )
        relative = self._matrix.inv() * sub._matrix
        triangular = hermite_normal_form(relative.applyfunc(int))
        diagonal = [abs(int(triangular[i, i])) for i in range(self.rank)]
        reps = []
        for k in itertools.product(*(range(d) for d in diagonal)):
            vector = self.combine([Fraction(v) for v in k])
            reps.append(sub.reduce(Point.of(*vector)))
        return reps

    def adapted_basis(self, x: Point, y: Point) -> "Lattice":
        r"""Returns another basis of the same lattice in which every
        coordinate of :obj:`x` and of :obj:`y` is non-zero.

        The basis is reached from the current one by integral shears
        :math:`e_j \mapsto e_j + t e_i`, which change only the :math:`i`-th
        coordinate of every vector.

        Args:
            x (Point): A non-zero rational point.
            y (Point): A non-zero rational point.

        Returns:
            Lattice: The same lattice with an adapted basis.

        Raises:
            InputError: If :obj:`x` or :obj:`y` is zero or lies outside
                :math:`M`.
        """
        for v in (x, y):
            self._check_rank(v.rank)
            if v.is_zero or not v.in_m:
                raise InputError(
                    "Adapted bases need non-zero rational points.", witness=v
                )
        columns = [
            [Fraction(self.basis[i][j]) for i in range(self.rank)]
            for j in range(self.rank)
        ]
        cx = list(self.coordinates(x.rat))
        cy = list(self.coordinates(y.rat))

        def is_bad(i: int) -> bool:
            return cx[i] == 0 or cy[i] == 0

        while any(is_bad(i) for i in range(self.rank)):
            bad = [i for i in range(self.rank) if is_bad(i)]
            good = [i for i in range(self.rank) if not is_bad(i)]
            for i in bad:
                partners = [
                    j
                    for j in good + bad
                    if j != i
                    and (cx[i] != 0 or cx[j] != 0)
                    and (cy[i] != 0 or cy[j] != 0)
                ]
                if partners:
                    break
            else:
                raise InternalError(
                    f"No shear fixes coordinates {bad} of {x} and {y}."
                )
            j = partners[0]
            t = 1
            while cx[i] - t * cx[j] == 0 or cy[i] - t * cy[j] == 0:
                t += 1
            logger.debug("Shear e_%d += %d e_%d", j, t, i)
            columns[j] = [a + t * b for a, b in zip(columns[j], columns[i])]
            cx[i] -= t * cx[j]
            cy[i] -= t * cy[j]

        adapted = Lattice(
            tuple(
                tuple(int(columns[j][i]) for j in range(self.rank))
                for i in range(self.rank)
            )
        )
        for v in (x, y):
            if any(c == 0 for c in adapted.coordinates(v.rat)):
                raise InternalError(f"Basis {adapted.basis} is not adapted.")
        return adapted
