"""
Exact rational linear algebra

Dense matrices over QQ backed by sympy's DomainMatrix, canonical subspaces
(reduced row echelon bases) and coordinate systems. Vectors are plain lists
of scalars and are always treated as row vectors.
"""

import logging
from fractions import Fraction
from itertools import product
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np
from sympy import Poly, QQ, Symbol
from sympy.polys.matrices import DomainMatrix

from silting.core.exceptions import DimensionMismatch

logger = logging.getLogger(__name__)

Scalar = QQ.dtype
Vector = List[Scalar]

ZERO = QQ(0)
ONE = QQ(1)


def to_scalar(value) -> Scalar:
    """Convert an int, Fraction, string such as '3/4', or QQ element to a scalar."""
    if isinstance(value, Scalar):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, int):
        return QQ(value)
    if isinstance(value, Fraction):
        return QQ(value.numerator, value.denominator)
    if isinstance(value, str):
        parsed = Fraction(value.strip())
        return QQ(parsed.numerator, parsed.denominator)
    return QQ.convert(value)


def format_scalar(value: Scalar) -> str:
    numerator, denominator = int(value.numerator), int(value.denominator)
    if denominator == 1:
        return str(numerator)
    return f"{numerator}/{denominator}"


def unit_vector(size: int, index: int) -> Vector:
    vector = [ZERO] * size
    vector[index] = ONE
    return vector


def add_vectors(left: Sequence[Scalar], right: Sequence[Scalar]) -> Vector:
    return [a + b for a, b in zip(left, right)]


def scale_vector(scalar: Scalar, vector: Sequence[Scalar]) -> Vector:
    return [scalar * entry for entry in vector]


def is_zero_vector(vector: Iterable[Scalar]) -> bool:
    return not any(vector)


class Matrix:
    """Immutable dense matrix of exact rationals."""

    __slots__ = ("_data", "rows", "cols")

    def __init__(self, rows: Iterable[Iterable], cols: Optional[int] = None):
        data = [[to_scalar(entry) for entry in row] for row in rows]
        if cols is None:
            if not data:
                raise DimensionMismatch("column count required for a matrix without rows")
            cols = len(data[0])
        for row in data:
            if len(row) != cols:
                raise DimensionMismatch(f"ragged row of length {len(row)}, expected {cols}")
        self._data = data
        self.rows = len(data)
        self.cols = cols

    @classmethod
    def _trusted(cls, data: List[List[Scalar]], rows: int, cols: int) -> "Matrix":
        matrix = cls.__new__(cls)
        matrix._data = data
        matrix.rows = rows
        matrix.cols = cols
        return matrix

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls._trusted([[ZERO] * cols for _ in range(rows)], rows, cols)

    @classmethod
    def identity(cls, size: int) -> "Matrix":
        return cls._trusted([unit_vector(size, i) for i in range(size)], size, size)

    @classmethod
    def from_vectors(cls, vectors: Sequence[Sequence[Scalar]], cols: int) -> "Matrix":
        """Stack row vectors that are already scalars."""
        data = [list(vector) for vector in vectors]
        for row in data:
            if len(row) != cols:
                raise DimensionMismatch(f"vector of length {len(row)}, expected {cols}")
        return cls._trusted(data, len(data), cols)

    @classmethod
    def from_domain(cls, domain_matrix: DomainMatrix) -> "Matrix":
        rows, cols = domain_matrix.shape
        if rows == 0 or cols == 0:
            return cls.zeros(rows, cols)
        return cls._trusted(domain_matrix.to_list(), rows, cols)

    @classmethod
    def hstack(cls, *blocks: "Matrix") -> "Matrix":
        if not blocks:
            raise DimensionMismatch("nothing to stack")
        rows = blocks[0].rows
        if any(block.rows != rows for block in blocks):
            raise DimensionMismatch("hstack needs equal row counts")
        data = [[entry for block in blocks for entry in block._data[i]] for i in range(rows)]
        return cls._trusted(data, rows, sum(block.cols for block in blocks))

    @classmethod
    def vstack(cls, *blocks: "Matrix") -> "Matrix":
        if not blocks:
            raise DimensionMismatch("nothing to stack")
        cols = blocks[0].cols
        if any(block.cols != cols for block in blocks):
            raise DimensionMismatch("vstack needs equal column counts")
        data = [list(row) for block in blocks for row in block._data]
        return cls._trusted(data, len(data), cols)

    @classmethod
    def block_diagonal(cls, *blocks: "Matrix") -> "Matrix":
        rows = sum(block.rows for block in blocks)
        cols = sum(block.cols for block in blocks)
        result = [[ZERO] * cols for _ in range(rows)]
        row_offset = col_offset = 0
        for block in blocks:
            for i, row in enumerate(block._data):
                result[row_offset + i][col_offset:col_offset + block.cols] = row
            row_offset += block.rows
            col_offset += block.cols
        return cls._trusted(result, rows, cols)

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.rows, self.cols)

    def to_domain(self) -> DomainMatrix:
        return DomainMatrix([list(row) for row in self._data], self.shape, QQ)

    def tolist(self) -> List[List[Scalar]]:
        return [list(row) for row in self._data]

    def row(self, index: int) -> Vector:
        return list(self._data[index])

    def column(self, index: int) -> Vector:
        return [row[index] for row in self._data]

    def __getitem__(self, position: Tuple[int, int]) -> Scalar:
        i, j = position
        return self._data[i][j]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self):
        return hash((self.shape, tuple(tuple(row) for row in self._data)))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(format_scalar(x) for x in row) for row in self._data)
        return f"Matrix({self.rows}x{self.cols}: [{body}])"

    def is_zero(self) -> bool:
        return not any(any(row) for row in self._data)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
        if self.rows == 0 or other.cols == 0 or self.cols == 0:
            return Matrix.zeros(self.rows, other.cols)
        return Matrix.from_domain(self.to_domain() * other.to_domain())

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise DimensionMismatch(f"cannot add {self.shape} and {other.shape}")
        data = [add_vectors(a, b) for a, b in zip(self._data, other._data)]
        return Matrix._trusted(data, self.rows, self.cols)

    def __neg__(self) -> "Matrix":
        return self.scale(-ONE)

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def scale(self, scalar) -> "Matrix":
        scalar = to_scalar(scalar)
        return Matrix._trusted([scale_vector(scalar, row) for row in self._data], self.rows, self.cols)

    def transpose(self) -> "Matrix":
        data = [[self._data[i][j] for i in range(self.rows)] for j in range(self.cols)]
        return Matrix._trusted(data, self.cols, self.rows)

    @property
    def T(self) -> "Matrix":
        return self.transpose()

    def submatrix(self, rows: Optional[Sequence[int]] = None, cols: Optional[Sequence[int]] = None) -> "Matrix":
        row_index = range(self.rows) if rows is None else rows
        col_index = range(self.cols) if cols is None else cols
        data = [[self._data[i][j] for j in col_index] for i in row_index]
        return Matrix._trusted(data, len(row_index), len(col_index))

    def apply(self, vector: Sequence[Scalar]) -> Vector:
        """Row vector times matrix."""
        if len(vector) != self.rows:
            raise DimensionMismatch(f"vector of length {len(vector)} against {self.shape}")
        result = [ZERO] * self.cols
        for coefficient, row in zip(vector, self._data):
            if coefficient:
                for j, entry in enumerate(row):
                    if entry:
                        result[j] += coefficient * entry
        return result

    def rref(self) -> Tuple["Matrix", Tuple[int, ...]]:
        if self.rows == 0 or self.cols == 0:
            return Matrix.zeros(self.rows, self.cols), ()
        reduced, pivots = self.to_domain().rref()
        return Matrix.from_domain(reduced), tuple(pivots)

    def rank(self) -> int:
        if self.rows == 0 or self.cols == 0:
            return 0
        return self.to_domain().rank()

    def nullspace(self) -> "Subspace":
        """Canonical basis of {v : self @ v = 0} (column vectors)."""
        reduced, pivots = self.rref()
        free = [j for j in range(self.cols) if j not in set(pivots)]
        vectors = []
        for column in free:
            vector = unit_vector(self.cols, column)
            for i, pivot in enumerate(pivots):
                vector[pivot] = -reduced[i, column]
            vectors.append(vector)
        return Subspace.span(vectors, self.cols)

    def left_kernel(self) -> "Subspace":
        """Canonical basis of {v : v @ self = 0} (row vectors)."""
        return self.transpose().nullspace()

    def row_space(self) -> "Subspace":
        return Subspace.span(self._data, self.cols)

    def is_invertible(self) -> bool:
        return self.is_square() and self.rank() == self.rows

    def inverse(self) -> "Matrix":
        if not self.is_square():
            raise DimensionMismatch(f"cannot invert a {self.shape} matrix")
        if self.rows == 0:
            return Matrix.zeros(0, 0)
        return Matrix.from_domain(self.to_domain().inv())

    def charpoly(self) -> List[Scalar]:
        """Characteristic polynomial coefficients, leading coefficient first."""
        if not self.is_square():
            raise DimensionMismatch("charpoly needs a square matrix")
        if self.rows == 0:
            return [ONE]
        return list(self.to_domain().charpoly())


def rank(matrix: Matrix) -> int:
    return matrix.rank()


def nullspace(matrix: Matrix) -> "Subspace":
    return matrix.nullspace()


def left_kernel(matrix: Matrix) -> "Subspace":
    return matrix.left_kernel()


def solve_right(matrix: Matrix, target: Matrix) -> Optional[Matrix]:
    """Some X with matrix @ X == target, or None when the system is inconsistent."""
    if matrix.rows != target.rows:
        raise DimensionMismatch(f"row counts differ: {matrix.rows} and {target.rows}")
    if matrix.cols == 0:
        return Matrix.zeros(0, target.cols) if target.is_zero() else None
    reduced, pivots = Matrix.hstack(matrix, target).rref()
    if any(pivot >= matrix.cols for pivot in pivots):
        return None
    solution = [[ZERO] * target.cols for _ in range(matrix.cols)]
    for i, pivot in enumerate(pivots):
        solution[pivot] = reduced.row(i)[matrix.cols:]
    return Matrix._trusted(solution, matrix.cols, target.cols)


def solve_left(matrix: Matrix, target: Matrix) -> Optional[Matrix]:
    """Some X with X @ matrix == target, or None."""
    if matrix.cols != target.cols:
        raise DimensionMismatch(f"column counts differ: {matrix.cols} and {target.cols}")
    solution = solve_right(matrix.transpose(), target.transpose())
    return None if solution is None else solution.transpose()


def greedy_independent_rows(matrix: Matrix) -> List[int]:
    """Indices of the rows kept when scanning top to bottom and dropping dependent ones."""
    _, pivots = matrix.transpose().rref()
    return list(pivots)


class Subspace:
    """A subspace of QQ^ambient with its canonical reduced row echelon basis."""

    __slots__ = ("ambient", "basis", "pivots")

    def __init__(self, ambient: int, basis: Matrix, pivots: Tuple[int, ...]):
        self.ambient = ambient
        self.basis = basis
        self.pivots = pivots

    @classmethod
    def span(cls, vectors: Iterable[Sequence[Scalar]], ambient: int) -> "Subspace":
        stacked = Matrix([list(vector) for vector in vectors], ambient)
        reduced, pivots = stacked.rref()
        basis = reduced.submatrix(rows=range(len(pivots)))
        return cls(ambient, basis, pivots)

    @classmethod
    def zero(cls, ambient: int) -> "Subspace":
        return cls(ambient, Matrix.zeros(0, ambient), ())

    @classmethod
    def full(cls, ambient: int) -> "Subspace":
        return cls(ambient, Matrix.identity(ambient), tuple(range(ambient)))

    @property
    def dim(self) -> int:
        return len(self.pivots)

    def vectors(self) -> List[Vector]:
        return self.basis.tolist()

    def _check(self, other: "Subspace"):
        if self.ambient != other.ambient:
            raise DimensionMismatch(f"ambient dimensions differ: {self.ambient} and {other.ambient}")

    def reduce(self, vector: Sequence[Scalar]) -> Vector:
        """The representative of vector modulo self with zeros at the pivot columns."""
        if len(vector) != self.ambient:
            raise DimensionMismatch(f"vector of length {len(vector)} in ambient {self.ambient}")
        residue = list(vector)
        for i, pivot in enumerate(self.pivots):
            coefficient = residue[pivot]
            if coefficient:
                for j, entry in enumerate(self.basis.row(i)):
                    if entry:
                        residue[j] -= coefficient * entry
        return residue

    def contains(self, vector: Sequence[Scalar]) -> bool:
        return is_zero_vector(self.reduce(vector))

    def contains_space(self, other: "Subspace") -> bool:
        self._check(other)
        return all(self.contains(vector) for vector in other.vectors())

    def __add__(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace.span(self.vectors() + other.vectors(), self.ambient)

    def intersection(self, other: "Subspace") -> "Subspace":
        self._check(other)
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.ambient)
        relations = Matrix.vstack(self.basis, other.basis).left_kernel()
        combos = [vector[:self.dim] for vector in relations.vectors()]
        return Subspace.span([self.basis.apply(combo) for combo in combos], self.ambient)

    def __and__(self, other: "Subspace") -> "Subspace":
        return self.intersection(other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient == other.ambient and self.basis == other.basis

    def __hash__(self):
        return hash((self.ambient, self.basis))

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient={self.ambient})"

    def coordinates(self, vector: Sequence[Scalar]) -> Vector:
        """Coordinates of a member vector in the canonical basis."""
        return [vector[pivot] for pivot in self.pivots]

    def combination(self, coefficients: Sequence[Scalar]) -> Vector:
        return self.basis.apply(coefficients)

    def complement_indices(self) -> List[int]:
        pivots = set(self.pivots)
        return [j for j in range(self.ambient) if j not in pivots]

    def complement(self) -> Matrix:
        """Standard unit vectors spanning a complement."""
        return Matrix([unit_vector(self.ambient, j) for j in self.complement_indices()], self.ambient)

    def projection(self) -> Matrix:
        """Matrix sending a vector to its coordinates modulo self in the complement basis."""
        free = self.complement_indices()
        rows = []
        pivot_row = {pivot: i for i, pivot in enumerate(self.pivots)}
        for j in range(self.ambient):
            if j in pivot_row:
                basis_row = self.basis.row(pivot_row[j])
                rows.append([-basis_row[k] for k in free])
            else:
                rows.append([ONE if k == j else ZERO for k in free])
        return Matrix(rows, len(free))


class CoordinateSystem:
    """Coordinates of vectors with respect to linearly independent rows."""

    def __init__(self, rows: Matrix):
        _, pivots = rows.rref()
        if len(pivots) != rows.rows:
            raise DimensionMismatch("coordinate rows are linearly dependent")
        self.rows = rows
        self._columns = pivots
        self._inverse = rows.submatrix(cols=pivots).inverse()

    @property
    def dim(self) -> int:
        return self.rows.rows

    def coordinates(self, vector: Sequence[Scalar]) -> Vector:
        return self._inverse.apply([vector[j] for j in self._columns])

    def combination(self, coefficients: Sequence[Scalar]) -> Vector:
        return self.rows.apply(coefficients)


class QuotientSpace:
    """space / sub with representatives chosen among the basis vectors of space."""

    def __init__(self, space: Subspace, sub: Subspace):
        if not space.contains_space(sub):
            raise DimensionMismatch("quotient by a subspace that is not contained in the space")
        self.space = space
        self.sub = sub
        stacked = Matrix.vstack(sub.basis, space.basis)
        chosen = [i - sub.dim for i in greedy_independent_rows(stacked) if i >= sub.dim]
        self.representatives = space.basis.submatrix(rows=chosen)
        self._system = CoordinateSystem(Matrix.vstack(self.representatives, sub.basis)) if space.dim else None

    @property
    def dim(self) -> int:
        return self.representatives.rows

    def coordinates(self, vector: Sequence[Scalar]) -> Vector:
        if self._system is None:
            return []
        return self._system.coordinates(vector)[:self.dim]

    def lift(self, coefficients: Sequence[Scalar]) -> Vector:
        return self.representatives.apply(coefficients)


def combine(coefficients: Sequence[Scalar], blocks: Sequence[Matrix]) -> Matrix:
    result = Matrix.zeros(*blocks[0].shape)
    for coefficient, block in zip(coefficients, blocks):
        if coefficient:
            result = result + block.scale(coefficient)
    return result


def _all_invertible(blocks: Sequence[Matrix]) -> bool:
    return all(block.is_invertible() for block in blocks)


def find_invertible_combination(
    candidates: Sequence[Sequence[Matrix]],
    seed: int,
    attempts: int,
    bound: int,
    exhaustive_limit: int,
) -> Optional[List[int]]:
    """
    Search integer coefficients c with every block of sum(c_k * candidates[k]) invertible.

    Each candidate is a tuple of blocks (one per vertex). Seeded random
    coefficients in [-bound, bound] are tried first; if that fails and there
    are at most exhaustive_limit candidates every {-1, 0, 1} combination is
    tried. Returns the coefficients or None.
    """
    if not candidates:
        return None
    block_count = len(candidates[0])
    rng = np.random.default_rng(seed)

    def blocks_for(coefficients: Sequence[int]) -> List[Matrix]:
        return [
            combine([to_scalar(c) for c in coefficients], [candidate[b] for candidate in candidates])
            for b in range(block_count)
        ]

    for _ in range(attempts):
        coefficients = [int(c) for c in rng.integers(-bound, bound + 1, size=len(candidates))]
        if _all_invertible(blocks_for(coefficients)):
            return coefficients

    if len(candidates) <= exhaustive_limit:
        for coefficients in product((-1, 0, 1), repeat=len(candidates)):
            if any(coefficients) and _all_invertible(blocks_for(coefficients)):
                return list(coefficients)
    else:
        logger.debug(f"Isomorphism search gave up after {attempts} attempts on {len(candidates)} candidates")
    return None


def rational_roots(coefficients: Sequence[Scalar]) -> Tuple[List[Scalar], int]:
    """
    Rational roots of a polynomial (leading coefficient first), with multiplicity.

    Also returns the total degree of irreducible factors of degree > 1, which is
    zero exactly when the polynomial splits over QQ.
    """
    x = Symbol("x")
    poly = Poly([QQ.to_sympy(c) for c in coefficients], x, domain="QQ")
    roots: List[Scalar] = []
    unsplit = 0
    for factor, multiplicity in poly.factor_list()[1]:
        if factor.degree() == 1:
            lead, constant = factor.all_coeffs()
            root = QQ.from_sympy(-constant / lead)
            roots.extend([root] * multiplicity)
        else:
            unsplit += factor.degree() * multiplicity
    return sorted(roots), unsplit
