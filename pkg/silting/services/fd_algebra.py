"""
Finite-dimensional algebras given by structure constants

Houses endomorphism algebras B = End(P). The radical comes from the Dickson
trace form, primitive idempotents from splitting B/rad into rational
eigenspaces and lifting. A split basic B is then presented by its Gabriel
quiver (vertices = primitive idempotents, arrows = a complement of
e_i rad^2 e_j in e_i rad e_j) together with a basis of each e_i B made of
products of arrows, so B-modules are quiver representations and the
representation machinery doubles as mod B.
"""

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, List, Optional, Sequence, Tuple

from silting.core.exactlin import (
    ONE,
    ZERO,
    CoordinateSystem,
    Matrix,
    QuotientSpace,
    Scalar,
    Subspace,
    Vector,
    add_vectors,
    is_zero_vector,
    rational_roots,
    scale_vector,
    unit_vector,
)
from silting.core.exceptions import DimensionMismatch, InvariantViolation, SplitFailure
from silting.services.path_algebra import BasisElement, Element
from silting.services.representations import (
    Representation,
    RepresentationCategory,
    projective,
    simple,
)

logger = logging.getLogger(__name__)

LIFT_ITERATIONS = 64
TWO = ONE + ONE
THREE = TWO + ONE


class FDAlgebra:
    """An associative unital algebra over QQ with a fixed basis b_0, ..., b_(n-1)."""

    def __init__(self, products: Sequence[Sequence[Sequence[Scalar]]], unit: Sequence[Scalar], labels=None):
        """products[i][j] holds the coordinates of b_i * b_j."""
        self.dim = len(unit)
        if len(products) != self.dim or any(len(row) != self.dim for row in products):
            raise DimensionMismatch("structure constants do not match the unit vector")
        self._products = [[list(vector) for vector in row] for row in products]
        self.unit = list(unit)
        self.labels = tuple(labels) if labels else tuple(f"b{i}" for i in range(self.dim))

    def __repr__(self) -> str:
        return f"FDAlgebra(dim={self.dim})"

    def product(self, i: int, j: int) -> Vector:
        return list(self._products[i][j])

    def multiply(self, left: Sequence[Scalar], right: Sequence[Scalar]) -> Vector:
        result = [ZERO] * self.dim
        right_support = [(j, c) for j, c in enumerate(right) if c]
        for i, a in enumerate(left):
            if not a:
                continue
            row = self._products[i]
            for j, c in right_support:
                coefficient = a * c
                for k, entry in enumerate(row[j]):
                    if entry:
                        result[k] += coefficient * entry
        return result

    def left_matrix(self, element: Sequence[Scalar]) -> Matrix:
        """Rows b_k -> element * b_k."""
        return Matrix.from_vectors([self.multiply(element, unit_vector(self.dim, k)) for k in range(self.dim)], self.dim)

    def right_matrix(self, element: Sequence[Scalar]) -> Matrix:
        """Rows b_k -> b_k * element."""
        return Matrix.from_vectors([self.multiply(unit_vector(self.dim, k), element) for k in range(self.dim)], self.dim)

    def associativity_defects(self) -> List[Tuple[int, int, int]]:
        defects = []
        basis = [unit_vector(self.dim, i) for i in range(self.dim)]
        for i in range(self.dim):
            for j in range(self.dim):
                left = self.product(i, j)
                for k in range(self.dim):
                    if self.multiply(left, basis[k]) != self.multiply(basis[i], self.product(j, k)):
                        defects.append((i, j, k))
        return defects

    def unit_holds(self) -> bool:
        return all(
            self.multiply(self.unit, unit_vector(self.dim, k)) == unit_vector(self.dim, k)
            and self.multiply(unit_vector(self.dim, k), self.unit) == unit_vector(self.dim, k)
            for k in range(self.dim)
        )

    def span_of_products(self, left: Subspace, right: Subspace) -> Subspace:
        if not left.dim or not right.dim:
            return Subspace.zero(self.dim)
        blocks = [left.basis @ self.right_matrix(y) for y in right.vectors()]
        return Matrix.vstack(*blocks).row_space()

    @cached_property
    def radical(self) -> Subspace:
        return radical(self)

    @cached_property
    def idempotents(self) -> "IdempotentSet":
        return primitive_idempotents(self)

    @cached_property
    def basic(self) -> "BasicAlgebra":
        return BasicAlgebra(self, self.idempotents)


def radical_powers(algebra: FDAlgebra) -> List[Subspace]:
    """rad, rad^2, ... down to (and excluding) the zero ideal."""
    powers = []
    current = algebra.radical
    while current.dim:
        powers.append(current)
        if len(powers) > algebra.dim:
            raise InvariantViolation("the trace-form radical is not nilpotent")
        current = algebra.span_of_products(current, algebra.radical)
    return powers


def quotient_algebra(algebra: FDAlgebra, ideal: Subspace) -> FDAlgebra:
    """B / ideal on the basis of representatives chosen among the standard basis vectors."""
    quotient = QuotientSpace(Subspace.full(algebra.dim), ideal)
    representatives = quotient.representatives.tolist()
    products = [[quotient.coordinates(algebra.multiply(x, y)) for y in representatives] for x in representatives]
    return FDAlgebra(products, quotient.coordinates(algebra.unit))


def loewy_length(algebra: FDAlgebra) -> int:
    return len(radical_powers(algebra)) + 1 if algebra.dim else 0


def radical(algebra: FDAlgebra) -> Subspace:
    """Dickson: x is in the radical iff trace(L_(x y)) = 0 for every basis element y."""
    n = algebra.dim
    traces = [sum((algebra._products[m][k][k] for k in range(n)), ZERO) for m in range(n)]
    gram = Matrix.from_vectors(
        [[sum((c * t for c, t in zip(algebra._products[i][j], traces)), ZERO) for j in range(n)] for i in range(n)],
        n,
    )
    result = gram.left_kernel()
    current, steps = result, 0
    while current.dim:
        steps += 1
        if steps > n:
            raise InvariantViolation("the trace-form radical is not nilpotent")
        current = algebra.span_of_products(current, result)
    logger.debug(f"Radical of an algebra of dimension {n} has dimension {result.dim}")
    return result


@dataclass(frozen=True)
class IdempotentSet:
    idempotents: Tuple[Tuple[Scalar, ...], ...]

    def __len__(self) -> int:
        return len(self.idempotents)

    def __iter__(self):
        return iter(self.idempotents)

    def defects(self, algebra: FDAlgebra) -> List[str]:
        problems = []
        total = [ZERO] * algebra.dim
        for i, e in enumerate(self.idempotents):
            total = add_vectors(total, e)
            for j, f in enumerate(self.idempotents):
                product = algebra.multiply(e, f)
                expected = list(e) if i == j else [ZERO] * algebra.dim
                if product != expected:
                    problems.append(f"e{i} * e{j} is wrong")
            corner = Subspace.span(
                [algebra.multiply(algebra.multiply(e, unit_vector(algebra.dim, k)), e) for k in range(algebra.dim)],
                algebra.dim,
            )
            if (corner & algebra.radical).dim != corner.dim - 1:
                problems.append(f"e{i} B e{i} is not local")
        if total != algebra.unit:
            problems.append("idempotents do not sum to the unit")
        return problems


def _lift_idempotent(algebra: FDAlgebra, element: Vector) -> Vector:
    """Iterate e -> 3e^2 - 2e^3 until e is an idempotent."""
    current = element
    for _ in range(LIFT_ITERATIONS):
        square = algebra.multiply(current, current)
        if square == current:
            return current
        cube = algebra.multiply(square, current)
        current = add_vectors(scale_vector(THREE, square), scale_vector(-TWO, cube))
    raise InvariantViolation("idempotent lifting did not converge")


def _split_semisimple_quotient(algebra: FDAlgebra, quotient: QuotientSpace) -> List[Vector]:
    """Primitive idempotents of B/rad in quotient coordinates, if it splits as QQ x ... x QQ."""
    size = quotient.dim
    representatives = [quotient.representatives.row(i) for i in range(size)]

    def reduce(vector: Vector) -> Vector:
        return quotient.coordinates(vector)

    table = [[reduce(algebra.multiply(x, y)) for y in representatives] for x in representatives]
    for i in range(size):
        for j in range(i + 1, size):
            if table[i][j] != table[j][i]:
                raise SplitFailure("the algebra modulo its radical is not commutative, so it is not basic")

    def product(x: Vector, y: Vector) -> Vector:
        result = [ZERO] * size
        for i, a in enumerate(x):
            if a:
                for j, b in enumerate(y):
                    if b:
                        result = add_vectors(result, scale_vector(a * b, table[i][j]))
        return result

    blocks = [Subspace.full(size)]
    for k in range(size):
        generator = unit_vector(size, k)
        refined = []
        for block in blocks:
            if block.dim == 1:
                refined.append(block)
                continue
            images = [product(vector, generator) for vector in block.vectors()]
            restricted = Matrix.from_vectors([block.coordinates(image) for image in images], block.dim)
            roots, unsplit = rational_roots(restricted.charpoly())
            if unsplit:
                raise SplitFailure(
                    "multiplication on the semisimple quotient has an irrational eigenvalue", block_dimension=block.dim
                )
            for root in sorted(set(roots)):
                shifted = restricted - Matrix.identity(block.dim).scale(root)
                eigen = shifted.left_kernel()
                refined.append(Subspace.span([block.combination(v) for v in eigen.vectors()], size))
        blocks = refined
    idempotents = []
    for block in blocks:
        if block.dim != 1:
            raise SplitFailure("a simple block of the semisimple quotient is not one-dimensional", block.dim)
        vector = block.basis.row(0)
        square = product(vector, vector)
        pivot = block.pivots[0]
        # vector^2 = lambda * vector, so vector / lambda is the idempotent
        idempotents.append(scale_vector(vector[pivot] / square[pivot], vector))
    return idempotents


def primitive_idempotents(algebra: FDAlgebra) -> IdempotentSet:
    """A complete set of primitive orthogonal idempotents, or SplitFailure."""
    rad = algebra.radical
    quotient = QuotientSpace(Subspace.full(algebra.dim), rad)
    residues = _split_semisimple_quotient(algebra, quotient)
    unit = algebra.unit
    accumulated = [ZERO] * algebra.dim
    idempotents = []
    for residue in residues:
        guess = _lift_idempotent(algebra, quotient.lift(residue))
        complement = add_vectors(unit, scale_vector(-ONE, accumulated))
        corner = algebra.multiply(algebra.multiply(complement, guess), complement)
        lifted = _lift_idempotent(algebra, corner)
        idempotents.append(tuple(lifted))
        accumulated = add_vectors(accumulated, lifted)
    result = IdempotentSet(tuple(idempotents))
    if accumulated != unit:
        raise InvariantViolation("lifted idempotents do not sum to the unit")
    logger.info(f"Split algebra of dimension {algebra.dim} into {len(result)} primitive idempotents")
    return result


class BasicAlgebra:
    """The Gabriel quiver of a split basic algebra with a basis of arrow products."""

    relations: Tuple = ()

    def __init__(self, algebra: FDAlgebra, idempotents: IdempotentSet):
        self.algebra = algebra
        self.idempotents = [list(e) for e in idempotents]
        count = len(self.idempotents)
        self.vertex_labels = tuple(str(i + 1) for i in range(count))
        left = [algebra.left_matrix(e) for e in self.idempotents]
        right = [algebra.right_matrix(e) for e in self.idempotents]
        rad = algebra.radical
        rad_square = algebra.span_of_products(rad, rad)

        arrow_ends, arrow_vectors = [], []
        for i in range(count):
            for j in range(count):
                corner = left[i] @ right[j]
                rad_corner = (rad.basis @ corner).row_space() if rad.dim else Subspace.zero(algebra.dim)
                square_corner = (rad_square.basis @ corner).row_space() if rad_square.dim else Subspace.zero(algebra.dim)
                for row in QuotientSpace(rad_corner, square_corner).representatives.tolist():
                    arrow_ends.append((i, j))
                    arrow_vectors.append(row)
        self.arrow_ends = tuple(arrow_ends)
        self.arrow_vectors = tuple(arrow_vectors)
        self.arrow_labels = tuple(f"x{k + 1}" for k in range(len(arrow_ends)))
        self._arrow_matrices = tuple(algebra.right_matrix(vector) for vector in arrow_vectors)

        basis: List[BasisElement] = []
        vectors: List[Vector] = []
        self._systems: List[CoordinateSystem] = []
        self._offsets: List[int] = []
        for i in range(count):
            self._offsets.append(len(basis))
            local = self._path_basis(i)
            for path, target, vector in local:
                label = ".".join(self.arrow_labels[a] for a in path) if path else f"e{i + 1}"
                basis.append(BasisElement(len(basis), i, target, path, label))
                vectors.append(vector)
            expected = left[i].rank()
            if len(local) != expected:
                raise InvariantViolation(f"path basis of e{i + 1}B has {len(local)} elements, expected {expected}")
            self._systems.append(CoordinateSystem(Matrix.from_vectors([v for _, _, v in local], algebra.dim)))
        self.basis = tuple(basis)
        self.vectors = tuple(vectors)
        self._from_vertex = tuple(
            tuple(element.index for element in self.basis if element.source == v) for v in range(count)
        )
        self._actions: Dict[Tuple[int, int], Element] = {}
        logger.info(f"Gabriel quiver has {count} vertices and {len(arrow_ends)} arrows")

    def __repr__(self) -> str:
        return f"BasicAlgebra(vertices={len(self.vertex_labels)}, arrows={len(self.arrow_ends)}, dim={len(self.basis)})"

    def _path_basis(self, vertex: int) -> List[Tuple[Tuple[int, ...], int, Vector]]:
        chosen = [((), vertex, self.idempotents[vertex])]
        span = Subspace.span([self.idempotents[vertex]], self.algebra.dim)
        level = list(chosen)
        while level:
            following = []
            for path, target, vector in level:
                for a, (s, t) in enumerate(self.arrow_ends):
                    if s != target:
                        continue
                    candidate = self._arrow_matrices[a].apply(vector)
                    if is_zero_vector(candidate) or span.contains(candidate):
                        continue
                    span = span + Subspace.span([candidate], self.algebra.dim)
                    entry = (path + (a,), t, candidate)
                    chosen.append(entry)
                    following.append(entry)
            level = following
        return chosen

    def basis_from(self, vertex: int) -> Tuple[int, ...]:
        return self._from_vertex[vertex]

    def arrow_action(self, index: int, arrow: int) -> Element:
        element = self.basis[index]
        if element.target != self.arrow_ends[arrow][0]:
            return {}
        key = (index, arrow)
        if key not in self._actions:
            product = self._arrow_matrices[arrow].apply(self.vectors[index])
            coordinates = self._systems[element.source].coordinates(product)
            offset = self._offsets[element.source]
            self._actions[key] = {offset + k: c for k, c in enumerate(coordinates) if c}
        return dict(self._actions[key])

    @property
    def dim(self) -> int:
        return len(self.basis)


@dataclass(frozen=True, eq=False)
class FDModule:
    """A right module over an FDAlgebra: one action matrix per basis element."""

    algebra: FDAlgebra
    action: Tuple[Matrix, ...]
    label: str = ""

    @property
    def dim(self) -> int:
        return self.action[0].rows if self.action else 0

    def act_by(self, element: Sequence[Scalar]) -> Matrix:
        result = Matrix.zeros(self.dim, self.dim)
        for coefficient, matrix in zip(element, self.action):
            if coefficient:
                result = result + matrix.scale(coefficient)
        return result

    def defects(self) -> List[str]:
        problems = []
        if self.act_by(self.algebra.unit) != Matrix.identity(self.dim):
            problems.append("the unit does not act as the identity")
        for i in range(self.algebra.dim):
            for j in range(self.algebra.dim):
                if self.action[i] @ self.action[j] != self.act_by(self.algebra.product(i, j)):
                    problems.append(f"action of b{i} * b{j} is wrong")
        return problems

    def to_representation(self) -> Representation:
        """The same module as a representation of the Gabriel quiver of its algebra."""
        basic = self.algebra.basic
        spaces = [self.act_by(e).row_space() for e in basic.idempotents]
        if sum(space.dim for space in spaces) != self.dim:
            raise InvariantViolation("vertex spaces of a module do not add up to the module")
        arrows = []
        for a, (s, t) in enumerate(basic.arrow_ends):
            if spaces[s].dim == 0:
                arrows.append(Matrix.zeros(0, spaces[t].dim))
                continue
            images = (spaces[s].basis @ self.act_by(basic.arrow_vectors[a])).tolist()
            arrows.append(Matrix([spaces[t].coordinates(row) for row in images], spaces[t].dim))
        return Representation(basic, tuple(space.dim for space in spaces), tuple(arrows), self.label)


def fd_projective(algebra: FDAlgebra, vertex: int) -> Representation:
    """e_i B as a representation of the Gabriel quiver."""
    return projective(algebra.basic, vertex)


def fd_simples(algebra: FDAlgebra) -> List[Representation]:
    return [simple(algebra.basic, v) for v in range(len(algebra.basic.vertex_labels))]


def fd_module_category_backend(algebra: FDAlgebra, seed: Optional[int] = None) -> RepresentationCategory:
    return RepresentationCategory(algebra.basic, seed=seed)
