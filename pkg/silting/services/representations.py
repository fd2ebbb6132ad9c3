"""
Quiver representations

Right modules over a quiver algebra (a path algebra kQ/I, or the Gabriel
quiver form of a basic algebra) as vertex spaces and arrow matrices.
Vectors are rows: an arrow a: i -> j acts by a dims[i] x dims[j] matrix and
m.a = m @ M_a. A module map has one block per vertex, and "f then g" is the
blockwise product F_v @ G_v.
"""

import logging
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from silting.core.config import settings
from silting.core.exactlin import (
    ONE,
    ZERO,
    Matrix,
    Scalar,
    Subspace,
    Vector,
    find_invertible_combination,
    unit_vector,
)
from silting.core.exceptions import AlgebraMismatch, DimensionMismatch, NonInvariantSubspace
from silting.services.path_algebra import Element, QuiverAlgebra

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class Representation:
    algebra: QuiverAlgebra
    dims: Tuple[int, ...]
    arrows: Tuple[Matrix, ...]
    label: str = ""

    def __post_init__(self):
        if len(self.dims) != len(self.algebra.vertex_labels):
            raise DimensionMismatch(f"{len(self.dims)} vertex dimensions for {len(self.algebra.vertex_labels)} vertices")
        if len(self.arrows) != len(self.algebra.arrow_ends):
            raise DimensionMismatch(f"{len(self.arrows)} arrow matrices for {len(self.algebra.arrow_ends)} arrows")
        for matrix, (source, target) in zip(self.arrows, self.algebra.arrow_ends):
            if matrix.shape != (self.dims[source], self.dims[target]):
                raise DimensionMismatch(
                    f"arrow matrix of shape {matrix.shape}, expected {(self.dims[source], self.dims[target])}"
                )

    @property
    def dim(self) -> int:
        return sum(self.dims)

    def is_zero(self) -> bool:
        return self.dim == 0

    def __repr__(self) -> str:
        name = self.label or "Representation"
        return f"{name}(dims={self.dims})"

    def named(self, label: str) -> "Representation":
        return Representation(self.algebra, self.dims, self.arrows, label)

    def path_matrix(self, source: int, path: Sequence[int]) -> Matrix:
        result = Matrix.identity(self.dims[source])
        for arrow in path:
            result = result @ self.arrows[arrow]
        return result

    def act(self, vector: Sequence[Scalar], path: Sequence[int]) -> Vector:
        result = list(vector)
        for arrow in path:
            result = self.arrows[arrow].apply(result)
        return result

    def relations_hold(self) -> bool:
        for source, target, terms in self.algebra.relations:
            total = Matrix.zeros(self.dims[source], self.dims[target])
            for coefficient, path in terms:
                total = total + self.path_matrix(source, path).scale(coefficient)
            if not total.is_zero():
                return False
        return True


@dataclass(frozen=True, eq=False)
class ModuleMap:
    source: Representation
    target: Representation
    blocks: Tuple[Matrix, ...]

    def __post_init__(self):
        if self.source.algebra is not self.target.algebra:
            raise AlgebraMismatch("module map between modules over different algebras")
        for v, block in enumerate(self.blocks):
            if block.shape != (self.source.dims[v], self.target.dims[v]):
                raise DimensionMismatch(
                    f"block {v} has shape {block.shape}, expected {(self.source.dims[v], self.target.dims[v])}"
                )

    @classmethod
    def zero(cls, source: Representation, target: Representation) -> "ModuleMap":
        return cls(source, target, tuple(Matrix.zeros(s, t) for s, t in zip(source.dims, target.dims)))

    @classmethod
    def identity(cls, module: Representation) -> "ModuleMap":
        return cls(module, module, tuple(Matrix.identity(d) for d in module.dims))

    @classmethod
    def from_flat(cls, source: Representation, target: Representation, vector: Sequence[Scalar]) -> "ModuleMap":
        blocks = []
        offset = 0
        for s, t in zip(source.dims, target.dims):
            blocks.append(Matrix([vector[offset + i * t: offset + (i + 1) * t] for i in range(s)], t))
            offset += s * t
        return cls(source, target, tuple(blocks))

    def flatten(self) -> Vector:
        return [entry for block in self.blocks for row in block.tolist() for entry in row]

    def then(self, other: "ModuleMap") -> "ModuleMap":
        if self.target.dims != other.source.dims:
            raise DimensionMismatch("composing maps whose middle modules differ")
        return ModuleMap(self.source, other.target, tuple(f @ g for f, g in zip(self.blocks, other.blocks)))

    def __add__(self, other: "ModuleMap") -> "ModuleMap":
        return ModuleMap(self.source, self.target, tuple(f + g for f, g in zip(self.blocks, other.blocks)))

    def __sub__(self, other: "ModuleMap") -> "ModuleMap":
        return ModuleMap(self.source, self.target, tuple(f - g for f, g in zip(self.blocks, other.blocks)))

    def scale(self, scalar: Scalar) -> "ModuleMap":
        return ModuleMap(self.source, self.target, tuple(block.scale(scalar) for block in self.blocks))

    def is_zero(self) -> bool:
        return all(block.is_zero() for block in self.blocks)

    def rank(self) -> int:
        return sum(block.rank() for block in self.blocks)

    def is_injective(self) -> bool:
        return self.rank() == self.source.dim

    def is_surjective(self) -> bool:
        return self.rank() == self.target.dim

    def is_isomorphism(self) -> bool:
        return self.source.dims == self.target.dims and all(block.is_invertible() for block in self.blocks)

    def is_natural(self) -> bool:
        for a, (s, t) in enumerate(self.source.algebra.arrow_ends):
            if self.source.arrows[a] @ self.blocks[t] != self.blocks[s] @ self.target.arrows[a]:
                return False
        return True

    def equals(self, other: "ModuleMap") -> bool:
        return self.blocks == other.blocks


@dataclass(eq=False)
class HomSpace:
    """Hom(source, target) as a subspace of the flattened block coordinates."""

    source: Representation
    target: Representation
    space: Subspace

    @property
    def dim(self) -> int:
        return self.space.dim

    @cached_property
    def basis(self) -> Tuple[ModuleMap, ...]:
        return tuple(ModuleMap.from_flat(self.source, self.target, vector) for vector in self.space.vectors())

    def coordinates(self, morphism: ModuleMap) -> Vector:
        return self.space.coordinates(morphism.flatten())

    def combination(self, coefficients: Sequence[Scalar]) -> ModuleMap:
        return ModuleMap.from_flat(self.source, self.target, self.space.combination(coefficients))

    def contains(self, morphism: ModuleMap) -> bool:
        return self.space.contains(morphism.flatten())


@dataclass(frozen=True, eq=False)
class DirectSum:
    module: Representation
    summands: Tuple[Representation, ...]
    inclusions: Tuple[ModuleMap, ...]
    projections: Tuple[ModuleMap, ...]


@dataclass(frozen=True, eq=False)
class Submodule:
    module: Representation
    inclusion: ModuleMap
    spaces: Tuple[Subspace, ...]


@dataclass(frozen=True, eq=False)
class Quotient:
    """module / sub, with the projection and the vertexwise sections picking representatives."""

    module: Representation
    projection: ModuleMap
    sections: Tuple[Matrix, ...]
    spaces: Tuple[Subspace, ...]

    def lift(self, vertex: int, vector: Sequence[Scalar]) -> Vector:
        return self.sections[vertex].apply(vector)

    def descend(self, morphism: ModuleMap) -> ModuleMap:
        """The map out of the quotient induced by a map vanishing on the submodule."""
        if morphism.source.dims != self.projection.source.dims:
            raise DimensionMismatch("descending a map with the wrong source")
        for v, space in enumerate(self.spaces):
            if space.dim and not (space.basis @ morphism.blocks[v]).is_zero():
                raise NonInvariantSubspace("map does not vanish on the submodule")
        return ModuleMap(
            self.module, morphism.target, tuple(section @ block for section, block in zip(self.sections, morphism.blocks))
        )


@dataclass(frozen=True, eq=False)
class Image:
    module: Representation
    inclusion: ModuleMap
    corestriction: ModuleMap


@dataclass(frozen=True, eq=False)
class Cover:
    """A surjection from a direct sum of indecomposable projectives."""

    module: Representation
    surjection: ModuleMap
    vertices: Tuple[int, ...]
    generators: Tuple[Tuple[int, Tuple[Scalar, ...]], ...] = field(default=())


def _check_same_algebra(*modules: Representation):
    algebra = modules[0].algebra
    if any(module.algebra is not algebra for module in modules[1:]):
        raise AlgebraMismatch("modules over different algebras")


def zero_module(algebra: QuiverAlgebra) -> Representation:
    return Representation(
        algebra,
        tuple(0 for _ in algebra.vertex_labels),
        tuple(Matrix.zeros(0, 0) for _ in algebra.arrow_ends),
        "0",
    )


@lru_cache(maxsize=256)
def simple(algebra: QuiverAlgebra, vertex: int) -> Representation:
    dims = tuple(1 if v == vertex else 0 for v in range(len(algebra.vertex_labels)))
    arrows = tuple(Matrix.zeros(dims[s], dims[t]) for s, t in algebra.arrow_ends)
    return Representation(algebra, dims, arrows, f"S{algebra.vertex_labels[vertex]}")


@lru_cache(maxsize=256)
def projective(algebra: QuiverAlgebra, vertex: int) -> Representation:
    """e_v A, with the basis elements starting at v spread over their target vertices."""
    vertex_count = len(algebra.vertex_labels)
    local: Dict[int, int] = {}
    dims = [0] * vertex_count
    for index in algebra.basis_from(vertex):
        target = algebra.basis[index].target
        local[index] = dims[target]
        dims[target] += 1
    rows_by_vertex: List[List[int]] = [[] for _ in range(vertex_count)]
    for index in algebra.basis_from(vertex):
        rows_by_vertex[algebra.basis[index].target].append(index)
    arrows = []
    for a, (s, t) in enumerate(algebra.arrow_ends):
        matrix = [[ZERO] * dims[t] for _ in range(dims[s])]
        for row, index in enumerate(rows_by_vertex[s]):
            for image, coefficient in algebra.arrow_action(index, a).items():
                matrix[row][local[image]] = coefficient
        arrows.append(Matrix._trusted(matrix, dims[s], dims[t]))
    return Representation(algebra, tuple(dims), tuple(arrows), f"P{algebra.vertex_labels[vertex]}")


def regular_module(algebra: QuiverAlgebra) -> DirectSum:
    return direct_sum([projective(algebra, v) for v in range(len(algebra.vertex_labels))])


def direct_sum(modules: Sequence[Representation]) -> DirectSum:
    if not modules:
        raise DimensionMismatch("direct sum of nothing; use zero_module")
    _check_same_algebra(*modules)
    algebra = modules[0].algebra
    vertex_count = len(algebra.vertex_labels)
    dims = tuple(sum(module.dims[v] for module in modules) for v in range(vertex_count))
    arrows = tuple(
        Matrix.block_diagonal(*(module.arrows[a] for module in modules)) for a in range(len(algebra.arrow_ends))
    )
    label = " + ".join(module.label or "M" for module in modules)
    total = Representation(algebra, dims, arrows, label)
    inclusions, projections = [], []
    offsets = [0] * vertex_count
    for module in modules:
        include, project = [], []
        for v in range(vertex_count):
            d = module.dims[v]
            embed = Matrix.hstack(
                Matrix.zeros(d, offsets[v]), Matrix.identity(d), Matrix.zeros(d, dims[v] - offsets[v] - d)
            )
            include.append(embed)
            project.append(embed.transpose())
            offsets[v] += d
        inclusions.append(ModuleMap(module, total, tuple(include)))
        projections.append(ModuleMap(total, module, tuple(project)))
    return DirectSum(total, tuple(modules), tuple(inclusions), tuple(projections))


def direct_sum_of_maps(maps: Sequence[ModuleMap], source: DirectSum, target: DirectSum) -> ModuleMap:
    """The block diagonal map between two direct sums, one map per summand."""
    result = ModuleMap.zero(source.module, target.module)
    for k, morphism in enumerate(maps):
        result = result + source.projections[k].then(morphism).then(target.inclusions[k])
    return result


def submodule(module: Representation, spaces: Sequence[Subspace]) -> Submodule:
    """The submodule with the given vertex spaces; raises NonInvariantSubspace when not closed."""
    for a, (s, t) in enumerate(module.algebra.arrow_ends):
        for vector in spaces[s].vectors():
            if not spaces[t].contains(module.arrows[a].apply(vector)):
                raise NonInvariantSubspace(
                    f"arrow {module.algebra.arrow_labels[a]} leaves the subspace at vertex {module.algebra.vertex_labels[s]}"
                )
    arrows = []
    for a, (s, t) in enumerate(module.algebra.arrow_ends):
        images = spaces[s].basis @ module.arrows[a] if spaces[s].dim else Matrix.zeros(0, module.dims[t])
        arrows.append(Matrix([spaces[t].coordinates(row) for row in images.tolist()], spaces[t].dim))
    sub = Representation(module.algebra, tuple(space.dim for space in spaces), tuple(arrows))
    inclusion = ModuleMap(sub, module, tuple(space.basis for space in spaces))
    return Submodule(sub, inclusion, tuple(spaces))


def quotient(module: Representation, spaces: Sequence[Subspace]) -> Quotient:
    submodule(module, spaces)
    projections = [space.projection() for space in spaces]
    sections = [space.complement() for space in spaces]
    arrows = tuple(
        sections[s] @ module.arrows[a] @ projections[t] for a, (s, t) in enumerate(module.algebra.arrow_ends)
    )
    result = Representation(module.algebra, tuple(p.cols for p in projections), arrows)
    projection = ModuleMap(module, result, tuple(projections))
    return Quotient(result, projection, tuple(sections), tuple(spaces))


def kernel(morphism: ModuleMap) -> Submodule:
    return submodule(morphism.source, [block.left_kernel() for block in morphism.blocks])


def image(morphism: ModuleMap) -> Image:
    spaces = [block.row_space() for block in morphism.blocks]
    sub = submodule(morphism.target, spaces)
    corestriction = ModuleMap(
        morphism.source,
        sub.module,
        tuple(
            Matrix([space.coordinates(row) for row in block.tolist()], space.dim)
            for space, block in zip(spaces, morphism.blocks)
        ),
    )
    return Image(sub.module, sub.inclusion, corestriction)


def cokernel(morphism: ModuleMap) -> Quotient:
    return quotient(morphism.target, [block.row_space() for block in morphism.blocks])


def generated_submodule(module: Representation, generators: Sequence[Tuple[int, Sequence[Scalar]]]) -> Submodule:
    """The smallest submodule containing the given (vertex, vector) pairs."""
    vertex_count = len(module.dims)
    spaces = [
        Subspace.span([vector for v, vector in generators if v == vertex], module.dims[vertex])
        for vertex in range(vertex_count)
    ]
    changed = True
    while changed:
        changed = False
        for a, (s, t) in enumerate(module.algebra.arrow_ends):
            if not spaces[s].dim:
                continue
            images = (spaces[s].basis @ module.arrows[a]).tolist()
            if all(spaces[t].contains(row) for row in images):
                continue
            spaces[t] = spaces[t] + Subspace.span(images, module.dims[t])
            changed = True
    return submodule(module, spaces)


def radical_spaces(module: Representation) -> List[Subspace]:
    spaces = [Subspace.zero(d) for d in module.dims]
    for a, (s, t) in enumerate(module.algebra.arrow_ends):
        if module.dims[s] and module.dims[t]:
            spaces[t] = spaces[t] + module.arrows[a].row_space()
    return spaces


def radical_module(module: Representation) -> Submodule:
    return submodule(module, radical_spaces(module))


def top(module: Representation) -> Quotient:
    return quotient(module, radical_spaces(module))


def radical_layers(module: Representation) -> List[Tuple[int, ...]]:
    """Dimension vectors of rad^k M / rad^(k+1) M for k = 0, 1, ..."""
    layers = []
    current = [Subspace.full(d) for d in module.dims]
    while any(space.dim for space in current):
        following = [Subspace.zero(d) for d in module.dims]
        for a, (s, t) in enumerate(module.algebra.arrow_ends):
            if current[s].dim and module.dims[t]:
                following[t] = following[t] + (current[s].basis @ module.arrows[a]).row_space()
        layers.append(tuple(c.dim - f.dim for c, f in zip(current, following)))
        current = following
    return layers


def hom_modules(source: Representation, target: Representation) -> HomSpace:
    """All module maps source -> target, solving the naturality square of every arrow."""
    _check_same_algebra(source, target)
    offsets = []
    unknowns = 0
    for s, t in zip(source.dims, target.dims):
        offsets.append(unknowns)
        unknowns += s * t

    def unknown(vertex: int, row: int, col: int) -> int:
        return offsets[vertex] + row * target.dims[vertex] + col

    # Row (p, q) of arrow a: i -> j reads (M_a F_j - F_i N_a)[p, q] = 0.
    equations: Dict[int, Dict[int, Scalar]] = {}
    count = 0
    for a, (i, j) in enumerate(source.algebra.arrow_ends):
        left = source.arrows[a]
        right = target.arrows[a]
        for p in range(source.dims[i]):
            for q in range(target.dims[j]):
                row: Dict[int, Scalar] = {}
                for k in range(source.dims[j]):
                    c = left[p, k]
                    if c:
                        key = unknown(j, k, q)
                        row[key] = row.get(key, ZERO) + c
                for k in range(target.dims[i]):
                    c = right[k, q]
                    if c:
                        key = unknown(i, p, k)
                        row[key] = row.get(key, ZERO) - c
                row = {key: value for key, value in row.items() if value}
                if row:
                    equations[count] = row
                    count += 1
    return HomSpace(source, target, _solution_space(equations, count, unknowns))


def _solution_space(equations: Dict[int, Dict[int, Scalar]], rows: int, unknowns: int) -> Subspace:
    if unknowns == 0:
        return Subspace.zero(0)
    if rows == 0:
        return Subspace.full(unknowns)
    reduced, pivots = DomainMatrix(equations, (rows, unknowns), QQ).rref()
    reduced_rows = reduced.to_list()
    pivot_set = set(pivots)
    vectors = []
    for free in range(unknowns):
        if free in pivot_set:
            continue
        vector = unit_vector(unknowns, free)
        for i, pivot in enumerate(pivots):
            vector[pivot] = -reduced_rows[i][free]
        vectors.append(vector)
    return Subspace.span(vectors, unknowns)


def map_from_projective(vertex: int, target: Representation, vector: Sequence[Scalar]) -> ModuleMap:
    """The map P_vertex -> target sending the idempotent e_vertex to vector (in target at vertex)."""
    algebra = target.algebra
    source = projective(algebra, vertex)
    rows: List[List[Vector]] = [[] for _ in algebra.vertex_labels]
    for index in algebra.basis_from(vertex):
        element = algebra.basis[index]
        rows[element.target].append(target.act(vector, element.path))
    blocks = tuple(Matrix(rows[w], target.dims[w]) for w in range(len(algebra.vertex_labels)))
    return ModuleMap(source, target, blocks)


def map_from_element(algebra: QuiverAlgebra, element: Element, source: int, target: int) -> ModuleMap:
    """Left multiplication P_source -> P_target by an element of e_target A e_source."""
    codomain = projective(algebra, target)
    positions = [i for i in algebra.basis_from(target) if algebra.basis[i].target == source]
    vector = [ZERO] * codomain.dims[source]
    for index, coefficient in element.items():
        basis_element = algebra.basis[index]
        if (basis_element.source, basis_element.target) != (target, source):
            raise AlgebraMismatch(
                f"{basis_element.label} does not run from {algebra.vertex_labels[target]} "
                f"to {algebra.vertex_labels[source]}"
            )
        vector[positions.index(index)] += coefficient
    return map_from_projective(source, codomain, vector)


def map_between_projectives(
    algebra: QuiverAlgebra,
    sources: Sequence[int],
    targets: Sequence[int],
    entries: Sequence[Sequence[Element]],
) -> Tuple[ModuleMap, DirectSum, DirectSum]:
    """The map sum P_sources -> sum P_targets whose (i, j) component multiplies by entries[i][j]."""
    domain = direct_sum([projective(algebra, v) for v in sources]) if sources else None
    codomain = direct_sum([projective(algebra, v) for v in targets]) if targets else None
    if domain is None or codomain is None:
        source_module = domain.module if domain else zero_module(algebra)
        target_module = codomain.module if codomain else zero_module(algebra)
        return ModuleMap.zero(source_module, target_module), domain, codomain
    result = ModuleMap.zero(domain.module, codomain.module)
    for i, u in enumerate(sources):
        for j, v in enumerate(targets):
            if entries[i][j]:
                component = map_from_element(algebra, entries[i][j], u, v)
                result = result + domain.projections[i].then(component).then(codomain.inclusions[j])
    return result, domain, codomain


def _cover_from_generators(module: Representation, generators: List[Tuple[int, Vector]]) -> Cover:
    if not generators:
        zero = zero_module(module.algebra)
        return Cover(zero, ModuleMap.zero(zero, module), ())
    total = direct_sum([projective(module.algebra, v) for v, _ in generators])
    surjection = ModuleMap.zero(total.module, module)
    for k, (v, vector) in enumerate(generators):
        surjection = surjection + total.projections[k].then(map_from_projective(v, module, vector))
    frozen = tuple((v, tuple(vector)) for v, vector in generators)
    return Cover(total.module, surjection, tuple(v for v, _ in generators), frozen)


def projective_cover(module: Representation) -> Cover:
    """Minimal projective cover: one P_v for each basis vector of top(module) at v."""
    generators = []
    for v, space in enumerate(radical_spaces(module)):
        for index in space.complement_indices():
            generators.append((v, unit_vector(module.dims[v], index)))
    return _cover_from_generators(module, generators)


def free_cover(module: Representation) -> Cover:
    """A usually non-minimal cover with one P_v for every basis vector of the module at v."""
    generators = [(v, unit_vector(d, i)) for v, d in enumerate(module.dims) for i in range(d)]
    return _cover_from_generators(module, generators)


def is_projective(module: Representation) -> bool:
    return projective_cover(module).module.dim == module.dim


def trace_submodule(generator: Representation, module: Representation) -> Submodule:
    """Sum of the images of all maps generator -> module."""
    hom = hom_modules(generator, module)
    spaces = [Subspace.zero(d) for d in module.dims]
    for morphism in hom.basis:
        for v, block in enumerate(morphism.blocks):
            if not block.is_zero():
                spaces[v] = spaces[v] + block.row_space()
    return submodule(module, spaces)


def isomorphism(
    source: Representation,
    target: Representation,
    seed: Optional[int] = None,
    attempts: Optional[int] = None,
    exhaustive_limit: Optional[int] = None,
) -> Optional[ModuleMap]:
    """An invertible map source -> target found by seeded search, or None."""
    _check_same_algebra(source, target)
    if source.dims != target.dims:
        return None
    if source.dim == 0:
        return ModuleMap.zero(source, target)
    hom = hom_modules(source, target)
    if hom.dim == 0:
        return None
    coefficients = find_invertible_combination(
        [morphism.blocks for morphism in hom.basis],
        seed=settings.ISO_SEED if seed is None else seed,
        attempts=settings.ISO_ATTEMPTS if attempts is None else attempts,
        bound=settings.ISO_COEFFICIENT_BOUND,
        exhaustive_limit=settings.ISO_EXHAUSTIVE_LIMIT if exhaustive_limit is None else exhaustive_limit,
    )
    if coefficients is None:
        return None
    return hom.combination([QQ(c) for c in coefficients])


def iso_test(source: Representation, target: Representation, seed: Optional[int] = None) -> bool:
    return isomorphism(source, target, seed=seed) is not None


class RepresentationCategory:
    """mod A for a quiver algebra A, packaged for the homological routines."""

    def __init__(self, algebra: QuiverAlgebra, seed: Optional[int] = None):
        self.algebra = algebra
        self.seed = settings.ISO_SEED if seed is None else seed

    def __repr__(self) -> str:
        return f"RepresentationCategory({self.algebra!r})"

    @property
    def vertex_count(self) -> int:
        return len(self.algebra.vertex_labels)

    def simples(self) -> List[Representation]:
        return [simple(self.algebra, v) for v in range(self.vertex_count)]

    def simple(self, vertex: int) -> Representation:
        return simple(self.algebra, vertex)

    def projective(self, vertex: int) -> Representation:
        return projective(self.algebra, vertex)

    def zero(self) -> Representation:
        return zero_module(self.algebra)

    def hom(self, source: Representation, target: Representation) -> HomSpace:
        return hom_modules(source, target)

    def kernel(self, morphism: ModuleMap) -> Submodule:
        return kernel(morphism)

    def cokernel(self, morphism: ModuleMap) -> Quotient:
        return cokernel(morphism)

    def radical(self, module: Representation) -> Submodule:
        return radical_module(module)

    def top(self, module: Representation) -> Quotient:
        return top(module)

    def projective_cover(self, module: Representation) -> Cover:
        return projective_cover(module)

    def free_cover(self, module: Representation) -> Cover:
        return free_cover(module)

    def is_projective(self, module: Representation) -> bool:
        return is_projective(module)

    def isomorphism(self, source: Representation, target: Representation) -> Optional[ModuleMap]:
        return isomorphism(source, target, seed=self.seed)

    def iso_test(self, source: Representation, target: Representation) -> bool:
        return self.isomorphism(source, target) is not None
