"""
Path algebras kQ/I

The basis of kQ/I is built degree by degree: paths up to length L are taken
modulo the span of every u.r.v (r a relation, u and v paths) truncated at
length L. The first L at which every path of length L lies in that span is
the nilpotency degree N of the arrow ideal, and the basis is chosen greedily
among the paths of length < N in (length, lexicographic) order.
"""

import logging
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Protocol, Sequence, Tuple

from silting.core.config import settings
from silting.core.exactlin import ONE, ZERO, Matrix, Scalar, Subspace, greedy_independent_rows, unit_vector
from silting.core.exceptions import AlgebraMismatch, NotFiniteDimensional
from silting.services.quiver_dsl import AlgebraPresentation

logger = logging.getLogger(__name__)

# A path is identified by its source vertex and its arrow indices; trivial
# paths have no arrows.
PathKey = Tuple[int, Tuple[int, ...]]
Element = Dict[int, Scalar]
IndexedRelation = Tuple[int, int, Tuple[Tuple[Scalar, Tuple[int, ...]], ...]]


@dataclass(frozen=True)
class BasisElement:
    """A basis vector of a quiver algebra, represented by a path from source to target."""

    index: int
    source: int
    target: int
    path: Tuple[int, ...]
    label: str


class QuiverAlgebra(Protocol):
    """What representations need from an algebra given by a quiver and a path basis."""

    vertex_labels: Tuple[str, ...]
    arrow_labels: Tuple[str, ...]
    arrow_ends: Tuple[Tuple[int, int], ...]
    basis: Tuple[BasisElement, ...]
    relations: Tuple[IndexedRelation, ...]

    def basis_from(self, vertex: int) -> Tuple[int, ...]:
        ...

    def arrow_action(self, index: int, arrow: int) -> Element:
        ...


@dataclass(frozen=True)
class AdmissibilityReport:
    nilpotency_degree: int
    relations_in_square: bool
    violations: Tuple[str, ...]

    @property
    def admissible(self) -> bool:
        return not self.violations


def add_into(target: Element, source: Element, coefficient: Scalar) -> Element:
    for index, value in source.items():
        total = target.get(index, ZERO) + coefficient * value
        if total:
            target[index] = total
        else:
            target.pop(index, None)
    return target


class PathAlgebra:
    """A finite-dimensional quotient kQ/I with a basis of path residues."""

    def __init__(
        self,
        presentation: AlgebraPresentation,
        basis: Sequence[BasisElement],
        normal_forms: Dict[PathKey, Element],
        nilpotency_degree: int,
    ):
        self.presentation = presentation
        self.vertex_labels = presentation.vertices
        self.arrow_labels = tuple(arrow.label for arrow in presentation.arrows)
        self.arrow_ends = tuple(
            (presentation.vertex_index(arrow.source), presentation.vertex_index(arrow.target))
            for arrow in presentation.arrows
        )
        self.basis = tuple(basis)
        self.nilpotency_degree = nilpotency_degree
        self.relations: Tuple[IndexedRelation, ...] = tuple(_indexed_relations(presentation))
        self._normal_forms = normal_forms
        self._from_vertex = tuple(
            tuple(element.index for element in self.basis if element.source == v)
            for v in range(len(self.vertex_labels))
        )
        self._products: Dict[Tuple[int, int], Element] = {}
        for left in self.basis:
            for right in self.basis:
                if left.target == right.source:
                    self._products[(left.index, right.index)] = self.normal_form(left.source, left.path + right.path)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def vertex_count(self) -> int:
        return len(self.vertex_labels)

    def __repr__(self) -> str:
        return f"PathAlgebra(vertices={self.vertex_count}, arrows={len(self.arrow_labels)}, dim={self.dim})"

    def idempotent(self, vertex: int) -> int:
        return self._from_vertex[vertex][0]

    def basis_from(self, vertex: int) -> Tuple[int, ...]:
        return self._from_vertex[vertex]

    def basis_between(self, source: int, target: int) -> Tuple[int, ...]:
        return tuple(i for i in self._from_vertex[source] if self.basis[i].target == target)

    def normal_form(self, source: int, path: Tuple[int, ...]) -> Element:
        """The path expanded in the basis (empty when the path vanishes)."""
        if len(path) >= self.nilpotency_degree:
            return {}
        return dict(self._normal_forms.get((source, path), {}))

    def product(self, left: int, right: int) -> Element:
        return dict(self._products.get((left, right), {}))

    def multiply(self, left: Element, right: Element) -> Element:
        result: Element = {}
        for i, a in left.items():
            for j, b in right.items():
                product = self._products.get((i, j))
                if product:
                    add_into(result, product, a * b)
        return result

    def arrow_action(self, index: int, arrow: int) -> Element:
        element = self.basis[index]
        if element.target != self.arrow_ends[arrow][0]:
            return {}
        return self.normal_form(element.source, element.path + (arrow,))

    def path_key(self, labels: Sequence[str], vertex: Optional[str] = None) -> PathKey:
        """Translate arrow labels, or a vertex label for a trivial path, into a path key."""
        if not labels:
            if vertex is None:
                raise AlgebraMismatch("a trivial path needs its vertex")
            return self.presentation.vertex_index(vertex), ()
        arrows = tuple(self.presentation.arrow_index(label) for label in labels)
        for first, second in zip(arrows, arrows[1:]):
            if self.arrow_ends[first][1] != self.arrow_ends[second][0]:
                raise AlgebraMismatch(f"path {'.'.join(labels)} is not composable")
        return self.arrow_ends[arrows[0]][0], arrows

    def element(self, terms: Iterable[Tuple[Scalar, PathKey]]) -> Element:
        result: Element = {}
        for coefficient, (source, path) in terms:
            add_into(result, self.normal_form(source, path), coefficient)
        return result

    def element_ends(self, element: Element) -> Optional[Tuple[int, int]]:
        """Common (source, target) of the basis elements in the support, if there is one."""
        ends = {(self.basis[i].source, self.basis[i].target) for i in element}
        return ends.pop() if len(ends) == 1 else None

    def dimension_by_vertex_pair(self) -> Dict[Tuple[str, str], int]:
        counts: Dict[Tuple[str, str], int] = {}
        for element in self.basis:
            key = (self.vertex_labels[element.source], self.vertex_labels[element.target])
            counts[key] = counts.get(key, 0) + 1
        return counts

    def associativity_defects(self) -> List[Tuple[int, int, int]]:
        defects = []
        for i in range(self.dim):
            for j in range(self.dim):
                left = self.product(i, j)
                for k in range(self.dim):
                    if self.multiply(left, {k: ONE}) != self.multiply({i: ONE}, self.product(j, k)):
                        defects.append((i, j, k))
        return defects


def path_label(presentation: AlgebraPresentation, source: int, path: Tuple[int, ...]) -> str:
    if not path:
        return f"e{presentation.vertices[source]}"
    return ".".join(presentation.arrows[a].label for a in path)


def _indexed_relations(presentation: AlgebraPresentation) -> List[IndexedRelation]:
    relations = []
    for relation in presentation.relations:
        terms = tuple((c, tuple(presentation.arrow_index(label) for label in path)) for c, path in relation.terms)
        source, target = presentation.path_ends(relation.terms[0][1])
        relations.append((presentation.vertex_index(source), presentation.vertex_index(target), terms))
    return relations


class _PathEnumeration:
    """Paths of a quiver grouped by length, in lexicographic order within each length."""

    def __init__(self, presentation: AlgebraPresentation, path_limit: int):
        self.presentation = presentation
        self.path_limit = path_limit
        vertex_count = len(presentation.vertices)
        self.arrow_ends = [
            (presentation.vertex_index(a.source), presentation.vertex_index(a.target)) for a in presentation.arrows
        ]
        self.outgoing = [[a for a, (s, _) in enumerate(self.arrow_ends) if s == v] for v in range(vertex_count)]
        self.levels: List[List[PathKey]] = [[(v, ()) for v in range(vertex_count)]]
        self.index: Dict[PathKey, int] = {key: i for i, key in enumerate(self.levels[0])}

    def target(self, key: PathKey) -> int:
        source, path = key
        return self.arrow_ends[path[-1]][1] if path else source

    def extend(self):
        level = [
            (source, path + (arrow,))
            for source, path in self.levels[-1]
            for arrow in self.outgoing[self.target((source, path))]
        ]
        if len(self.index) + len(level) > self.path_limit:
            raise NotFiniteDimensional(
                f"more than {self.path_limit} paths of length <= {len(self.levels)}; "
                "the relations do not cut the algebra down"
            )
        for key in level:
            self.index[key] = len(self.index)
        self.levels.append(level)

    def paths_up_to(self, length: int) -> List[PathKey]:
        return [key for level in self.levels[: length + 1] for key in level]

    def ideal_span(self, relations: Sequence[IndexedRelation], length: int, exact: bool = False) -> Subspace:
        """Span of all u.r.v truncated to paths of length <= length.

        With exact set, products with a term longer than length are skipped
        instead of truncated, so the span lies inside the ideal itself.
        """
        size = sum(len(level) for level in self.levels[: length + 1])
        generators = []
        for source, target, terms in relations:
            shortest = min(len(path) for _, path in terms)
            if shortest > length:
                continue
            for u_source, u_path in self.paths_up_to(length - shortest):
                if self.target((u_source, u_path)) != source:
                    continue
                for v_source, v_path in self.paths_up_to(length - shortest - len(u_path)):
                    if v_source != target:
                        continue
                    if exact and len(u_path) + max(len(path) for _, path in terms) + len(v_path) > length:
                        continue
                    vector = [ZERO] * size
                    for coefficient, path in terms:
                        word = u_path + path + v_path
                        if len(word) <= length:
                            vector[self.index[(u_source, word)]] += coefficient
                    if any(vector):
                        generators.append(vector)
        return Subspace.span(generators, size)


def build_algebra(
    presentation: AlgebraPresentation,
    length_cap: Optional[int] = None,
    path_limit: Optional[int] = None,
) -> PathAlgebra:
    """Construct kQ/I; raises NotFiniteDimensional when no degree up to length_cap closes it."""
    length_cap = settings.LENGTH_CAP if length_cap is None else length_cap
    path_limit = settings.PATH_LIMIT if path_limit is None else path_limit
    paths = _PathEnumeration(presentation, path_limit)
    relations = _indexed_relations(presentation)

    previous_ideal = Subspace.zero(len(paths.levels[0]))
    nilpotency = None
    for length in range(1, length_cap + 1):
        paths.extend()
        ideal = paths.ideal_span(relations, length)
        if all(ideal.contains(unit_vector(ideal.ambient, paths.index[key])) for key in paths.levels[length]):
            nilpotency = length
            break
        previous_ideal = ideal
    if nilpotency is None:
        raise NotFiniteDimensional(f"paths of length {length_cap} survive the relations (length cap reached)")

    candidates = paths.paths_up_to(nilpotency - 1)
    size = len(candidates)
    stacked = Matrix.vstack(previous_ideal.basis, Matrix.identity(size))
    chosen = [i - previous_ideal.dim for i in greedy_independent_rows(stacked) if i >= previous_ideal.dim]
    change_of_basis = Matrix.vstack(Matrix.identity(size).submatrix(rows=chosen), previous_ideal.basis)
    inverse = change_of_basis.inverse()

    normal_forms: Dict[PathKey, Element] = {}
    for position, key in enumerate(candidates):
        row = inverse.row(position)[: len(chosen)]
        normal_forms[key] = {i: c for i, c in enumerate(row) if c}

    basis = []
    for index, position in enumerate(chosen):
        source, path = candidates[position]
        target = paths.target((source, path))
        basis.append(BasisElement(index, source, target, path, path_label(presentation, source, path)))

    algebra = PathAlgebra(presentation, basis, normal_forms, nilpotency)
    logger.info(f"Built path algebra of dimension {algebra.dim} (nilpotency degree {nilpotency})")
    return algebra


def admissibility_report(algebra: PathAlgebra) -> AdmissibilityReport:
    violations = []
    in_square = all(len(path) >= 2 for _, _, terms in algebra.relations for _, path in terms)
    if not in_square:
        violations.append("a relation has a term outside the square of the arrow ideal")
    degree = algebra.nilpotency_degree
    if degree > 1 and not any(len(element.path) == degree - 1 for element in algebra.basis):
        violations.append(f"no nonzero path of length {degree - 1}")
    if any(len(element.path) >= degree for element in algebra.basis):
        violations.append(f"a basis path has length >= {degree}")
    spread = max(
        (max(len(path) for _, path in terms) - min(len(path) for _, path in terms) for _, _, terms in algebra.relations),
        default=0,
    )
    if spread and not _power_in_ideal(algebra, degree, degree + spread):
        violations.append(f"paths of length {degree} are not shown to lie in the ideal of mixed-length relations")
    return AdmissibilityReport(degree, in_square, tuple(violations))


def _power_in_ideal(algebra: PathAlgebra, degree: int, window: int) -> bool:
    """Whether every path of length degree is a combination of exact u.r.v of length <= window.

    The truncated build drops the long terms of a relation, which can close off
    a non-admissible ideal such as (x.x - x.x.x) at a spurious degree.
    """
    paths = _PathEnumeration(algebra.presentation, settings.PATH_LIMIT)
    try:
        for _ in range(window):
            paths.extend()
    except NotFiniteDimensional:
        logger.warning(f"Too many paths to confirm that paths of length {degree} lie in the ideal")
        return False
    span = paths.ideal_span(algebra.relations, window, exact=True)
    return all(span.contains(unit_vector(span.ambient, paths.index[key])) for key in paths.levels[degree])
