"""
Two-term complexes X^-1 -> X^0 of right A-modules

Hom in the homotopy category is computed degreewise: for two-term X, Y

    shift  0: pairs (f^-1, f^0) with d_X f^0 = f^-1 d_Y, modulo (d_X h, h d_Y) for h: X^0 -> Y^-1
    shift  1: Hom(X^-1, Y^0) modulo d_X Hom(X^0, Y^0) + Hom(X^-1, Y^-1) d_Y
    shift -1: maps g: X^0 -> Y^-1 with d_X g = 0 and g d_Y = 0

(products read left to right, "first then second"). When X has projective
terms these are the derived Hom spaces Hom_D(X, Y[shift]) for any Y.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from functools import cached_property, lru_cache
from typing import List, Optional, Sequence, Tuple

from silting.core.exactlin import Matrix, QuotientSpace, Scalar, Subspace, Vector
from silting.core.exceptions import AlgebraMismatch, InvariantViolation, NonProjectiveTerms, SplitFailure
from silting.services.fd_algebra import FDAlgebra, FDModule
from silting.services.representations import (
    HomSpace,
    ModuleMap,
    Representation,
    Submodule,
    cokernel,
    direct_sum as direct_sum_of_modules,
    direct_sum_of_maps,
    hom_modules,
    is_projective,
    kernel,
    projective_cover,
    quotient,
    trace_submodule,
    zero_module,
)

logger = logging.getLogger(__name__)

_hom = lru_cache(maxsize=2048)(hom_modules)


class TwoTermComplex:
    """A module map X^-1 -> X^0 viewed as a complex in degrees -1 and 0."""

    def __init__(self, differential: ModuleMap, label: str = ""):
        self.differential = differential
        self.minus = differential.source
        self.zero = differential.target
        self.label = label
        self.parts: Tuple["TwoTermComplex", ...] = ()
        self.inclusions: Tuple["ChainMap", ...] = ()
        self.projections: Tuple["ChainMap", ...] = ()

    def __repr__(self) -> str:
        return f"TwoTermComplex({self.label or '?'}: {self.minus.dims} -> {self.zero.dims})"

    @property
    def algebra(self):
        return self.minus.algebra

    @property
    def summands(self) -> Tuple["TwoTermComplex", ...]:
        return self.parts or (self,)

    def is_zero(self) -> bool:
        return self.minus.dim == 0 and self.zero.dim == 0

    @cached_property
    def terms_projective(self) -> bool:
        return is_projective(self.minus) and is_projective(self.zero)

    def require_projective_terms(self):
        if not self.terms_projective:
            raise NonProjectiveTerms(f"{self.label or 'complex'} does not have projective terms")

    def identity(self) -> "ChainMap":
        return ChainMap(self, self, 0, (ModuleMap.identity(self.minus), ModuleMap.identity(self.zero)))

    @cached_property
    def endomorphisms(self) -> "ChainHomClass":
        return hom_homotopy(self, self, 0)

    @cached_property
    def end_algebra(self) -> FDAlgebra:
        return end_algebra(self)


@dataclass(frozen=True, eq=False)
class ChainMap:
    """A chain map source -> target[shift]; components as listed in the module docstring."""

    source: TwoTermComplex
    target: TwoTermComplex
    shift: int
    components: Tuple[ModuleMap, ...]

    def then(self, other: "ChainMap") -> "ChainMap":
        if self.shift != 0 or other.shift != 0:
            raise ValueError("only degree-preserving chain maps compose")
        return ChainMap(
            self.source,
            other.target,
            0,
            tuple(f.then(g) for f, g in zip(self.components, other.components)),
        )

    def is_chain_map(self) -> bool:
        d_source = self.source.differential
        d_target = self.target.differential
        if self.shift == 0:
            minus, zero = self.components
            return d_source.then(zero).equals(minus.then(d_target))
        if self.shift == -1:
            (component,) = self.components
            return d_source.then(component).is_zero() and component.then(d_target).is_zero()
        return True


@dataclass(eq=False)
class ChainHomClass:
    """Chain maps source -> target[shift] modulo null-homotopic ones."""

    source: TwoTermComplex
    target: TwoTermComplex
    shift: int
    spaces: Tuple[HomSpace, ...]
    cycles: Subspace
    boundaries: Subspace

    @cached_property
    def quotient(self) -> QuotientSpace:
        return QuotientSpace(self.cycles, self.boundaries)

    @property
    def dim(self) -> int:
        return self.cycles.dim - self.boundaries.dim

    def chain_map(self, coefficients: Sequence[Scalar]) -> ChainMap:
        """The chain map with the given coordinates in the component Hom bases."""
        components = []
        offset = 0
        for space in self.spaces:
            components.append(space.combination(coefficients[offset: offset + space.dim]))
            offset += space.dim
        return ChainMap(self.source, self.target, self.shift, tuple(components))

    @cached_property
    def basis(self) -> Tuple[ChainMap, ...]:
        return tuple(self.chain_map(row) for row in self.quotient.representatives.tolist())

    def flat_coordinates(self, morphism: ChainMap) -> Vector:
        return [c for space, component in zip(self.spaces, morphism.components) for c in space.coordinates(component)]

    def coordinates(self, morphism: ChainMap) -> Vector:
        return self.quotient.coordinates(self.flat_coordinates(morphism))

    def is_null_homotopic(self, morphism: ChainMap) -> bool:
        return self.boundaries.contains(self.flat_coordinates(morphism))


def _coordinate_rows(space: HomSpace, maps: Sequence[ModuleMap]) -> List[Vector]:
    return [space.coordinates(morphism) for morphism in maps]


def _zero_class(source: TwoTermComplex, target: TwoTermComplex, shift: int) -> ChainHomClass:
    return ChainHomClass(source, target, shift, (), Subspace.zero(0), Subspace.zero(0))


def hom_homotopy(source: TwoTermComplex, target: TwoTermComplex, shift: int) -> ChainHomClass:
    """Hom(source, target[shift]) in the homotopy category."""
    if source.algebra is not target.algebra:
        raise AlgebraMismatch("complexes over different algebras")
    d_x, d_y = source.differential, target.differential
    if shift == 0:
        minus = _hom(source.minus, target.minus)
        zero = _hom(source.zero, target.zero)
        mixed = _hom(source.minus, target.zero)
        size = minus.dim + zero.dim
        # A pair (f^-1, f^0) is a chain map iff d_X f^0 - f^-1 d_Y = 0 in Hom(X^-1, Y^0).
        rows = [[-c for c in mixed.coordinates(f.then(d_y))] for f in minus.basis]
        rows += [mixed.coordinates(d_x.then(f)) for f in zero.basis]
        cycles = _left_kernel(rows, size, mixed.dim)
        homotopies = _hom(source.zero, target.minus)
        boundary_rows = [
            minus.coordinates(d_x.then(h)) + zero.coordinates(h.then(d_y)) for h in homotopies.basis
        ]
        boundaries = Subspace.span(boundary_rows, size)
        return ChainHomClass(source, target, 0, (minus, zero), cycles, boundaries)
    if shift == 1:
        mixed = _hom(source.minus, target.zero)
        boundary_rows = _coordinate_rows(mixed, [d_x.then(h) for h in _hom(source.zero, target.zero).basis])
        boundary_rows += _coordinate_rows(mixed, [h.then(d_y) for h in _hom(source.minus, target.minus).basis])
        return ChainHomClass(
            source, target, 1, (mixed,), Subspace.full(mixed.dim), Subspace.span(boundary_rows, mixed.dim)
        )
    if shift == -1:
        backwards = _hom(source.zero, target.minus)
        rows = [d_x.then(g).flatten() + g.then(d_y).flatten() for g in backwards.basis]
        width = len(rows[0]) if rows else 0
        cycles = _left_kernel(rows, backwards.dim, width)
        return ChainHomClass(source, target, -1, (backwards,), cycles, Subspace.zero(backwards.dim))
    return _zero_class(source, target, shift)


def _left_kernel(rows: List[Vector], size: int, width: int) -> Subspace:
    if size == 0:
        return Subspace.zero(0)
    return Matrix(rows, width).left_kernel()


def stalk0(module: Representation, label: str = "") -> TwoTermComplex:
    """module concentrated in degree 0."""
    zero = zero_module(module.algebra)
    return TwoTermComplex(ModuleMap.zero(zero, module), label or module.label)


def stalk1(module: Representation, label: str = "") -> TwoTermComplex:
    """module concentrated in degree -1."""
    zero = zero_module(module.algebra)
    return TwoTermComplex(ModuleMap.zero(module, zero), label or f"{module.label}[1]")


def from_map(differential: ModuleMap, label: str = "") -> TwoTermComplex:
    return TwoTermComplex(differential, label)


def direct_sum(complexes: Sequence[TwoTermComplex], label: str = "") -> TwoTermComplex:
    if not complexes:
        raise ValueError("direct sum of no complexes")
    minus = direct_sum_of_modules([c.minus for c in complexes])
    zero = direct_sum_of_modules([c.zero for c in complexes])
    differential = direct_sum_of_maps([c.differential for c in complexes], minus, zero)
    result = TwoTermComplex(differential, label or " + ".join(c.label or "?" for c in complexes))
    result.parts = tuple(complexes)
    result.inclusions = tuple(
        ChainMap(c, result, 0, (minus.inclusions[k], zero.inclusions[k])) for k, c in enumerate(complexes)
    )
    result.projections = tuple(
        ChainMap(result, c, 0, (minus.projections[k], zero.projections[k])) for k, c in enumerate(complexes)
    )
    return result


def projective_presentation(module: Representation, label: str = "") -> TwoTermComplex:
    """Minimal presentation cover(ker) -> cover(module)."""
    cover = projective_cover(module)
    syzygy = kernel(cover.surjection)
    second = projective_cover(syzygy.module)
    differential = second.surjection.then(syzygy.inclusion)
    return TwoTermComplex(differential, label or f"p({module.label})")


def homology(complex_: TwoTermComplex, degree: int) -> Representation:
    if degree == -1:
        return kernel(complex_.differential).module
    if degree == 0:
        return cokernel(complex_.differential).module
    return zero_module(complex_.algebra)


def is_presilting(complex_: TwoTermComplex) -> bool:
    complex_.require_projective_terms()
    return hom_homotopy(complex_, complex_, 1).dim == 0


def is_tilting(complex_: TwoTermComplex) -> bool:
    return is_presilting(complex_) and hom_homotopy(complex_, complex_, -1).dim == 0


class SiltingVerdict(str, Enum):
    SILTING = "silting"
    PRESILTING_NOT_SILTING = "presilting_not_silting"
    NOT_PRESILTING = "not_presilting"
    SPLIT_FAILURE = "split_failure"


def is_silting(complex_: TwoTermComplex) -> SiltingVerdict:
    """Presilting plus as many non-isomorphic indecomposable summands as vertices."""
    if not is_presilting(complex_):
        return SiltingVerdict.NOT_PRESILTING
    try:
        count = len(complex_.end_algebra.idempotents)
    except SplitFailure as exc:
        logger.warning(f"Cannot count summands of {complex_.label}: {exc}")
        return SiltingVerdict.SPLIT_FAILURE
    vertices = len(complex_.algebra.vertex_labels)
    verdict = SiltingVerdict.SILTING if count == vertices else SiltingVerdict.PRESILTING_NOT_SILTING
    logger.info(f"{complex_.label}: {count} summand types over {vertices} vertices, {verdict.value}")
    return verdict


def end_algebra(complex_: TwoTermComplex) -> FDAlgebra:
    """End(P) with product b_i * b_j = b_i o b_j (apply b_j first)."""
    complex_.require_projective_terms()
    hom = complex_.endomorphisms
    basis = hom.basis
    products = [[hom.coordinates(right.then(left)) for right in basis] for left in basis]
    unit = hom.coordinates(complex_.identity())
    algebra = FDAlgebra(products, unit)
    logger.info(f"End({complex_.label}) has dimension {algebra.dim}")
    return algebra


def functor_hom(complex_: TwoTermComplex, other: TwoTermComplex, label: str = "") -> FDModule:
    """Hom(P, X) as a right End(P)-module: psi . b = psi o b."""
    algebra = complex_.end_algebra
    endomorphisms = complex_.endomorphisms.basis
    hom = hom_homotopy(complex_, other, 0)
    action = []
    for b in endomorphisms:
        rows = [hom.coordinates(b.then(psi)) for psi in hom.basis]
        action.append(Matrix(rows, hom.dim))
    return FDModule(algebra, tuple(action), label or f"F({other.label})")


class TorsionClass(str, Enum):
    TORSION = "torsion"
    TORSION_FREE = "torsion_free"
    NEITHER = "neither"


@dataclass(frozen=True, eq=False)
class CanonicalSequence:
    """0 -> tM -> M -> M/tM -> 0"""

    torsion: Representation
    inclusion: ModuleMap
    module: Representation
    projection: ModuleMap
    torsion_free: Representation

    def defects(self, generator: Representation) -> List[str]:
        problems = []
        if not self.inclusion.then(self.projection).is_zero():
            problems.append("composite is not zero")
        if not self.inclusion.is_injective():
            problems.append("inclusion is not injective")
        if not self.projection.is_surjective():
            problems.append("projection is not surjective")
        if self.module.dim != self.torsion.dim + self.torsion_free.dim:
            problems.append("dimensions do not add up")
        if hom_modules(generator, self.torsion_free).dim:
            problems.append("the torsion-free part receives maps from the generator")
        return problems


@dataclass(frozen=True, eq=False)
class TorsionResult:
    classification: TorsionClass
    sequence: CanonicalSequence
    hom_shift_one: int
    hom_shift_zero: int


def canonical_sequence(complex_: TwoTermComplex, module: Representation) -> CanonicalSequence:
    """The torsion part is the trace of H^0(P), the largest submodule in Fac H^0(P)."""
    generator = homology(complex_, 0)
    trace: Submodule = trace_submodule(generator, module)
    rest = quotient(module, trace.spaces)
    return CanonicalSequence(trace.module, trace.inclusion, module, rest.projection, rest.module)


def torsion_classify(complex_: TwoTermComplex, module: Representation) -> TorsionResult:
    """Classify module against (T(P), F(P)) by Hom-vanishing and by the trace; both must agree."""
    complex_.require_projective_terms()
    stalk = stalk0(module)
    shift_one = hom_homotopy(complex_, stalk, 1).dim
    shift_zero = hom_homotopy(complex_, stalk, 0).dim
    sequence = canonical_sequence(complex_, module)
    by_hom = (shift_one == 0, shift_zero == 0)
    by_trace = (sequence.torsion.dim == module.dim, sequence.torsion.dim == 0)
    if by_hom != by_trace:
        raise InvariantViolation(
            f"torsion classification of {module.label or module.dims} disagrees: "
            f"Hom-vanishing gives {by_hom}, trace gives {by_trace}"
        )
    if by_hom[0]:
        classification = TorsionClass.TORSION
    elif by_hom[1]:
        classification = TorsionClass.TORSION_FREE
    else:
        classification = TorsionClass.NEITHER
    return TorsionResult(classification, sequence, shift_one, shift_zero)


def c_membership(complex_: TwoTermComplex, other: TwoTermComplex) -> bool:
    """Whether other lies in C(P): H^0 torsion and H^-1 torsion-free, or equivalently Hom(P, other[±1]) = 0."""
    complex_.require_projective_terms()
    top_part = torsion_classify(complex_, homology(other, 0))
    bottom_part = torsion_classify(complex_, homology(other, -1))
    by_homology = top_part.hom_shift_one == 0 and bottom_part.hom_shift_zero == 0
    by_hom = hom_homotopy(complex_, other, 1).dim == 0 and hom_homotopy(complex_, other, -1).dim == 0
    if by_homology != by_hom:
        raise InvariantViolation(
            f"membership of {other.label} in C(P) disagrees: homology gives {by_homology}, Hom-vanishing gives {by_hom}"
        )
    return by_hom


@dataclass(frozen=True, eq=False)
class TildeResult:
    complex: TwoTermComplex
    projection: ChainMap
    removed: Representation


def tilde_with_projection(complex_: TwoTermComplex, part: Optional[TwoTermComplex] = None) -> TildeResult:
    """
    Replace the degree -1 term of part by its quotient by tH^-1(part).

    tH^-1(part) is the trace of H^0(complex_) in the kernel of the differential;
    the differential vanishes on it and descends to the quotient. The projection
    is the quotient map in degree -1 and the identity in degree 0.
    """
    complex_.require_projective_terms()
    part = complex_ if part is None else part
    part.require_projective_terms()
    cycles = kernel(part.differential)
    torsion = trace_submodule(homology(complex_, 0), cycles.module)
    inside = torsion.inclusion.then(cycles.inclusion)
    reduced = quotient(part.minus, [block.row_space() for block in inside.blocks])
    result = TwoTermComplex(reduced.descend(part.differential), f"~{part.label}")
    projection = ChainMap(part, result, 0, (reduced.projection, ModuleMap.identity(part.zero)))
    logger.debug(f"tilde({part.label}) removes a torsion submodule of dimension {torsion.module.dim}")
    return TildeResult(result, projection, torsion.module)


def tilde(complex_: TwoTermComplex, part: Optional[TwoTermComplex] = None) -> TwoTermComplex:
    return tilde_with_projection(complex_, part).complex
