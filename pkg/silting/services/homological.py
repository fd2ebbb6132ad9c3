"""
Projective resolutions, projective and global dimension, Ext

Everything here works over a module category backend (see ModuleCategory),
so the same code computes over A itself and over End(P) through its Gabriel
quiver.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional, Protocol, Sequence, Tuple, Union

from silting.core.config import settings
from silting.core.exactlin import Matrix
from silting.core.exceptions import InvariantViolation
from silting.services.representations import Cover, HomSpace, ModuleMap, Representation, Submodule

logger = logging.getLogger(__name__)


class ModuleCategory(Protocol):
    """What the resolution code needs from mod A."""

    def simples(self) -> List[Representation]:
        ...

    def hom(self, source: Representation, target: Representation) -> HomSpace:
        ...

    def kernel(self, morphism: ModuleMap) -> Submodule:
        ...

    def radical(self, module: Representation) -> Submodule:
        ...

    def projective_cover(self, module: Representation) -> Cover:
        ...

    def free_cover(self, module: Representation) -> Cover:
        ...

    def is_projective(self, module: Representation) -> bool:
        ...

    def isomorphism(self, source: Representation, target: Representation) -> Optional[ModuleMap]:
        ...


@dataclass(frozen=True)
class Finite:
    length: int


@dataclass(frozen=True)
class InfinitePeriodic:
    """Omega^(entry + period) is isomorphic to Omega^entry."""

    entry: int
    period: int


@dataclass(frozen=True)
class ExceededCap:
    cap: int


Outcome = Union[Finite, InfinitePeriodic, ExceededCap]


def describe_outcome(outcome: Outcome) -> str:
    if isinstance(outcome, Finite):
        return str(outcome.length)
    if isinstance(outcome, InfinitePeriodic):
        return "infinite"
    return f"unknown(>{outcome.cap})"


@dataclass(frozen=True, eq=False)
class ResolutionStep:
    """P_index -> Omega^index with kernel Omega^(index+1)."""

    index: int
    syzygy: Representation
    cover: Cover
    kernel: Submodule


@dataclass(eq=False)
class ResolutionVerdict:
    module: Representation
    outcome: Outcome
    steps: List[ResolutionStep] = field(default_factory=list)
    witness: Optional[ModuleMap] = None

    @property
    def syzygies(self) -> List[Representation]:
        modules = [step.syzygy for step in self.steps]
        if self.steps:
            modules.append(self.steps[-1].kernel.module)
        else:
            modules.append(self.module)
        return modules

    def defects(self, category: ModuleCategory) -> List[str]:
        """Exactness and minimality of every step, and invertibility of the period witness."""
        problems = []
        for step in self.steps:
            surjection = step.cover.surjection
            if not surjection.is_surjective():
                problems.append(f"step {step.index}: cover is not surjective")
            if not step.kernel.inclusion.then(surjection).is_zero():
                problems.append(f"step {step.index}: composite is not zero")
            if step.kernel.module.dim + step.syzygy.dim != step.cover.module.dim:
                problems.append(f"step {step.index}: dimensions do not add up")
            radical = category.radical(step.cover.module)
            for v, block in enumerate(step.kernel.inclusion.blocks):
                space = radical.spaces[v]
                if any(not space.contains(row) for row in block.tolist()):
                    problems.append(f"step {step.index}: kernel leaves the radical at vertex {v}")
                    break
        if isinstance(self.outcome, InfinitePeriodic):
            if self.witness is None or not self.witness.is_isomorphism() or not self.witness.is_natural():
                problems.append("periodicity witness is not an isomorphism")
        return problems

    def verify(self, category: ModuleCategory):
        problems = self.defects(category)
        if problems:
            raise InvariantViolation("; ".join(problems))


def min_resolution(
    category: ModuleCategory, module: Representation, cap: Optional[int] = None
) -> ResolutionVerdict:
    """Minimal projective resolution until a projective syzygy, a repeated syzygy or the cap."""
    cap = settings.RESOLUTION_CAP if cap is None else cap
    if cap < 1:
        raise ValueError("resolution cap must be at least 1")
    steps: List[ResolutionStep] = []
    syzygies = [module]
    current = module
    index = 0
    while True:
        if current.dim == 0 or category.is_projective(current):
            outcome: Outcome = Finite(index)
            break
        if index >= cap:
            outcome = ExceededCap(cap)
            logger.warning(f"Resolution of {module.label or module.dims} exceeded {cap} steps")
            break
        cover = category.projective_cover(current)
        kernel = category.kernel(cover.surjection)
        steps.append(ResolutionStep(index, current, cover, kernel))
        index += 1
        current = kernel.module
        for earlier_index, earlier in enumerate(syzygies):
            witness = category.isomorphism(earlier, current)
            if witness is not None:
                verdict = ResolutionVerdict(
                    module, InfinitePeriodic(earlier_index, index - earlier_index), steps, witness
                )
                logger.info(
                    f"Resolution of {module.label or module.dims} is periodic: "
                    f"Omega^{index} ~ Omega^{earlier_index}"
                )
                return verdict
        syzygies.append(current)
    logger.debug(f"Resolution of {module.label or module.dims}: {describe_outcome(outcome)}")
    return ResolutionVerdict(module, outcome, steps)


def pd(category: ModuleCategory, module: Representation, cap: Optional[int] = None) -> Outcome:
    return min_resolution(category, module, cap).outcome


@dataclass(frozen=True, eq=False)
class ProjectiveResolution:
    """terms[k] = P_k, differentials[k]: P_(k+1) -> P_k, augmentation: P_0 -> module."""

    module: Representation
    terms: Tuple[Representation, ...]
    differentials: Tuple[ModuleMap, ...]
    augmentation: ModuleMap


def projective_resolution(
    category: ModuleCategory, module: Representation, length: int, minimal: bool = True
) -> ProjectiveResolution:
    """P_length -> ... -> P_0 -> module, from minimal covers or from free (one generator per basis vector) covers."""
    covering = category.projective_cover if minimal else category.free_cover
    terms: List[Representation] = []
    differentials: List[ModuleMap] = []
    current = module
    previous_inclusion: Optional[ModuleMap] = None
    augmentation = None
    for _ in range(length + 1):
        cover = covering(current)
        terms.append(cover.module)
        if previous_inclusion is None:
            augmentation = cover.surjection
        else:
            differentials.append(cover.surjection.then(previous_inclusion))
        kernel = category.kernel(cover.surjection)
        previous_inclusion = kernel.inclusion
        current = kernel.module
    return ProjectiveResolution(module, tuple(terms), tuple(differentials), augmentation)


def _pullback_rank(category: ModuleCategory, differential: ModuleMap, target: Representation) -> int:
    """Rank of Hom(P_k, target) -> Hom(P_(k+1), target), f -> differential then f."""
    upper = category.hom(differential.target, target)
    lower = category.hom(differential.source, target)
    if upper.dim == 0 or lower.dim == 0:
        return 0
    rows = [lower.coordinates(differential.then(f)) for f in upper.basis]
    return Matrix(rows, lower.dim).rank()


def ext_dim(
    category: ModuleCategory,
    module: Representation,
    other: Representation,
    degree: int,
    cap: Optional[int] = None,
    minimal: bool = True,
) -> Optional[int]:
    """dim Ext^degree(module, other); None when the resolution would need more than cap steps."""
    if degree < 0:
        raise ValueError("Ext degree must be non-negative")
    cap = settings.RESOLUTION_CAP if cap is None else cap
    if degree + 1 > cap:
        return None
    resolution = projective_resolution(category, module, degree + 1, minimal=minimal)
    cochains = category.hom(resolution.terms[degree], other).dim
    outgoing = _pullback_rank(category, resolution.differentials[degree], other)
    incoming = _pullback_rank(category, resolution.differentials[degree - 1], other) if degree else 0
    return cochains - outgoing - incoming


def ext_one_total(category: ModuleCategory, cap: Optional[int] = None) -> Optional[int]:
    """Sum of dim Ext^1(S_i, S_j) over all pairs of simples (the arrow count of the quiver)."""
    simples = category.simples()
    total = 0
    for source in simples:
        for target in simples:
            value = ext_dim(category, source, target, 1, cap)
            if value is None:
                return None
            total += value
    return total


class GldimKind(str, Enum):
    FINITE = "finite"
    INFINITE = "infinite"
    UNKNOWN = "unknown"


@dataclass(eq=False)
class GlobalDimension:
    kind: GldimKind
    value: Optional[int]
    verdicts: List[ResolutionVerdict]
    cap: int

    @property
    def period(self) -> Optional[int]:
        for verdict in self.verdicts:
            if isinstance(verdict.outcome, InfinitePeriodic):
                return verdict.outcome.period
        return None

    def describe(self) -> str:
        if self.kind is GldimKind.FINITE:
            return str(self.value)
        if self.kind is GldimKind.INFINITE:
            return "infinite"
        return f"unknown(>{self.cap})"


def pd_table(category: ModuleCategory, cap: Optional[int] = None) -> List[ResolutionVerdict]:
    return [min_resolution(category, module, cap) for module in category.simples()]


def merge_outcomes(verdicts: Sequence[ResolutionVerdict], cap: int) -> GlobalDimension:
    outcomes = [verdict.outcome for verdict in verdicts]
    if any(isinstance(outcome, InfinitePeriodic) for outcome in outcomes):
        return GlobalDimension(GldimKind.INFINITE, None, list(verdicts), cap)
    if any(isinstance(outcome, ExceededCap) for outcome in outcomes):
        return GlobalDimension(GldimKind.UNKNOWN, None, list(verdicts), cap)
    value = max((outcome.length for outcome in outcomes), default=0)
    return GlobalDimension(GldimKind.FINITE, value, list(verdicts), cap)


def gldim(category: ModuleCategory, cap: Optional[int] = None) -> GlobalDimension:
    """Maximum projective dimension of the simples."""
    cap = settings.RESOLUTION_CAP if cap is None else cap
    result = merge_outcomes(pd_table(category, cap), cap)
    logger.info(f"Global dimension of {category!r}: {result.describe()}")
    return result


class BoundStatus(str, Enum):
    PASS = "pass"
    FALSIFIED = "falsified"
    NOT_APPLICABLE = "not_applicable"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class BoundCheck:
    name: str
    hypothesis: str
    bound: Optional[int]
    status: BoundStatus
    detail: str


@dataclass(eq=False)
class BoundsReport:
    gld_a: GlobalDimension
    gld_b: GlobalDimension
    pd_h0: Outcome
    tilting: bool
    checks: List[BoundCheck]

    @property
    def falsified(self) -> List[BoundCheck]:
        return [check for check in self.checks if check.status is BoundStatus.FALSIFIED]

    def tight(self) -> List[BoundCheck]:
        return [
            check
            for check in self.checks
            if check.status is BoundStatus.PASS and self.gld_b.value == check.bound
        ]


def _compare(gld_b: GlobalDimension, bound: int) -> Tuple[BoundStatus, str]:
    if gld_b.kind is GldimKind.FINITE:
        if gld_b.value <= bound:
            return BoundStatus.PASS, f"gld B = {gld_b.value} <= {bound}"
        return BoundStatus.FALSIFIED, f"gld B = {gld_b.value} > {bound}"
    if gld_b.kind is GldimKind.INFINITE:
        return BoundStatus.FALSIFIED, f"gld B is infinite, expected <= {bound}"
    if gld_b.cap >= bound:
        return BoundStatus.INCONCLUSIVE, f"gld B unknown, its resolutions exceed the cap {gld_b.cap} >= {bound}"
    return BoundStatus.INCONCLUSIVE, f"gld B unknown beyond {gld_b.cap}"


def _check(name: str, hypothesis: str, premise: Optional[bool], bound: Optional[int], gld_b: GlobalDimension) -> BoundCheck:
    if premise is None:
        return BoundCheck(name, hypothesis, bound, BoundStatus.INCONCLUSIVE, "hypothesis undecided")
    if not premise or bound is None:
        return BoundCheck(name, hypothesis, bound, BoundStatus.NOT_APPLICABLE, "hypothesis fails")
    status, detail = _compare(gld_b, bound)
    return BoundCheck(name, hypothesis, bound, status, detail)


def _gld_equals(gld: GlobalDimension, value: int) -> Optional[bool]:
    """Whether gld = value; None when the cap leaves it open."""
    if gld.kind is GldimKind.FINITE:
        return gld.value == value
    if gld.kind is GldimKind.INFINITE:
        return False
    return False if gld.cap >= value else None


def _both(first: Optional[bool], second: Optional[bool]) -> Optional[bool]:
    if first is False or second is False:
        return False
    if first is None or second is None:
        return None
    return True


def check_bounds(gld_a: GlobalDimension, gld_b: GlobalDimension, pd_h0: Outcome, tilting: bool) -> BoundsReport:
    """Every upper bound on gld End(P) whose hypothesis can be decided."""
    finite_a = gld_a.value if gld_a.kind is GldimKind.FINITE else None
    finite_premise = None if gld_a.kind is GldimKind.UNKNOWN else finite_a is not None
    if isinstance(pd_h0, Finite):
        small_pd: Optional[bool] = pd_h0.length <= 1
    elif isinstance(pd_h0, InfinitePeriodic):
        small_pd = False
    else:
        small_pd = None

    checks = [
        _check("hereditary", "gld A = 1", _gld_equals(gld_a, 1), 3, gld_b),
        _check("global_dimension_two", "gld A = 2", _gld_equals(gld_a, 2), 7, gld_b),
        _check(
            "projective_dimension_one",
            "pd H0(P) <= 1",
            _both(small_pd, finite_premise),
            2 * finite_a + 2 if finite_a is not None else None,
            gld_b,
        ),
        _check(
            "tilting",
            "P tilting",
            _both(tilting, finite_premise),
            finite_a + 1 if finite_a is not None else None,
            gld_b,
        ),
    ]
    for check in checks:
        if check.status is BoundStatus.FALSIFIED:
            logger.warning(f"Bound {check.name} falsified: {check.detail}")
    return BoundsReport(gld_a, gld_b, pd_h0, tilting, checks)
