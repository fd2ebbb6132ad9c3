"""
Report assembly

Runs the whole pipeline on an algebra and a two-term complex (build kQ/I, check
silting, form End(P), compute both global dimensions, classify modules against
the torsion pair, check the bounds) and records every cross-check as a
CheckEntry. Checks never raise; a failed check is reported.
"""

import logging
import time
from typing import Callable, List, Optional, Tuple

from silting.core.config import settings
from silting.core.exceptions import InvariantViolation
from silting.schemas.report import (
    AlgebraSection,
    BoundEntry,
    CheckEntry,
    EndSection,
    Report,
    SiltingSection,
    TorsionEntry,
)
from silting.services.complex_spec import build_complex, parse_complex
from silting.services.fd_algebra import fd_module_category_backend, loewy_length
from silting.services.homological import (
    BoundsReport,
    Finite,
    GldimKind,
    GlobalDimension,
    check_bounds,
    describe_outcome,
    ext_one_total,
    gldim,
    merge_outcomes,
    min_resolution,
)
from silting.services.path_algebra import PathAlgebra, admissibility_report, build_algebra
from silting.services.quiver_dsl import parse_algebra
from silting.services.representations import RepresentationCategory, projective, regular_module, simple
from silting.services.two_term import (
    SiltingVerdict,
    TwoTermComplex,
    c_membership,
    functor_hom,
    homology,
    is_presilting,
    is_silting,
    is_tilting,
    tilde,
    torsion_classify,
)
from silting.services.worked_examples import Expectation, Fixture

logger = logging.getLogger(__name__)


def _run_check(checks: List[CheckEntry], name: str, check: Callable[[], Optional[str]]):
    """check returns None on success or a failure detail."""
    try:
        detail = check()
    except InvariantViolation as exc:
        detail = str(exc)
    checks.append(CheckEntry(name=name, passed=detail is None, detail=detail or ""))
    if detail is not None:
        logger.warning(f"Check {name} failed: {detail}")


def _expect(checks: List[CheckEntry], name: str, expected, actual):
    if expected is None:
        return
    passed = str(expected) == str(actual)
    detail = f"expected {expected}, got {actual}"
    checks.append(CheckEntry(name=f"expected_{name}", passed=passed, detail=detail))
    if not passed:
        logger.warning(f"Expectation {name} failed: {detail}")


def algebra_section(
    algebra: PathAlgebra, category: RepresentationCategory, cap: int
) -> Tuple[AlgebraSection, GlobalDimension]:
    verdicts = [min_resolution(category, module, cap) for module in category.simples()]
    gld = merge_outcomes(verdicts, cap)
    admissibility = admissibility_report(algebra)
    section = AlgebraSection(
        dim=str(algebra.dim),
        gldim=gld.describe(),
        nilpotency_degree=str(algebra.nilpotency_degree),
        admissible=admissibility.admissible,
        basis_by_vertex_pair={f"{s}->{t}": str(n) for (s, t), n in sorted(algebra.dimension_by_vertex_pair().items())},
        pd_simples=[describe_outcome(verdict.outcome) for verdict in verdicts],
    )
    return section, gld


def _within_cap(name: str, gld: GlobalDimension) -> Optional[str]:
    if gld.kind is GldimKind.UNKNOWN:
        return f"{name} is {gld.describe()}: a minimal resolution reached the cap"
    return None


def _algebra_checks(algebra: PathAlgebra, category: RepresentationCategory, gld: GlobalDimension) -> List[CheckEntry]:
    checks: List[CheckEntry] = []
    _run_check(
        checks,
        "path_algebra_associative",
        lambda: None if not algebra.associativity_defects() else "structure constants are not associative",
    )

    def resolutions() -> Optional[str]:
        problems = [problem for verdict in gld.verdicts for problem in verdict.defects(category)]
        return "; ".join(problems) or None

    _run_check(checks, "algebra_resolutions_exact_and_minimal", resolutions)
    _run_check(checks, "algebra_gldim_within_cap", lambda: _within_cap("gld A", gld))
    return checks


def _torsion_entries(complex_: TwoTermComplex, category: RepresentationCategory) -> List[TorsionEntry]:
    algebra = complex_.algebra
    modules = [simple(algebra, v) for v in range(category.vertex_count)]
    modules += [projective(algebra, v) for v in range(category.vertex_count)]
    entries = []
    for module in modules:
        result = torsion_classify(complex_, module)
        entries.append(
            TorsionEntry(
                module=module.label,
                classification=result.classification.value,
                torsion_dim=str(result.sequence.torsion.dim),
                torsion_free_dim=str(result.sequence.torsion_free.dim),
            )
        )
    return entries


def _bound_entries(bounds: BoundsReport) -> List[BoundEntry]:
    return [
        BoundEntry(
            name=check.name,
            hypothesis=check.hypothesis,
            bound=None if check.bound is None else str(check.bound),
            status=check.status.value,
            detail=check.detail,
        )
        for check in bounds.checks
    ]


def analyze(
    algebra: PathAlgebra,
    complex_: Optional[TwoTermComplex] = None,
    cap: Optional[int] = None,
    seed: Optional[int] = None,
    expected: Optional[Expectation] = None,
) -> Report:
    """The full report; without a complex only the algebra section is filled."""
    cap = settings.RESOLUTION_CAP if cap is None else cap
    category = RepresentationCategory(algebra, seed=seed)
    section, gld_a = algebra_section(algebra, category, cap)
    checks = _algebra_checks(algebra, category, gld_a)
    report = Report(schema_version=settings.REPORT_SCHEMA_VERSION, algebra=section, checks=checks)
    checks = report.checks
    if expected is not None:
        _expect(checks, "algebra_dim", expected.algebra_dim, algebra.dim)
        _expect(checks, "gld_a", expected.gld_a, gld_a.describe())
    if complex_ is None:
        return report

    verdict = is_silting(complex_)
    presilting = is_presilting(complex_)
    tilting = is_tilting(complex_) if presilting else False
    pd_h0 = min_resolution(category, homology(complex_, 0), cap).outcome
    report.silting = SiltingSection(
        verdict=verdict.value, presilting=presilting, tilting=tilting, pd_h0=describe_outcome(pd_h0)
    )
    if presilting:
        split = verdict is not SiltingVerdict.SPLIT_FAILURE
        _run_check(
            checks,
            "end_algebra_splits",
            lambda: None if split else "End(P) modulo its radical is not a product of copies of QQ",
        )
    if expected is not None:
        _expect(checks, "verdict", expected.verdict.value, verdict.value)
        _expect(checks, "tilting", expected.tilting, tilting)
        if expected.pd_h0_at_most_one is not None:
            small = isinstance(pd_h0, Finite) and pd_h0.length <= 1
            _expect(checks, "pd_h0_at_most_one", expected.pd_h0_at_most_one, small)
    if verdict is not SiltingVerdict.SILTING:
        return report

    report.torsion = _torsion_entries(complex_, category)
    end = complex_.end_algebra
    backend = fd_module_category_backend(end, seed=seed)
    gld_b = gldim(backend, cap)
    ext_total = ext_one_total(backend, cap)
    report.silting.summands = str(len(end.idempotents))
    report.end = EndSection(
        dim=str(end.dim),
        simples=str(len(end.idempotents)),
        arrows=str(len(end.basic.arrow_ends)),
        gldim=gld_b.describe(),
        period=None if gld_b.period is None else str(gld_b.period),
        ext_one_total=None if ext_total is None else str(ext_total),
        loewy_length=str(loewy_length(end)),
        pd_simples=[describe_outcome(verdict.outcome) for verdict in gld_b.verdicts],
    )
    bounds = check_bounds(gld_a, gld_b, pd_h0, tilting)
    report.bounds = _bound_entries(bounds)
    _end_checks(checks, complex_, backend, gld_b, ext_total)
    if expected is not None:
        _expect(checks, "end_dim", expected.end_dim, end.dim)
        _expect(checks, "end_simples", expected.end_simples, len(end.idempotents))
        _expect(checks, "gld_b", expected.gld_b, gld_b.describe())
        _expect(checks, "end_period", expected.end_period, gld_b.period)
        _expect(checks, "ext_one_total", expected.ext_one_total, ext_total)
        tight = {check.name for check in bounds.tight()}
        for name in expected.tight_bounds:
            _expect(checks, f"tight_{name}", True, name in tight)
    return report


def _end_checks(checks, complex_: TwoTermComplex, backend, gld_b: GlobalDimension, ext_total: Optional[int]):
    end = complex_.end_algebra
    _run_check(checks, "end_associative", lambda: None if not end.associativity_defects() else "not associative")
    _run_check(checks, "end_unit", lambda: None if end.unit_holds() else "unit is not a two-sided identity")
    _run_check(checks, "end_idempotents", lambda: "; ".join(end.idempotents.defects(end)) or None)
    _run_check(
        checks,
        "ext_one_counts_arrows",
        lambda: None
        if ext_total is None or ext_total == len(end.basic.arrow_ends)
        else f"sum of Ext^1 is {ext_total}, quiver has {len(end.basic.arrow_ends)} arrows",
    )

    def end_resolutions() -> Optional[str]:
        problems = [problem for verdict in gld_b.verdicts for problem in verdict.defects(backend)]
        return "; ".join(problems) or None

    _run_check(checks, "end_resolutions_exact_and_minimal", end_resolutions)
    _run_check(checks, "end_gldim_within_cap", lambda: _within_cap("gld B", gld_b))
    def functor_regular() -> Optional[str]:
        module = functor_hom(complex_, complex_)
        if module.dim != end.dim:
            return f"Hom(P, P) has dimension {module.dim}, End(P) has {end.dim}"
        return "; ".join(module.defects()) or None

    _run_check(checks, "functor_gives_regular_module", functor_regular)

    def tilde_checks() -> Optional[str]:
        replaced = tilde(complex_)
        if not c_membership(complex_, replaced):
            return "tilde(P) is not in C(P)"
        module = functor_hom(complex_, replaced).to_representation()
        if not backend.is_projective(module):
            return "Hom(P, tilde(P)) is not a projective End(P)-module"
        if backend.isomorphism(module, regular_module(end.basic).module) is None:
            return "Hom(P, tilde(P)) is not isomorphic to End(P)"
        return None

    _run_check(checks, "tilde_gives_regular_module", tilde_checks)


def build_report(
    quiver_text: str,
    complex_text: Optional[str] = None,
    cap: Optional[int] = None,
    length_cap: Optional[int] = None,
    seed: Optional[int] = None,
    timing: Optional[bool] = None,
    fixture: Optional[Fixture] = None,
) -> Report:
    """Parse, build and analyze; input errors propagate as SiltingError subclasses."""
    timing = settings.REPORT_TIMING if timing is None else timing
    started = time.perf_counter()
    presentation = parse_algebra(quiver_text)
    algebra = build_algebra(presentation, length_cap=length_cap)
    complex_ = None
    if complex_text is not None:
        complex_ = build_complex(algebra, parse_complex(complex_text, presentation))
    report = analyze(algebra, complex_, cap=cap, seed=seed, expected=fixture.expected if fixture else None)
    if fixture is not None:
        report.fixture = fixture.name
        report.description = fixture.description
    if timing:
        report.elapsed_ms = str(round((time.perf_counter() - started) * 1000))
    return report


def run_fixture(
    fixture: Fixture,
    cap: Optional[int] = None,
    length_cap: Optional[int] = None,
    seed: Optional[int] = None,
    timing: Optional[bool] = None,
) -> Report:
    logger.info(f"Running fixture {fixture.name}")
    return build_report(fixture.quiver(), fixture.complex(), cap, length_cap, seed, timing, fixture)


def render_text(report: Report) -> str:
    """Human-readable rendering of a report."""
    lines = []
    title = report.fixture or "algebra"
    lines.append(f"== {title}" + (f": {report.description}" if report.description else ""))
    a = report.algebra
    lines.append(f"algebra: dim {a.dim}, gldim {a.gldim}, nilpotency degree {a.nilpotency_degree}")
    lines.append(f"  pd of simples: {', '.join(a.pd_simples)}")
    if report.silting is not None:
        s = report.silting
        lines.append(f"complex: {s.verdict}, presilting {s.presilting}, tilting {s.tilting}, pd H0 {s.pd_h0}")
    if report.end is not None:
        e = report.end
        period = f", period {e.period}" if e.period else ""
        lines.append(f"End(P): dim {e.dim}, {e.simples} simples, {e.arrows} arrows, gldim {e.gldim}{period}")
        lines.append(f"  pd of simples: {', '.join(e.pd_simples)}; sum of Ext^1 {e.ext_one_total}")
    for entry in report.torsion:
        lines.append(f"  {entry.module}: {entry.classification} (t = {entry.torsion_dim}, f = {entry.torsion_free_dim})")
    for bound in report.bounds:
        lines.append(f"bound {bound.name} [{bound.hypothesis}]: {bound.status} ({bound.detail})")
    for check in report.checks:
        mark = "ok" if check.passed else "FAILED"
        lines.append(f"check {check.name}: {mark}" + (f" ({check.detail})" if check.detail and not check.passed else ""))
    if report.elapsed_ms is not None:
        lines.append(f"elapsed: {report.elapsed_ms} ms")
    return "\n".join(lines)
