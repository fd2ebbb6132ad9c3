"""
Tests for report assembly and rendering
"""

import pytest

from silting.schemas.report import AlgebraSection, BoundEntry, CheckEntry, Report
from silting.services.reports import build_report, render_text
from silting.services.worked_examples import FIXTURES


def bare_report(**fields):
    algebra = AlgebraSection(dim="1", gldim="0", nilpotency_degree="1", admissible=True)
    return Report(schema_version="1", algebra=algebra, **fields)


class TestBuildReport:
    """Test reports built from description texts"""

    def test_algebra_only(self):
        """Test a quiver without a complex fills only the algebra section"""
        report = build_report(FIXTURES["a2"].quiver(), timing=False)
        assert report.algebra.dim == "3"
        assert report.algebra.gldim == "1"
        assert report.algebra.basis_by_vertex_pair == {"1->1": "1", "1->2": "1", "2->2": "1"}
        assert report.silting is None
        assert report.elapsed_ms is None
        assert report.passed

    def test_not_presilting_stops_early(self):
        """Test a complex that is not presilting gets no End(P) section"""
        report = build_report(FIXTURES["k"].quiver(), "stalk0 P1\nstalk1 1\n", timing=False)
        assert report.silting.verdict == "not_presilting"
        assert report.silting.presilting is False
        assert report.end is None
        assert report.torsion == []
        assert report.passed

    def test_split_failure_fails_the_report(self):
        """Test a non-basic End(P) is recorded as a failed check"""
        report = build_report(FIXTURES["a2"].quiver(), "stalk0 P1 + P1 + P2\n", timing=False)
        assert report.silting.verdict == "split_failure"
        assert report.end is None
        [check] = [check for check in report.checks if check.name == "end_algebra_splits"]
        assert not check.passed
        assert not report.passed

    @pytest.mark.slow
    def test_cap_below_gldim(self):
        """Test a cap below gld A leaves the gld A = 2 bound undecided and fails the report"""
        fixture = FIXTURES["ex2"]
        report = build_report(fixture.quiver(), fixture.complex(), cap=1, timing=False)
        statuses = {bound.name: bound.status for bound in report.bounds}
        assert statuses["global_dimension_two"] == "inconclusive"
        assert statuses["hereditary"] == "not_applicable"
        assert "falsified" not in statuses.values()
        failed = {check.name for check in report.checks if not check.passed}
        assert {"algebra_gldim_within_cap", "end_gldim_within_cap"} <= failed
        assert not report.passed

    def test_silting_report(self):
        """Test the A2 tilting complex fills every section"""
        report = build_report(FIXTURES["a2"].quiver(), FIXTURES["a2"].complex(), timing=False)
        assert report.silting.summands == "2"
        assert report.end.dim == "3"
        assert report.end.loewy_length == "2"
        assert len(report.torsion) == 4
        assert {bound.name for bound in report.bounds} >= {"hereditary", "tilting"}
        assert all(check.passed for check in report.checks)

    def test_timing(self):
        """Test elapsed_ms is recorded when timing is on"""
        report = build_report(FIXTURES["k"].quiver(), timing=True)
        assert int(report.elapsed_ms) >= 0

    def test_expectation_mismatch_fails_the_report(self):
        """Test a wrong expected value shows up as a failed check"""
        fixture = FIXTURES["a2"]
        report = build_report(fixture.quiver(), fixture.complex(), timing=False, fixture=fixture)
        assert report.fixture == "a2"
        assert report.passed
        report.checks.append(CheckEntry(name="expected_gld_b", passed=False, detail="expected 2, got 1"))
        assert not report.passed


class TestReportModel:
    """Test the pass/fail summary of a report"""

    def test_falsified_bound_fails(self):
        """Test a falsified bound fails the report even when all checks pass"""
        bound = BoundEntry(name="hereditary", hypothesis="gld A <= 1", status="falsified", detail="gld B infinite")
        report = bare_report(checks=[CheckEntry(name="x", passed=True)], bounds=[bound])
        assert not report.passed

    def test_inconclusive_bound_does_not_fail(self):
        """Test an undecided bound leaves the report passing"""
        bound = BoundEntry(name="tilting", hypothesis="P tilting", status="inconclusive", detail="cap reached")
        assert bare_report(bounds=[bound]).passed


class TestRenderText:
    """Test the human-readable rendering"""

    def test_algebra_lines(self):
        """Test the first lines of an algebra-only report"""
        text = render_text(build_report(FIXTURES["a2"].quiver(), timing=False))
        lines = text.splitlines()
        assert lines[0] == "== algebra"
        assert lines[1] == "algebra: dim 3, gldim 1, nilpotency degree 2"
        assert "pd of simples: 1, 0" in lines[2]

    def test_failed_check_shows_detail(self):
        """Test a failed check prints its detail"""
        report = bare_report(checks=[CheckEntry(name="end_unit", passed=False, detail="not a unit")])
        assert "check end_unit: FAILED (not a unit)" in render_text(report)

    def test_fixture_title(self):
        """Test a fixture report is titled by name and description"""
        fixture = FIXTURES["k"]
        report = build_report(fixture.quiver(), fixture.complex(), timing=False, fixture=fixture)
        assert render_text(report).splitlines()[0] == f"== k: {fixture.description}"
