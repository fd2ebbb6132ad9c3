"""
Tests for complex description files
"""

import pytest

from silting.core.exceptions import ComplexSyntaxError, QuiverSyntaxError
from silting.services.complex_spec import build_complex, load_complex, parse_complex
from silting.services.two_term import homology
from silting.services.worked_examples import FIXTURES


def syntax_error(text, algebra):
    with pytest.raises(ComplexSyntaxError) as info:
        parse_complex(text, algebra.presentation)
    return info.value


class TestParseComplex:
    """Test parsing of complex descriptions"""

    def test_directives(self, ex3_algebra):
        """Test each directive becomes one summand"""
        spec = parse_complex(FIXTURES["ex3"].complex(), ex3_algebra.presentation)
        assert [summand.directive for summand in spec.summands] == ["stalk1", "present"]
        assert spec.summands[0].sources == ("1", "3", "4")
        assert spec.summands[1].modules[0].render() == "S2"

    def test_map_entries(self, a2_algebra):
        """Test a map with one entry"""
        spec = parse_complex("map 2 -> 1 : a\n", a2_algebra.presentation)
        (summand,) = spec.summands
        assert summand.sources == ("2",)
        assert summand.targets == ("1",)
        assert summand.entries[0][0][0].path == ("a",)

    def test_zero_and_identity_entries(self, a2_algebra):
        """Test '0' and 'id' entries"""
        spec = parse_complex("map 1 2 -> 1 2 : id, 0 ; a, id\n", a2_algebra.presentation)
        entries = spec.summands[0].entries
        assert entries[0][1] == ()
        assert entries[0][0][0].path == ("id",)
        assert entries[1][0][0].path == ("a",)

    def test_quotient_module(self, ex3_algebra):
        """Test P<v>/<generators> terms"""
        spec = parse_complex("stalk0 P2/a,d + S4\n", ex3_algebra.presentation)
        modules = spec.summands[0].modules
        assert modules[0].render() == "P2/a,d"
        assert modules[1].render() == "S4"

    def test_render_is_stable(self, ex2_algebra):
        """Test rendering a parsed description and parsing it again gives the same text"""
        spec = parse_complex(FIXTURES["ex2"].complex(), ex2_algebra.presentation)
        rendered = spec.render()
        assert parse_complex(rendered, ex2_algebra.presentation).render() == rendered

    def test_syntax_error_is_a_quiver_syntax_error(self):
        """Test callers catching QuiverSyntaxError also catch complex errors"""
        assert issubclass(ComplexSyntaxError, QuiverSyntaxError)


class TestComplexErrors:
    """Test error reporting with line and column"""

    def test_unknown_directive(self, a2_algebra):
        """Test an unknown directive points at column one"""
        error = syntax_error("stalk0 P1\nshift P2\n", a2_algebra)
        assert (error.line, error.column) == (2, 1)

    def test_unknown_vertex(self, a2_algebra):
        """Test an unknown vertex in a module term"""
        error = syntax_error("stalk0 P9\n", a2_algebra)
        assert error.column == len("stalk0 P") + 1

    def test_unknown_stalk1_vertex(self, a2_algebra):
        """Test an unknown vertex in a stalk1 line"""
        error = syntax_error("stalk1 1 7\n", a2_algebra)
        assert error.column == len("stalk1 1 ") + 1

    def test_missing_arguments(self, a2_algebra):
        """Test a directive without arguments"""
        error = syntax_error("stalk0\n", a2_algebra)
        assert "needs arguments" in str(error)

    def test_empty_description(self, a2_algebra):
        """Test a description with only comments"""
        error = syntax_error("# nothing here\n", a2_algebra)
        assert "no summands" in str(error)

    def test_entry_in_wrong_corner(self, a2_algebra):
        """Test an entry that runs the wrong way"""
        error = syntax_error("map 1 -> 2 : a\n", a2_algebra)
        assert "must run from 2 to 1" in str(error)

    def test_row_count(self, a2_algebra):
        """Test one row per source vertex"""
        error = syntax_error("map 1 2 -> 1 : id\n", a2_algebra)
        assert "1 rows for 2 source vertices" in str(error)

    def test_unknown_arrow(self, a2_algebra):
        """Test an unknown arrow in an entry"""
        error = syntax_error("map 2 -> 1 : b\n", a2_algebra)
        assert "unknown arrow 'b'" in str(error)

    def test_generator_must_start_at_vertex(self, ex3_algebra):
        """Test quotient generators start at the projective's vertex"""
        error = syntax_error("stalk0 P2/b\n", ex3_algebra)
        assert "does not start at 2" in str(error)

    def test_only_projectives_are_divided(self, ex3_algebra):
        """Test S<v>/... is rejected"""
        error = syntax_error("stalk0 S2/a\n", ex3_algebra)
        assert "only projectives" in str(error)

    def test_missing_colon(self, a2_algebra):
        """Test a map without entries"""
        error = syntax_error("map 2 -> 1 a\n", a2_algebra)
        assert "expected ':'" in str(error)


class TestBuildComplex:
    """Test building complexes from descriptions"""

    def test_ex3_complex_terms(self, ex3_complex):
        """Test the four-vertex example has the expected terms and homology"""
        assert ex3_complex.minus.dim == 2 * (1 + 3 + 6)
        assert ex3_complex.zero.dim == 5
        assert homology(ex3_complex, 0).dims == (0, 1, 0, 0)
        assert len(ex3_complex.summands) == 2

    def test_a2_complex_terms(self, a2_tilting):
        """Test P1 + (P2 -> P1)"""
        assert a2_tilting.minus.dims == (0, 1)
        assert a2_tilting.zero.dims == (2, 2)
        assert a2_tilting.label == "a2"

    def test_quotient_module_dimension(self, ex3_algebra):
        """Test P2/(a, d) has basis e2, c"""
        complex_ = build_complex(ex3_algebra, parse_complex("stalk0 P2/a,d\n", ex3_algebra.presentation))
        assert complex_.zero.dims == (1, 1, 0, 0)

    def test_regular_module(self, k_algebra):
        """Test 'A' is the regular module"""
        complex_ = build_complex(k_algebra, parse_complex(FIXTURES["k"].complex(), k_algebra.presentation))
        assert complex_.zero.dim == 1
        assert complex_.label == "P"

    def test_load_complex(self, a2_algebra, tmp_path):
        """Test loading a description from disk labels it by file name"""
        path = tmp_path / "apr.complex"
        path.write_text(FIXTURES["a2"].complex(), encoding="utf-8")
        complex_ = load_complex(path, a2_algebra)
        assert complex_.label == "apr"
        assert complex_.zero.dims == (2, 2)
