"""
Tests for path algebra construction
"""

import pytest

from silting.core.exactlin import ONE
from silting.core.exceptions import AlgebraMismatch, NotFiniteDimensional
from silting.services.path_algebra import admissibility_report, build_algebra
from silting.services.quiver_dsl import parse_algebra

SQUARE = """
vertices: 1 2 3 4
arrow a: 1 -> 2
arrow b: 2 -> 4
arrow c: 1 -> 3
arrow d: 3 -> 4
relation a.b - c.d
"""


def algebra_from(text, **options):
    return build_algebra(parse_algebra(text), **options)


class TestBuildAlgebra:
    """Test dimensions of kQ/I"""

    def test_field(self, k_algebra):
        """Test a single vertex gives the field"""
        assert k_algebra.dim == 1
        assert k_algebra.nilpotency_degree == 1

    def test_a2(self, a2_algebra):
        """Test linear A2 has basis e1, e2, a"""
        assert a2_algebra.dim == 3
        assert a2_algebra.dimension_by_vertex_pair() == {("1", "1"): 1, ("2", "2"): 1, ("1", "2"): 1}

    def test_commutative_square(self):
        """Test that the commutativity relation identifies the two long paths"""
        algebra = algebra_from(SQUARE)
        assert algebra.dim == 9
        assert algebra.nilpotency_degree == 3
        assert algebra.dimension_by_vertex_pair()[("1", "4")] == 1

    def test_commutative_square_residues_agree(self):
        """Test that a.b and c.d have the same normal form"""
        algebra = algebra_from(SQUARE)
        ab = algebra.element([(ONE, algebra.path_key(["a", "b"]))])
        cd = algebra.element([(ONE, algebra.path_key(["c", "d"]))])
        assert ab == cd
        assert ab

    def test_ex3_projective_dimensions(self, ex3_algebra):
        """Test the projectives of the four-vertex algebra have dimensions 1, 5, 3, 6"""
        assert ex3_algebra.dim == 15
        assert [len(ex3_algebra.basis_from(v)) for v in range(4)] == [1, 5, 3, 6]
        assert len(ex3_algebra.basis_between(1, 1)) == 2
        assert ex3_algebra.nilpotency_degree == 4

    def test_loop_with_relation(self):
        """Test k[x]/x^2"""
        algebra = algebra_from("vertices: 1\narrow x: 1 -> 1\nrelation x.x\n")
        assert algebra.dim == 2

    def test_loop_without_relation_is_infinite(self):
        """Test that a free loop hits the length cap"""
        with pytest.raises(NotFiniteDimensional):
            algebra_from("vertices: 1\narrow x: 1 -> 1\n", length_cap=8)

    def test_path_limit(self):
        """Test that two free loops exceed the path limit"""
        text = "vertices: 1\narrow x: 1 -> 1\narrow y: 1 -> 1\n"
        with pytest.raises(NotFiniteDimensional):
            algebra_from(text, length_cap=64, path_limit=100)


class TestMultiplication:
    """Test products of basis elements"""

    def test_idempotents_are_units_locally(self, a2_algebra):
        """Test e1 * a = a = a * e2 and a * e1 = 0"""
        e1, e2 = a2_algebra.idempotent(0), a2_algebra.idempotent(1)
        (a,) = a2_algebra.basis_between(0, 1)
        assert a2_algebra.product(e1, a) == {a: ONE}
        assert a2_algebra.product(a, e2) == {a: ONE}
        assert a2_algebra.product(a, e1) == {}

    def test_relation_vanishes(self, ex3_algebra):
        """Test b.a is zero in the four-vertex algebra"""
        key = ex3_algebra.path_key(["b", "a"])
        assert ex3_algebra.element([(ONE, key)]) == {}

    def test_associativity(self, ex3_algebra):
        """Test the structure constants are associative"""
        assert ex3_algebra.associativity_defects() == []

    def test_non_composable_path_key(self, a2_algebra):
        """Test path_key rejects paths that do not compose"""
        with pytest.raises(AlgebraMismatch):
            a2_algebra.path_key(["a", "a"])

    def test_trivial_path_needs_vertex(self, a2_algebra):
        """Test path_key for trivial paths"""
        assert a2_algebra.path_key([], "2") == (1, ())
        with pytest.raises(AlgebraMismatch):
            a2_algebra.path_key([])

    def test_element_ends(self, a2_algebra):
        """Test the endpoints of an element"""
        (a,) = a2_algebra.basis_between(0, 1)
        assert a2_algebra.element_ends({a: ONE}) == (0, 1)


class TestAdmissibility:
    """Test the admissibility report"""

    def test_examples_are_admissible(self, ex2_algebra, ex3_algebra):
        """Test the bundled algebras are admissible"""
        assert admissibility_report(ex2_algebra).admissible
        report = admissibility_report(ex3_algebra)
        assert report.admissible
        assert report.nilpotency_degree == 4

    def test_mixed_length_relation_not_admissible(self):
        """Test x.x - x.x.x over a loop is flagged even though the truncated build closes at degree two"""
        algebra = algebra_from("vertices: 1\narrow x: 1 -> 1\nrelation x.x - x.x.x\n")
        assert algebra.nilpotency_degree == 2
        report = admissibility_report(algebra)
        assert not report.admissible
        assert report.relations_in_square
        assert any("mixed-length" in violation for violation in report.violations)

    def test_mixed_length_relation_with_zero_relation(self):
        """Test x.x - x.x.x together with x.x.x generates the admissible ideal (x.x)"""
        text = "vertices: 1\narrow x: 1 -> 1\nrelation x.x - x.x.x\nrelation x.x.x\n"
        report = admissibility_report(algebra_from(text))
        assert report.admissible
