"""
Tests for two-term complexes, silting verification, torsion pairs and C(P)
"""

import pytest

from silting.core.exceptions import AlgebraMismatch, InvariantViolation, NonProjectiveTerms
from silting.services import two_term
from silting.services.fd_algebra import fd_module_category_backend
from silting.services.representations import (
    hom_modules,
    projective,
    radical_module,
    regular_module,
    simple,
)
from silting.services.two_term import (
    SiltingVerdict,
    TorsionClass,
    c_membership,
    direct_sum,
    end_algebra,
    functor_hom,
    hom_homotopy,
    homology,
    is_presilting,
    is_silting,
    is_tilting,
    projective_presentation,
    stalk0,
    stalk1,
    tilde,
    tilde_with_projection,
    torsion_classify,
)

from tests.conftest import build_fixture_algebra, build_fixture_complex, complex_from_text

# Cyclic quotients of the four-vertex algebra's projectives
EX3_QUOTIENTS = [
    "P2/a.b",
    "P2/a,d",
    "P2/c",
    "P2/d",
    "P2/a",
    "P3/b.c",
    "P3/b",
    "P4/e.d",
    "P4/e.a.b",
    "P4/e.a",
    "P4/e.c",
    "P4/e",
]


def module_from_text(algebra, expression):
    return complex_from_text(algebra, f"stalk0 {expression}").zero


@pytest.fixture(scope="module")
def ex3_modules(ex3_algebra):
    """Simples, projectives, radicals and cyclic quotients over the four-vertex algebra"""
    modules = [simple(ex3_algebra, v) for v in range(4)]
    modules += [projective(ex3_algebra, v) for v in range(4)]
    modules += [radical_module(projective(ex3_algebra, v)).module.named(f"rad P{v + 1}") for v in range(4)]
    modules += [module_from_text(ex3_algebra, expression) for expression in EX3_QUOTIENTS]
    return modules


@pytest.fixture(scope="module")
def ex3_heart(ex3_algebra, ex3_complex):
    """Objects of C(P) for the four-vertex example"""
    torsion_free = module_from_text(ex3_algebra, "P2/a,d")
    return {
        "S2": stalk0(simple(ex3_algebra, 1)),
        "S1[1]": stalk1(simple(ex3_algebra, 0)),
        "S3[1]": stalk1(simple(ex3_algebra, 2)),
        "S4[1]": stalk1(simple(ex3_algebra, 3)),
        "P1[1]": stalk1(projective(ex3_algebra, 0)),
        "P3[1]": stalk1(projective(ex3_algebra, 2)),
        "(P2/a,d)[1]": stalk1(torsion_free),
        "~P4[1]": tilde(ex3_complex, stalk1(projective(ex3_algebra, 3))),
    }


class TestComplexes:
    """Test constructions of two-term complexes"""

    def test_stalks(self, a2_algebra):
        """Test stalk complexes and their labels"""
        p1 = projective(a2_algebra, 0)
        assert stalk0(p1).minus.is_zero()
        assert stalk1(p1).zero.is_zero()
        assert stalk1(p1).label == "P1[1]"

    def test_presentation_of_s1(self, a2_algebra):
        """Test the minimal presentation of S1 over A2 is P2 -> P1"""
        presentation = projective_presentation(simple(a2_algebra, 0))
        assert presentation.minus.dims == (0, 1)
        assert presentation.zero.dims == (1, 1)
        assert homology(presentation, 0).dims == (1, 0)
        assert homology(presentation, -1).dim == 0

    def test_presentation_of_s2_over_ex3(self, ex3_algebra):
        """Test the presentation of S2 is P1 + P3 + P4 -> P2 with six-dimensional H^-1"""
        presentation = projective_presentation(simple(ex3_algebra, 1))
        assert presentation.minus.dim == 1 + 3 + 6
        assert presentation.zero.dim == 5
        assert homology(presentation, -1).dim == 6

    def test_direct_sum_parts(self, a2_tilting):
        """Test inclusions followed by projections are identities"""
        assert len(a2_tilting.summands) == 2
        for k, part in enumerate(a2_tilting.parts):
            composite = a2_tilting.inclusions[k].then(a2_tilting.projections[k])
            identity = part.identity()
            assert all(a.equals(b) for a, b in zip(composite.components, identity.components))

    def test_terms_projective(self, a2_algebra):
        """Test complexes of non-projective modules are rejected"""
        complex_ = stalk0(simple(a2_algebra, 0))
        assert not complex_.terms_projective
        with pytest.raises(NonProjectiveTerms):
            is_presilting(complex_)

    def test_complexes_over_different_algebras(self, a2_algebra, k_algebra):
        """Test Hom between complexes over different algebras"""
        with pytest.raises(AlgebraMismatch):
            hom_homotopy(stalk0(projective(a2_algebra, 0)), stalk0(projective(k_algebra, 0)), 0)


class TestHomotopyHom:
    """Test Hom in the homotopy category"""

    def test_shift_zero_between_stalks(self, a2_algebra):
        """Test Hom(P2, P1) in degree zero"""
        p1, p2 = stalk0(projective(a2_algebra, 0)), stalk0(projective(a2_algebra, 1))
        assert hom_homotopy(p2, p1, 0).dim == 1
        assert hom_homotopy(p1, p2, 0).dim == 0

    def test_shift_one_is_hom_of_ends(self, a2_algebra):
        """Test Hom(P1[1], P1[1]) in shift one is Hom(P1, P1)"""
        p1 = projective(a2_algebra, 0)
        assert hom_homotopy(stalk1(p1), stalk0(p1), 1).dim == 1

    def test_contractible_complex(self, a2_algebra):
        """Test the identity of P1 -> P1 is null-homotopic"""
        cone = complex_from_text(a2_algebra, "map 1 -> 1 : id")
        hom = hom_homotopy(cone, cone, 0)
        assert hom.dim == 0
        assert hom.is_null_homotopic(cone.identity())

    def test_endomorphisms_of_cone(self, a2_algebra):
        """Test End(P2 -> P1) is one-dimensional"""
        cone = complex_from_text(a2_algebra, "map 2 -> 1 : a")
        hom = hom_homotopy(cone, cone, 0)
        assert hom.dim == 1
        assert all(morphism.is_chain_map() for morphism in hom.basis)

    def test_shift_minus_one(self, a2_algebra):
        """Test Hom(P1, P1[-1]) is Hom(P1, P1) for stalks in opposite degrees"""
        p1 = projective(a2_algebra, 0)
        hom = hom_homotopy(stalk0(p1), stalk1(p1), -1)
        assert hom.dim == 1
        assert all(morphism.is_chain_map() for morphism in hom.basis)

    def test_other_shifts_vanish(self, a2_tilting):
        """Test shifts outside -1..1 give zero"""
        assert hom_homotopy(a2_tilting, a2_tilting, 2).dim == 0
        assert hom_homotopy(a2_tilting, a2_tilting, -2).dim == 0


class TestSilting:
    """Test presilting, silting and tilting verdicts"""

    def test_regular_stalk_over_field(self, k_algebra):
        """Test A in degree zero is tilting"""
        complex_ = stalk0(projective(k_algebra, 0))
        assert is_tilting(complex_)
        assert is_silting(complex_) is SiltingVerdict.SILTING

    def test_both_degrees_over_field(self, k_algebra):
        """Test k + k[1] is not presilting"""
        p = projective(k_algebra, 0)
        complex_ = direct_sum([stalk0(p), stalk1(p)])
        assert not is_presilting(complex_)
        assert is_silting(complex_) is SiltingVerdict.NOT_PRESILTING

    def test_a2_tilting(self, a2_tilting):
        """Test the APR tilt is tilting and silting"""
        assert is_tilting(a2_tilting)
        assert is_silting(a2_tilting) is SiltingVerdict.SILTING

    def test_too_few_summands(self, a2_algebra):
        """Test P1 alone is presilting but not silting"""
        complex_ = stalk0(projective(a2_algebra, 0))
        assert is_silting(complex_) is SiltingVerdict.PRESILTING_NOT_SILTING

    def test_repeated_summand_is_not_basic(self, a2_algebra):
        """Test P1 + P1 + P2 has a non-basic endomorphism algebra"""
        complex_ = complex_from_text(a2_algebra, "stalk0 P1 + P1 + P2")
        assert is_silting(complex_) is SiltingVerdict.SPLIT_FAILURE

    def test_ex3_is_silting(self, ex3_complex):
        """Test the four-vertex example is silting and not tilting"""
        assert is_silting(ex3_complex) is SiltingVerdict.SILTING
        assert not is_tilting(ex3_complex)

    def test_ex2_is_silting(self, ex2_complex):
        """Test the eight-vertex example is silting"""
        assert is_silting(ex2_complex) is SiltingVerdict.SILTING


class TestEndAlgebra:
    """Test End(P) and the functor Hom(P, -)"""

    def test_unit_and_associativity(self, a2_tilting):
        """Test End(P) is a unital associative algebra"""
        algebra = end_algebra(a2_tilting)
        assert algebra.unit_holds()
        assert algebra.associativity_defects() == []

    def test_ex3_end(self, ex3_end):
        """Test End(P) for the four-vertex example"""
        assert ex3_end.unit_holds()
        assert len(ex3_end.idempotents) == 4

    def test_functor_on_p_is_regular(self, ex3_complex, ex3_end):
        """Test Hom(P, P) is the regular End(P)-module"""
        module = functor_hom(ex3_complex, ex3_complex)
        assert module.dim == ex3_end.dim
        assert module.defects() == []

    def test_functor_gives_modules(self, ex3_complex, ex3_heart):
        """Test Hom(P, X) satisfies the module axioms for objects of C(P)"""
        for complex_ in ex3_heart.values():
            assert functor_hom(ex3_complex, complex_).defects() == []


class TestTorsion:
    """Test the torsion pair (T(P), F(P))"""

    def test_suite_size(self, ex3_modules):
        """Test the structural suite covers at least twenty modules"""
        assert len(ex3_modules) >= 20

    def test_routes_agree(self, ex3_complex, ex3_modules):
        """Test Hom-vanishing and the trace classify every module the same way"""
        generator = homology(ex3_complex, 0)
        for module in ex3_modules:
            result = torsion_classify(ex3_complex, module)
            assert result.sequence.defects(generator) == []

    def test_known_classes(self, ex3_algebra, ex3_complex):
        """Test S2 is torsion, P2/(a, d) torsion-free and P2 neither"""
        assert torsion_classify(ex3_complex, simple(ex3_algebra, 1)).classification is TorsionClass.TORSION
        for v in (0, 2, 3):
            assert torsion_classify(ex3_complex, simple(ex3_algebra, v)).classification is TorsionClass.TORSION_FREE
        quotient = module_from_text(ex3_algebra, "P2/a,d")
        assert torsion_classify(ex3_complex, quotient).classification is TorsionClass.TORSION_FREE
        assert torsion_classify(ex3_complex, projective(ex3_algebra, 1)).classification is TorsionClass.NEITHER

    def test_top_s2_over_socle_s1_s3_s4(self, ex3_algebra, ex3_complex):
        """Test P2/rad^2 P2, with top S2 and socle S1 + S3 + S4, is torsion-free"""
        module = module_from_text(ex3_algebra, "P2/a.b")
        assert module.dims == (1, 1, 1, 1)
        result = torsion_classify(ex3_complex, module)
        assert result.classification is TorsionClass.TORSION_FREE
        assert result.sequence.torsion.dim == 0

    def test_canonical_sequence_of_p4(self, ex3_algebra, ex3_complex):
        """Test tP4 = S2 and P4/tP4 has dimension five"""
        result = torsion_classify(ex3_complex, projective(ex3_algebra, 3))
        assert result.sequence.torsion.dims == (0, 1, 0, 0)
        assert result.sequence.torsion_free.dim == 5

    def test_inconsistent_routes_raise(self, ex3_complex, ex3_algebra, monkeypatch):
        """Test a disagreement between the two torsion routes is reported"""
        monkeypatch.setattr(two_term, "trace_submodule", lambda generator, module: radical_module(module))
        with pytest.raises(InvariantViolation):
            torsion_classify(ex3_complex, simple(ex3_algebra, 1))

    def test_non_projective_generator(self, a2_algebra):
        """Test classification against a complex with non-projective terms"""
        with pytest.raises(NonProjectiveTerms):
            torsion_classify(stalk0(simple(a2_algebra, 0)), simple(a2_algebra, 1))


class TestHeart:
    """Test membership in C(P) and the tilde construction"""

    def test_membership_suite(self, ex3_algebra, ex3_complex, ex3_heart):
        """Test both membership routes agree on at least ten complexes"""
        candidates = list(ex3_heart.values())
        candidates += [stalk0(simple(ex3_algebra, v)) for v in range(4)]
        candidates += [stalk1(projective(ex3_algebra, v)) for v in range(4)]
        candidates += [stalk0(projective(ex3_algebra, v)) for v in range(4)]
        candidates += [ex3_complex, tilde(ex3_complex)]
        assert len(candidates) >= 10
        for complex_ in candidates:
            c_membership(ex3_complex, complex_)

    def test_heart_objects(self, ex3_complex, ex3_heart):
        """Test the listed objects lie in C(P)"""
        for name, complex_ in ex3_heart.items():
            assert c_membership(ex3_complex, complex_), name

    def test_outside_heart(self, ex3_algebra, ex3_complex):
        """Test A and S1 in degree zero are not in C(P)"""
        assert not c_membership(ex3_complex, complex_from_text(ex3_algebra, "stalk0 A"))
        assert not c_membership(ex3_complex, stalk0(simple(ex3_algebra, 0)))
        assert not c_membership(ex3_complex, stalk1(projective(ex3_algebra, 1)))

    def test_tilde_of_p4(self, ex3_algebra, ex3_complex):
        """Test tilde(P4[1]) = (P4/S2)[1]"""
        result = tilde_with_projection(ex3_complex, stalk1(projective(ex3_algebra, 3)))
        assert result.removed.dims == (0, 1, 0, 0)
        assert result.complex.minus.dim == 5
        assert result.projection.is_chain_map()

    def test_tilde_of_p1_is_unchanged(self, ex3_algebra, ex3_complex):
        """Test tilde(P1[1]) = P1[1]"""
        result = tilde_with_projection(ex3_complex, stalk1(projective(ex3_algebra, 0)))
        assert result.removed.dim == 0
        assert result.complex.minus.dim == 1

    def test_tilde_in_heart(self, ex3_complex):
        """Test tilde(P) lies in C(P)"""
        assert c_membership(ex3_complex, tilde(ex3_complex))

    @pytest.mark.slow
    @pytest.mark.parametrize("name", ["a2", "ex1-2", "ex2", "ex3"])
    def test_tilde_is_a_projective_generator(self, name):
        """Test Hom(P, tilde(P)) is projective and isomorphic to End(P) as a module"""
        algebra = build_fixture_algebra(name)
        complex_ = build_fixture_complex(algebra, name)
        end = complex_.end_algebra
        category = fd_module_category_backend(end)
        module = functor_hom(complex_, tilde(complex_)).to_representation()
        assert category.is_projective(module)
        assert category.iso_test(module, regular_module(end.basic).module)

    def test_membership_requires_projective_terms(self, a2_algebra):
        """Test C(P) needs P with projective terms"""
        with pytest.raises(NonProjectiveTerms):
            c_membership(stalk0(simple(a2_algebra, 0)), stalk0(simple(a2_algebra, 1)))


class TestEquivalence:
    """Test Hom(P, -) is fully faithful on C(P)"""

    SOURCES = ("P1[1]", "P3[1]")

    def test_hom_dimensions_match(self, ex3_complex, ex3_end, ex3_heart):
        """Test dim Hom_K(X, Y) = dim Hom_B(FX, FY) for X with projective terms"""
        images = {name: functor_hom(ex3_complex, complex_).to_representation() for name, complex_ in ex3_heart.items()}
        pairs = [(source, target) for source in self.SOURCES for target in ex3_heart]
        assert len(pairs) >= 10
        for source, target in pairs:
            in_complexes = hom_homotopy(ex3_heart[source], ex3_heart[target], 0).dim
            in_modules = hom_modules(images[source], images[target]).dim
            assert in_complexes == in_modules, (source, target)

    def test_functor_reflects_zero(self, ex3_complex, ex3_heart):
        """Test nonzero objects of C(P) go to nonzero modules"""
        for name, complex_ in ex3_heart.items():
            assert functor_hom(ex3_complex, complex_).dim > 0, name
