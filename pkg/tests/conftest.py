"""
Test configuration and fixtures
"""

import os

import pytest

# Keep the suite independent of a developer's .env
os.environ.setdefault("SILTING_LOG_LEVEL", "WARNING")

from silting.services.complex_spec import build_complex, parse_complex
from silting.services.fd_algebra import fd_module_category_backend
from silting.services.path_algebra import build_algebra
from silting.services.quiver_dsl import parse_algebra
from silting.services.representations import RepresentationCategory
from silting.services.worked_examples import FIXTURES


def build_fixture_algebra(name):
    """Build kQ/I for a registered fixture"""
    return build_algebra(parse_algebra(FIXTURES[name].quiver()))


def build_fixture_complex(algebra, name):
    """Build the two-term complex of a registered fixture over its algebra"""
    return build_complex(algebra, parse_complex(FIXTURES[name].complex(), algebra.presentation), name)


def complex_from_text(algebra, text, label="X"):
    """Build a complex from description text over an algebra"""
    return build_complex(algebra, parse_complex(text, algebra.presentation), label)


@pytest.fixture(scope="session")
def k_algebra():
    """The field as a one-vertex quiver algebra"""
    return build_fixture_algebra("k")


@pytest.fixture(scope="session")
def a2_algebra():
    """Linear A2: 1 -> 2"""
    return build_fixture_algebra("a2")


@pytest.fixture(scope="session")
def ex2_algebra():
    """The eight-vertex algebra of global dimension two"""
    return build_fixture_algebra("ex2")


@pytest.fixture(scope="session")
def ex3_algebra():
    """The four-vertex algebra of global dimension three"""
    return build_fixture_algebra("ex3")


@pytest.fixture(scope="session")
def ex3_category(ex3_algebra):
    """mod A for the four-vertex algebra"""
    return RepresentationCategory(ex3_algebra)


@pytest.fixture(scope="session")
def a2_category(a2_algebra):
    """mod A for linear A2"""
    return RepresentationCategory(a2_algebra)


@pytest.fixture(scope="session")
def a2_tilting(a2_algebra):
    """P1 + (P2 -> P1) over A2"""
    return build_fixture_complex(a2_algebra, "a2")


@pytest.fixture(scope="session")
def ex3_complex(ex3_algebra):
    """P1[1] + P3[1] + P4[1] + presentation of S2"""
    return build_fixture_complex(ex3_algebra, "ex3")


@pytest.fixture(scope="session")
def ex2_complex(ex2_algebra):
    """The silting complex whose endomorphism algebra has global dimension seven"""
    return build_fixture_complex(ex2_algebra, "ex2")


@pytest.fixture(scope="session")
def ex3_end(ex3_complex):
    """End(P) for the four-vertex example"""
    return ex3_complex.end_algebra


@pytest.fixture(scope="session")
def ex3_end_category(ex3_end):
    """mod End(P) for the four-vertex example"""
    return fd_module_category_backend(ex3_end)
