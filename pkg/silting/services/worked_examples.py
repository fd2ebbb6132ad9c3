"""
Worked examples

Each fixture pairs a quiver with relations and a two-term complex over it,
together with the values the computations must reproduce. The ex1 family and
the A(n) family are generated for any n; the others are bundled files under
silting/data.
"""

import logging
import re
from dataclasses import dataclass, field
from importlib import resources
from typing import Callable, Dict, List, Optional

from silting.services.two_term import SiltingVerdict

logger = logging.getLogger(__name__)

# n values of the ex1 family whose expected values are asserted
EX1_CHECKED = (2, 3, 4)

# Filters naming one member of a generated family, e.g. ex1:n=3
_FAMILY_PATTERN = re.compile(r"^(ex1|a):n=(\d+)$", re.IGNORECASE)


@dataclass(frozen=True)
class Expectation:
    """Expected values; None means not asserted."""

    algebra_dim: Optional[int] = None
    gld_a: Optional[str] = None
    verdict: SiltingVerdict = SiltingVerdict.SILTING
    tilting: Optional[bool] = None
    end_dim: Optional[int] = None
    end_simples: Optional[int] = None
    gld_b: Optional[str] = None
    end_period: Optional[int] = None
    ext_one_total: Optional[int] = None
    pd_h0_at_most_one: Optional[bool] = None
    tight_bounds: tuple = ()


@dataclass(frozen=True)
class Fixture:
    name: str
    description: str
    quiver: Callable[[], str]
    complex: Callable[[], str]
    expected: Expectation = field(default_factory=Expectation)


def _bundled(filename: str) -> Callable[[], str]:
    def read() -> str:
        return resources.files("silting.data").joinpath(filename).read_text(encoding="utf-8")

    return read


def ex1_quiver(n: int) -> str:
    """Vertices 1 .. 2n+4; a_i: 2i+3 -> 2i+1, b_i: 2i+2 -> 2i+4, a commutative square through 3, 1, 2, 4."""
    if n < 2:
        raise ValueError("the ex1 family starts at n = 2")
    lines = ["vertices: " + " ".join(str(v) for v in range(1, 2 * n + 5))]
    lines += [f"arrow a{i}: {2 * i + 3} -> {2 * i + 1}" for i in range(1, n + 1)]
    lines += ["arrow c1: 3 -> 1", "arrow c2: 3 -> 2", "arrow d1: 1 -> 4", "arrow d2: 2 -> 4"]
    lines += [f"arrow b{i}: {2 * i + 2} -> {2 * i + 4}" for i in range(1, n + 1)]
    lines.append("relation c1.d1 - c2.d2")
    lines += [f"relation a{i + 1}.a{i}" for i in range(1, n)]
    lines += [f"relation b{i}.b{i + 1}" for i in range(1, n)]
    return "\n".join(lines) + "\n"


def ex1_complex(n: int) -> str:
    even = [str(2 * i) for i in range(1, n + 3) if i != 2]
    odd = [str(2 * i - 1) for i in range(1, n + 3) if i != 2]
    return "\n".join(
        [
            "stalk0 " + " + ".join(f"P{v}" for v in even),
            "map 4 -> 2 : d2",
            "map 1 -> 3 : c1",
            "stalk1 " + " ".join(odd),
        ]
    ) + "\n"


def a_family_quiver(n: int) -> str:
    """The ex3 quiver with a tail 1_0 -> 1_1 -> ... -> 1_n of zero relations hanging off vertex 2."""
    if n < 0:
        raise ValueError("the A(n) family starts at n = 0")
    tail = [f"1_{k}" for k in range(n + 1)]
    lines = ["vertices: " + " ".join(["1_0", "2", "3", "4"] + tail[1:])]
    lines += ["arrow a: 2 -> 3", "arrow b: 3 -> 2", "arrow c0: 2 -> 1_0", "arrow d: 2 -> 4", "arrow e: 4 -> 2"]
    lines += [f"arrow c{k}: 1_{k - 1} -> 1_{k}" for k in range(1, n + 1)]
    lines += ["relation b.a", "relation b.d", "relation a.b.c0", "relation d.e"]
    lines += [f"relation c{k - 1}.c{k}" for k in range(1, n + 1)]
    return "\n".join(lines) + "\n"


def a_family_complex(n: int) -> str:
    """The ex3 complex transported to A(n), with the tail vertices in degree -1."""
    tail = " ".join(f"1_{k}" for k in range(n + 1))
    return f"stalk1 {tail} 3 4\npresent S2\n"


def ex1_fixture(n: int) -> Fixture:
    expected = Expectation()
    if n in EX1_CHECKED:
        expected = Expectation(
            gld_a=str(n),
            end_simples=2 * n + 4,
            gld_b=str(2 * n + 2),
            ext_one_total=2 * n + 3,
            pd_h0_at_most_one=True,
            tight_bounds=("projective_dimension_one",),
        )
    return Fixture(
        f"ex1-{n}",
        f"pd H0(P) <= 1 with gld End(P) = 2 gld A + 2 (n = {n})",
        lambda: ex1_quiver(n),
        lambda: ex1_complex(n),
        expected,
    )


def a_family_fixture(n: int) -> Fixture:
    expected = Expectation()
    if n == 0:
        expected = Expectation(algebra_dim=15, gld_a="3", end_simples=4, gld_b="infinite", end_period=3)
    return Fixture(
        f"a{n}",
        f"the A(n) family (n = {n})",
        lambda: a_family_quiver(n),
        lambda: a_family_complex(n),
        expected,
    )


FIXTURES: Dict[str, Fixture] = {
    "k": Fixture(
        "k",
        "the field with its regular complex",
        _bundled("k.quiver"),
        _bundled("k.complex"),
        Expectation(algebra_dim=1, gld_a="0", tilting=True, end_dim=1, end_simples=1, gld_b="0"),
    ),
    "a2": Fixture(
        "a2",
        "linear A2 with the APR tilting complex",
        _bundled("a2.quiver"),
        _bundled("a2_tilting.complex"),
        Expectation(
            algebra_dim=3, gld_a="1", tilting=True, end_dim=3, end_simples=2, gld_b="1", ext_one_total=1
        ),
    ),
    "ex1-2": ex1_fixture(2),
    "ex1-3": ex1_fixture(3),
    "ex1-4": ex1_fixture(4),
    "ex2": Fixture(
        "ex2",
        "gld A = 2 with gld End(P) = 7",
        _bundled("ex2.quiver"),
        _bundled("ex2.complex"),
        Expectation(
            gld_a="2",
            end_dim=15,
            end_simples=8,
            gld_b="7",
            ext_one_total=7,
            tight_bounds=("global_dimension_two",),
        ),
    ),
    "ex3": Fixture(
        "ex3",
        "gld A = 3 with End(P) of infinite global dimension",
        _bundled("ex3.quiver"),
        _bundled("ex3.complex"),
        Expectation(algebra_dim=15, gld_a="3", end_simples=4, gld_b="infinite", end_period=3),
    ),
    "a0": a_family_fixture(0),
}


def select_fixtures(pattern: Optional[str] = None) -> List[Fixture]:
    """Fixtures whose name contains pattern, in registry order.

    A pattern of the form ex1:n=<k> or a:n=<k> selects that member of a family,
    generated on demand; members outside the family's range select nothing.
    """
    family = _FAMILY_PATTERN.match(pattern or "")
    if family:
        name, n = family.group(1).lower(), int(family.group(2))
        if name == "ex1" and n < 2:
            return []
        chosen = [get_fixture(f"ex1-{n}") if name == "ex1" else a_family_fixture(n)]
    else:
        chosen = [fixture for name, fixture in FIXTURES.items() if not pattern or pattern in name]
    logger.debug(f"Selected fixtures: {[fixture.name for fixture in chosen]}")
    return chosen


def get_fixture(name: str) -> Fixture:
    """A registered fixture, or a member of the ex1 / A(n) families such as ex1-7 or a5."""
    if name in FIXTURES:
        return FIXTURES[name]
    if name.startswith("ex1-") and name[4:].isdigit():
        return ex1_fixture(int(name[4:]))
    if name.startswith("a") and name[1:].isdigit():
        return a_family_fixture(int(name[1:]))
    raise KeyError(name)
