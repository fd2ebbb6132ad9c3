"""
Quiver-with-relations files

Parses and renders the line-oriented .quiver format:

    vertices: 1 2 3 4
    arrow a: 2 -> 3
    relation b.a
    relation c1.d1 - c2.d2      # paths compose left to right

Coefficients are integers or fractions written before a path as `2*a.b` or
`1/2*a.b`; a missing coefficient means 1. `#` starts a comment.
"""

import logging
import re
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Tuple, Union

from silting.core.exactlin import Scalar, format_scalar, to_scalar
from silting.core.exceptions import QuiverSyntaxError

logger = logging.getLogger(__name__)

Term = Tuple[Scalar, Tuple[str, ...]]

_LABEL = r"[A-Za-z0-9_']+"
_ARROW_LABEL = r"[A-Za-z_][A-Za-z0-9_']*"

_VERTICES_RE = re.compile(r"^vertices\s*:(?P<body>.*)$")
_ARROW_RE = re.compile(
    rf"^arrow\s+(?P<label>{_ARROW_LABEL})\s*:\s*(?P<source>{_LABEL})\s*->\s*(?P<target>{_LABEL})\s*$"
)
_RELATION_RE = re.compile(r"^relation\s+(?P<body>\S.*)$")
_TERM_RE = re.compile(
    rf"\s*(?P<sign>[+-])?\s*(?:(?P<coefficient>\d+(?:/\d+)?)\s*\*\s*)?"
    rf"(?P<path>{_ARROW_LABEL}(?:\.{_ARROW_LABEL})*)\s*"
)
_VERTEX_LABEL_RE = re.compile(rf"^{_LABEL}$")


@dataclass(frozen=True)
class Arrow:
    label: str
    source: str
    target: str


@dataclass(frozen=True)
class RelationExpr:
    """A rational linear combination of parallel paths."""

    terms: Tuple[Term, ...]

    @property
    def paths(self) -> Tuple[Tuple[str, ...], ...]:
        return tuple(path for _, path in self.terms)


@dataclass(frozen=True)
class AlgebraPresentation:
    vertices: Tuple[str, ...]
    arrows: Tuple[Arrow, ...]
    relations: Tuple[RelationExpr, ...]

    def vertex_index(self, label: str) -> int:
        return self.vertices.index(label)

    def arrow_index(self, label: str) -> int:
        for index, arrow in enumerate(self.arrows):
            if arrow.label == label:
                return index
        raise KeyError(label)

    def arrow(self, label: str) -> Arrow:
        return self.arrows[self.arrow_index(label)]

    def path_ends(self, path: Tuple[str, ...]) -> Tuple[str, str]:
        return self.arrow(path[0]).source, self.arrow(path[-1]).target


@dataclass(frozen=True)
class ScannedTerm:
    coefficient: Scalar
    path: Tuple[str, ...]
    column: int


def parse_terms(body: str, line: int, column: int, error=QuiverSyntaxError) -> List[ScannedTerm]:
    """
    Scan `c1*p1 + c2*p2 - ...` into terms; column is where body starts on its line.

    Paths are returned as label tuples; no validation against a quiver happens here.
    """
    terms: List[ScannedTerm] = []
    position = 0
    while position < len(body):
        match = _TERM_RE.match(body, position)
        if match is None or match.end() == position:
            raise error("expected a term such as 2*a.b", line, column + position)
        sign = match.group("sign")
        if terms and sign is None:
            raise error("expected '+' or '-' between terms", line, column + position)
        text = match.group("coefficient") or "1"
        _, _, denominator = text.partition("/")
        if denominator and int(denominator) == 0:
            raise error("zero denominator", line, column + match.start("coefficient"))
        coefficient = Fraction(text)
        if coefficient == 0:
            raise error("zero coefficient", line, column + match.start("coefficient"))
        if sign == "-":
            coefficient = -coefficient
        terms.append(
            ScannedTerm(to_scalar(coefficient), tuple(match.group("path").split(".")), column + match.start("path"))
        )
        position = match.end()
    if not terms:
        raise error("empty linear combination", line, column)
    return terms


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.vertices: List[str] = []
        self.vertex_line = 0
        self.arrows: List[Arrow] = []
        self.arrow_by_label: Dict[str, Arrow] = {}
        self.relations: List[RelationExpr] = []

    def parse(self) -> AlgebraPresentation:
        for number, raw in enumerate(self.text.splitlines(), start=1):
            content = raw.split("#", 1)[0].rstrip()
            stripped = content.lstrip()
            if not stripped:
                continue
            indent = len(content) - len(stripped)
            if stripped.startswith("vertices"):
                self._vertices(stripped, number, indent)
            elif stripped.startswith("arrow"):
                self._arrow(stripped, number, indent)
            elif stripped.startswith("relation"):
                self._relation(stripped, number, indent)
            else:
                raise QuiverSyntaxError(f"unknown directive '{stripped.split()[0]}'", number, indent + 1)
        if not self.vertex_line:
            raise QuiverSyntaxError("missing 'vertices:' line", 1, 1)
        return AlgebraPresentation(tuple(self.vertices), tuple(self.arrows), tuple(self.relations))

    def _vertices(self, text: str, line: int, indent: int):
        match = _VERTICES_RE.match(text)
        if match is None:
            raise QuiverSyntaxError("expected 'vertices: v1 v2 ...'", line, indent + 1)
        if self.vertex_line:
            raise QuiverSyntaxError(f"vertices already declared on line {self.vertex_line}", line, indent + 1)
        if self.arrows or self.relations:
            raise QuiverSyntaxError("vertices must be declared before arrows and relations", line, indent + 1)
        body_start = match.start("body")
        labels = match.group("body").split()
        if not labels:
            raise QuiverSyntaxError("no vertices declared", line, indent + body_start + 1)
        for token in re.finditer(r"\S+", match.group("body")):
            label = token.group()
            column = indent + body_start + token.start() + 1
            if not _VERTEX_LABEL_RE.match(label):
                raise QuiverSyntaxError(f"invalid vertex label '{label}'", line, column)
            if label in self.vertices:
                raise QuiverSyntaxError(f"duplicate vertex '{label}'", line, column)
            self.vertices.append(label)
        self.vertex_line = line

    def _arrow(self, text: str, line: int, indent: int):
        if not self.vertex_line:
            raise QuiverSyntaxError("arrow before 'vertices:' line", line, indent + 1)
        match = _ARROW_RE.match(text)
        if match is None:
            raise QuiverSyntaxError("expected 'arrow <label>: <source> -> <target>'", line, indent + 1)
        label = match.group("label")
        if label in self.arrow_by_label:
            raise QuiverSyntaxError(f"duplicate arrow '{label}'", line, indent + match.start("label") + 1)
        if label == "id":
            raise QuiverSyntaxError("'id' is reserved for trivial paths", line, indent + match.start("label") + 1)
        for end in ("source", "target"):
            if match.group(end) not in self.vertices:
                raise QuiverSyntaxError(
                    f"unknown vertex '{match.group(end)}'", line, indent + match.start(end) + 1
                )
        arrow = Arrow(label, match.group("source"), match.group("target"))
        self.arrows.append(arrow)
        self.arrow_by_label[label] = arrow

    def _relation(self, text: str, line: int, indent: int):
        match = _RELATION_RE.match(text)
        if match is None:
            raise QuiverSyntaxError("expected 'relation <terms>'", line, indent + 1)
        column = indent + match.start("body") + 1
        scanned = parse_terms(match.group("body"), line, column)
        ends = None
        seen = set()
        for term in scanned:
            term_ends = self._check_path(term.path, line, term.column)
            if len(term.path) < 2:
                raise QuiverSyntaxError(
                    f"relation path '{'.'.join(term.path)}' has length < 2", line, term.column
                )
            if ends is None:
                ends = term_ends
            elif term_ends != ends:
                raise QuiverSyntaxError(
                    f"path '{'.'.join(term.path)}' runs {term_ends[0]} -> {term_ends[1]}, "
                    f"expected {ends[0]} -> {ends[1]}",
                    line,
                    term.column,
                )
            if term.path in seen:
                raise QuiverSyntaxError(f"duplicate path '{'.'.join(term.path)}'", line, term.column)
            seen.add(term.path)
        self.relations.append(RelationExpr(tuple((term.coefficient, term.path) for term in scanned)))

    def _check_path(self, path: Tuple[str, ...], line: int, column: int) -> Tuple[str, str]:
        offset = column
        previous = None
        for label in path:
            arrow = self.arrow_by_label.get(label)
            if arrow is None:
                raise QuiverSyntaxError(f"unknown arrow '{label}'", line, offset)
            if previous is not None and previous.target != arrow.source:
                raise QuiverSyntaxError(
                    f"'{previous.label}' ends at {previous.target} but '{label}' starts at {arrow.source}",
                    line,
                    offset,
                )
            previous = arrow
            offset += len(label) + 1
        return self.arrow_by_label[path[0]].source, self.arrow_by_label[path[-1]].target


def parse_algebra(text: str) -> AlgebraPresentation:
    """Parse .quiver text; raises QuiverSyntaxError with the offending line and column."""
    presentation = _Parser(text).parse()
    logger.debug(
        f"Parsed quiver with {len(presentation.vertices)} vertices, "
        f"{len(presentation.arrows)} arrows, {len(presentation.relations)} relations"
    )
    return presentation


def load_presentation(path: Union[str, Path]) -> AlgebraPresentation:
    return parse_algebra(Path(path).read_text(encoding="utf-8"))


def render_terms(terms) -> str:
    parts: List[str] = []
    for index, (coefficient, path) in enumerate(terms):
        magnitude = abs(coefficient)
        body = ".".join(path) if path else "id"
        if magnitude != 1:
            body = f"{format_scalar(magnitude)}*{body}"
        if index == 0:
            parts.append(f"-{body}" if coefficient < 0 else body)
        else:
            parts.append(f"- {body}" if coefficient < 0 else f"+ {body}")
    return " ".join(parts)


def render_presentation(presentation: AlgebraPresentation) -> str:
    lines = ["vertices: " + " ".join(presentation.vertices)]
    lines.extend(f"arrow {arrow.label}: {arrow.source} -> {arrow.target}" for arrow in presentation.arrows)
    lines.extend(f"relation {render_terms(relation.terms)}" for relation in presentation.relations)
    return "\n".join(lines) + "\n"
