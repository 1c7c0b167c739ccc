# app/services/problem/parser.py
"""
Problem file reader.

    # comment
    field N
    dim n
    q i j <scalar>
    gen <name> [[s, ...], ...]
    kappa i j := <expr>

`field` and `dim` come first. Matrix rows are row-major with entry (i, j)
the coefficient of v_i in g(v_j). Indices are 1-based in the file.
"""

import logging
import re
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

from app.schemas.problem import GeneratorDecl, KappaDecl, ProblemSpec
from app.services.cyclotomic import CycScalar, parse_scalar
from app.services.group.matrix import GroupElement
from app.services.problem.expression import RESERVED, parse_expression
from app.utils.error_handling import ProblemInvariantError, ProblemParseError

logger = logging.getLogger(__name__)

_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*$")
_VARIABLE_NAME = re.compile(r"v\d+$")
_KAPPA = re.compile(r"kappa\s+(\d+)\s+(\d+)\s*:=\s*(.+)$")
_Q = re.compile(r"q\s+(\d+)\s+(\d+)\s+(.+)$")
_GEN = re.compile(r"gen\s+(\S+)\s+(\[.*\])\s*$")


def _int(text: str, what: str, line: int) -> int:
    try:
        value = int(text)
    except ValueError:
        raise ProblemParseError(f"{what} must be an integer, got '{text}'", line)
    if value < 1:
        raise ProblemInvariantError(f"{what} must be positive", line)
    return value


def _index(text: str, n: int, line: int) -> int:
    i = int(text)
    if not 1 <= i <= n:
        raise ProblemInvariantError(f"index {i} outside 1..{n}", line)
    return i - 1


def parse_matrix(text: str, conductor: int, line: int) -> List[List[CycScalar]]:
    """Parse `[[a, b], [c, d]]` into rows of scalars."""
    src = "".join(text.split())
    if not (src.startswith("[[") and src.endswith("]]")):
        raise ProblemParseError(f"matrix must look like [[...],...], got '{text.strip()}'", line)
    rows = src[2:-2].split("],[")
    parsed = []
    for row in rows:
        if "[" in row or "]" in row:
            raise ProblemParseError(f"malformed matrix row '{row}'", line)
        parsed.append([parse_scalar(cell, conductor, line) for cell in row.split(",")])
    return parsed


class _Reader:
    def __init__(self) -> None:
        self.conductor: Optional[int] = None
        self.dimension: Optional[int] = None
        self.q: Dict[Tuple[int, int], CycScalar] = {}
        self.q_lines: Dict[Tuple[int, int], int] = {}
        self.generators: List[GeneratorDecl] = []
        self.kappa: List[KappaDecl] = []
        self.kappa_lines: Dict[Tuple[int, int], int] = {}

    def header(self, line: int) -> Tuple[int, int]:
        if self.conductor is None:
            raise ProblemParseError("missing 'field N' before this line", line)
        if self.dimension is None:
            raise ProblemParseError("missing 'dim n' before this line", line)
        return self.conductor, self.dimension

    def read(self, raw: str, line: int) -> None:
        text = raw.split("#", 1)[0].strip()
        if not text:
            return
        keyword = text.split(None, 1)[0]
        if keyword == "field":
            if self.conductor is not None:
                raise ProblemParseError("duplicate 'field' line", line)
            self.conductor = _int(text[5:].strip(), "field conductor", line)
        elif keyword == "dim":
            if self.dimension is not None:
                raise ProblemParseError("duplicate 'dim' line", line)
            self.dimension = _int(text[3:].strip(), "dimension", line)
        elif keyword == "q":
            self._q(text, line)
        elif keyword == "gen":
            self._gen(text, line)
        elif keyword == "kappa":
            self._kappa(text, line)
        else:
            raise ProblemParseError(f"unknown directive '{keyword}'", line)

    def _q(self, text: str, line: int) -> None:
        conductor, n = self.header(line)
        match = _Q.match(text)
        if match is None:
            raise ProblemParseError("expected 'q i j <scalar>'", line)
        i, j = _index(match.group(1), n, line), _index(match.group(2), n, line)
        value = parse_scalar(match.group(3), conductor, line)
        if i == j and not value.is_one():
            raise ProblemInvariantError(f"q_{i + 1}{i + 1} must be 1", line)
        if (i, j) in self.q and self.q[(i, j)] != value:
            raise ProblemInvariantError(f"q_{i + 1}{j + 1} assigned twice", line)
        if (j, i) in self.q and not (self.q[(j, i)] * value).is_one():
            raise ProblemInvariantError(f"q_{i + 1}{j + 1} is not the inverse of q_{j + 1}{i + 1}", line)
        if i != j and value.root_order() is None:
            raise ProblemInvariantError(f"q_{i + 1}{j + 1} is not a root of unity", line)
        self.q[(i, j)] = value
        self.q_lines[(i, j)] = line

    def _gen(self, text: str, line: int) -> None:
        conductor, n = self.header(line)
        match = _GEN.match(text)
        if match is None:
            raise ProblemParseError("expected 'gen <name> [[...],...]'", line)
        name = match.group(1)
        if not _NAME.match(name) or name in RESERVED or _VARIABLE_NAME.match(name):
            raise ProblemParseError(f"'{name}' cannot be used as a generator name", line)
        if name in {g.name for g in self.generators}:
            raise ProblemParseError(f"generator '{name}' declared twice", line)
        rows = parse_matrix(match.group(2), conductor, line)
        if len(rows) != n or any(len(row) != n for row in rows):
            raise ProblemInvariantError(f"generator '{name}' must be {n}x{n}", line)
        if not GroupElement(rows).is_invertible():
            raise ProblemInvariantError(f"generator '{name}' is singular", line)
        self.generators.append(GeneratorDecl(name=name, rows=rows, line=line))

    def _kappa(self, text: str, line: int) -> None:
        conductor, n = self.header(line)
        match = _KAPPA.match(text)
        if match is None:
            raise ProblemParseError("expected 'kappa i j := <expr>'", line)
        i, j = _index(match.group(1), n, line), _index(match.group(2), n, line)
        if (i, j) in self.kappa_lines:
            raise ProblemInvariantError(f"kappa {i + 1} {j + 1} assigned twice", line)
        names = [g.name for g in self.generators]
        expression = parse_expression(match.group(3), conductor, n, names, line)
        self.kappa.append(KappaDecl(i=i, j=j, expression=expression, line=line))
        self.kappa_lines[(i, j)] = line

    def finish(self) -> ProblemSpec:
        if self.conductor is None:
            raise ProblemParseError("missing 'field N' line")
        if self.dimension is None:
            raise ProblemParseError("missing 'dim n' line")
        return ProblemSpec(
            conductor=self.conductor,
            dimension=self.dimension,
            q=self.q,
            generators=self.generators,
            kappa=self.kappa,
        )


def parse_problem(text: str) -> ProblemSpec:
    """
    Parse a problem file.

    Args:
        text: Full file contents

    Returns:
        ProblemSpec with 0-based indices

    Raises:
        ProblemParseError: On syntax errors, with the offending line number
        ProblemInvariantError: When a line parses but breaks an invariant
    """
    reader = _Reader()
    for number, raw in enumerate(text.splitlines(), start=1):
        reader.read(raw, number)
    spec = reader.finish()
    logger.debug(
        f"Parsed problem: field {spec.conductor}, dim {spec.dimension}, "
        f"{len(spec.generators)} generators, {len(spec.kappa)} kappa lines"
    )
    return spec


def read_problem(path: Union[str, Path]) -> ProblemSpec:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as e:
        raise ProblemParseError(f"cannot read {path}: {e.strerror}")
    return parse_problem(text)
