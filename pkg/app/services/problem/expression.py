# app/services/problem/expression.py
"""
Element expressions.

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := '(' scalar ')' | rat | 'z^' int | 'v' int ['^' uint]
            | 't' ['^' uint] | 'e' | name ['^' uint]

Factors multiply left to right. `name` must be a declared generator.
"""

import re
from typing import Iterable, List, Optional, Tuple

from app.schemas.problem import Expression, Factor, FactorKind, Term
from app.services.cyclotomic import CycScalar, parse_scalar, root_of_unity
from app.utils.error_handling import ProblemParseError

_TOKEN = re.compile(
    r"\s*(?:"
    r"(?P<paren>\()"
    r"|(?P<rat>\d+(?:/\d+)?)"
    r"|z\^(?P<zexp>[+-]?\d+)"
    r"|(?P<name>[A-Za-z_][A-Za-z0-9_]*)(?:\^(?P<power>\d+))?"
    r"|(?P<op>[*+-])"
    r")"
)
_VARIABLE = re.compile(r"v(\d+)$")
RESERVED = ("e", "t", "z")


def _closing(text: str, start: int, line: Optional[int]) -> int:
    depth = 0
    for pos in range(start, len(text)):
        if text[pos] == "(":
            depth += 1
        elif text[pos] == ")":
            depth -= 1
            if depth == 0:
                return pos
    raise ProblemParseError(f"unbalanced parenthesis in '{text}'", line)


def _tokens(text: str, line: Optional[int]) -> List[Tuple[str, object]]:
    out: List[Tuple[str, object]] = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if match is None or match.end() == pos:
            raise ProblemParseError(f"unexpected '{text[pos:].strip()}' in '{text}'", line)
        if match.group("paren"):
            end = _closing(text, match.start("paren"), line)
            out.append(("scalar", text[match.end():end]))
            pos = end + 1
            continue
        if match.group("rat") is not None:
            out.append(("rat", match.group("rat")))
        elif match.group("zexp") is not None:
            out.append(("zeta", int(match.group("zexp"))))
        elif match.group("name") is not None:
            out.append(("name", (match.group("name"), int(match.group("power") or 1))))
        else:
            out.append(("op", match.group("op")))
        pos = match.end()
    return out


def _factor(token: Tuple[str, object], conductor: int, n: int, names: Iterable[str], line: Optional[int]) -> Factor:
    kind, value = token
    if kind == "scalar":
        return Factor(kind=FactorKind.SCALAR, scalar=parse_scalar(value, conductor, line))
    if kind == "rat":
        return Factor(kind=FactorKind.SCALAR, scalar=parse_scalar(value, conductor, line))
    if kind == "zeta":
        return Factor(kind=FactorKind.SCALAR, scalar=root_of_unity(conductor, value))
    if kind != "name":
        raise ProblemParseError(f"expected a factor, got '{value}'", line)
    name, power = value
    variable = _VARIABLE.match(name)
    if variable:
        i = int(variable.group(1))
        if not 1 <= i <= n:
            raise ProblemParseError(f"variable v{i} outside 1..{n}", line)
        return Factor(kind=FactorKind.VARIABLE, index=i - 1, power=power)
    if name == "t":
        return Factor(kind=FactorKind.T, power=power)
    if name == "e":
        return Factor(kind=FactorKind.IDENTITY)
    if name not in names:
        raise ProblemParseError(f"unknown generator '{name}'", line)
    return Factor(kind=FactorKind.GENERATOR, name=name, power=power)


def parse_expression(
    text: str,
    conductor: int,
    n: int,
    names: Iterable[str],
    line: Optional[int] = None,
) -> Expression:
    """
    Parse an element expression without evaluating it.

    Raises:
        ProblemParseError: On syntax errors, unknown names or bad indices
    """
    names = list(names)
    tokens = _tokens(text, line)
    if not tokens:
        raise ProblemParseError("empty expression", line)
    terms: List[Term] = []
    pos = 0
    negative = False
    if tokens[0] in (("op", "+"), ("op", "-")):
        negative = tokens[0][1] == "-"
        pos = 1
    while True:
        factors = []
        while True:
            if pos >= len(tokens):
                raise ProblemParseError(f"expression '{text}' ends early", line)
            factors.append(_factor(tokens[pos], conductor, n, names, line))
            pos += 1
            if pos < len(tokens) and tokens[pos] == ("op", "*"):
                pos += 1
                continue
            break
        terms.append(Term(negative=negative, factors=factors))
        if pos == len(tokens):
            return Expression(text=text.strip(), terms=terms)
        kind, value = tokens[pos]
        if kind != "op" or value not in "+-":
            raise ProblemParseError(f"expected '+' or '-' in '{text}'", line)
        negative = value == "-"
        pos += 1


def term_scalar(term: Term, conductor: int) -> CycScalar:
    """Product of the scalar factors of a term, with its sign."""
    value = CycScalar.one(conductor)
    for factor in term.factors:
        if factor.kind == FactorKind.SCALAR:
            value = value * factor.scalar
    return -value if term.negative else value
