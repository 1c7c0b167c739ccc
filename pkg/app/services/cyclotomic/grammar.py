# app/services/cyclotomic/grammar.py
"""
Scalar literals.

    scalar := term (('+'|'-') term)*
    term   := rat | rat '*' 'z^' int | 'z^' int
    rat    := int ('/' uint)?

`z` is zeta_N for the conductor in force. Whitespace is ignored.
"""

import re
from fractions import Fraction
from typing import List, Optional

from app.services.cyclotomic.field import CycScalar, root_of_unity, zeta_exponent
from app.utils.error_handling import ProblemParseError

_TERM = re.compile(
    r"(?P<rat>[+-]?\d+(?:/\d+)?)(?:\*z\^(?P<e1>[+-]?\d+))?"
    r"|z\^(?P<e2>[+-]?\d+)"
)


def parse_scalar(text: str, conductor: int, line: Optional[int] = None) -> CycScalar:
    """
    Parse a scalar literal into Q(zeta_conductor).

    Args:
        text: Literal in the scalar grammar
        conductor: Conductor N that `z` refers to
        line: Line number used in error messages

    Returns:
        The parsed scalar

    Raises:
        ProblemParseError: On any syntax error
    """
    src = "".join(text.split())
    if not src:
        raise ProblemParseError("empty scalar", line)
    total = CycScalar.zero(conductor)
    pos = 0
    sign = 1
    if src[0] in "+-" and not src[1:2].isdigit():
        # leading sign applied to a bare z^k term
        sign = -1 if src[0] == "-" else 1
        pos = 1
    while True:
        match = _TERM.match(src, pos)
        if match is None:
            raise ProblemParseError(f"bad scalar term at '{src[pos:]}' in '{text}'", line)
        if match.group("rat") is not None:
            value = CycScalar.from_rational(conductor, Fraction(match.group("rat")))
            if match.group("e1") is not None:
                value = value * root_of_unity(conductor, int(match.group("e1")))
        else:
            value = root_of_unity(conductor, int(match.group("e2")))
        total = total + value if sign > 0 else total - value
        pos = match.end()
        if pos == len(src):
            return total
        if src[pos] not in "+-":
            raise ProblemParseError(f"expected '+' or '-' at '{src[pos:]}' in '{text}'", line)
        sign = 1 if src[pos] == "+" else -1
        pos += 1
        if pos == len(src):
            raise ProblemParseError(f"dangling operator in '{text}'", line)


def _rat(value: Fraction) -> str:
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


def render_scalar(value: CycScalar) -> str:
    """
    Deterministic literal for a scalar; parse_scalar inverts it.

    Roots of unity print as `z^k` (or `-1*z^k`), everything else in the
    power basis.
    """
    if value.is_zero():
        return "0"
    if value.is_rational():
        return _rat(value.coeffs[0])
    k = zeta_exponent(value)
    if k is not None:
        return f"z^{k}"
    k = zeta_exponent(-value)
    if k is not None:
        return f"-1*z^{k}"
    parts: List[str] = []
    for power, c in enumerate(value.coeffs):
        if c == 0:
            continue
        if power == 0:
            body = _rat(abs(c))
        elif abs(c) == 1:
            body = f"z^{power}"
        else:
            body = f"{_rat(abs(c))}*z^{power}"
        if not parts:
            if c < 0:
                body = f"-{_rat(abs(c))}*z^{power}" if power else f"-{body}"
            parts.append(body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)
