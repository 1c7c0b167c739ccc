# app/services/qalgebra/render.py
"""
Element rendering.

    element := term (' + ' term)*
    term    := ['(' scalar ')' '*'] [monomial '*'] word
    word    := name ('*' name)* | 'e'

Terms are listed by polynomial degree, then by exponent vector, then by
group index, so output is deterministic.
"""

from typing import TYPE_CHECKING, Dict, List, Optional

from app.services.cyclotomic import CycScalar, render_scalar
from app.services.qalgebra.monomial import Monomial

if TYPE_CHECKING:
    from app.services.group.group import Group
    from app.services.qalgebra.skew import SkewElement


def render_term(coeff: CycScalar, mono: Optional[Monomial], word: str, extra: str = "") -> str:
    parts: List[str] = []
    if not coeff.is_one():
        parts.append(f"({render_scalar(coeff)})")
    if mono is not None and mono.degree:
        parts.append(mono.render())
    if extra:
        parts.append(extra)
    if word != "e" or not parts:
        parts.append(word)
    return "*".join(parts)


def _word(G: Optional["Group"], g: int) -> str:
    return G.word(g) if G is not None else f"g[{g}]"


def render_skew(x: "SkewElement", G: Optional["Group"] = None) -> str:
    if x.is_zero():
        return "0"
    return " + ".join(render_term(c, mono, _word(G, g)) for mono, g, c in x)


def render_group_algebra(coeffs: Dict[int, CycScalar], G: Optional["Group"] = None) -> str:
    """Render sum c_g g, ordered by group index."""
    items = [(g, c) for g, c in sorted(coeffs.items()) if not c.is_zero()]
    if not items:
        return "0"
    return " + ".join(render_term(c, None, _word(G, g)) for g, c in items)


def render_filtered(terms: Dict[tuple, CycScalar], G: Optional["Group"] = None) -> str:
    """Render sum c * v^alpha * g * t^k for terms keyed by (Monomial, g, k)."""
    items = [(key, c) for key, c in terms.items() if not c.is_zero()]
    if not items:
        return "0"
    items.sort(key=lambda kv: (kv[0][2], kv[0][0].degree, tuple(-a for a in kv[0][0]), kv[0][1]))
    out = []
    for (mono, g, power), c in items:
        t = "" if power == 0 else ("t" if power == 1 else f"t^{power}")
        out.append(render_term(c, mono, _word(G, g), t))
    return " + ".join(out)


def render_linear(coeffs: Dict[int, CycScalar]) -> str:
    """Render a linear form sum c_i v_i."""
    items = [(i, c) for i, c in sorted(coeffs.items()) if not c.is_zero()]
    if not items:
        return "0"
    return " + ".join(
        f"v{i + 1}" if c.is_one() else f"({render_scalar(c)})*v{i + 1}" for i, c in items
    )
