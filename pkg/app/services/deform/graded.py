# app/services/deform/graded.py
"""
Semantic PBW test by linear algebra in T(V) x| G at t = 1.

The quotient of the filtered piece T_{<=e} x| G by the span of the relation
multiples w1 r w2 k of degree at most e is computed for e = 0..d. The
relation space is saturated under conjugation by G first, so these multiples
span the ideal's filtered pieces. The PBW property holds through degree d
exactly when the quotient dimension grows by C(n+e-1, e) |G| at each e.
"""

import logging
from math import comb
from typing import Dict, List, Tuple

from app.schemas.reports import DegreeDimension, GradedDimensionReport
from app.services.cyclotomic import CycScalar
from app.services.group.group import Group
from app.services.linalg.echelon import EchelonBasis, SparseRow
from app.services.pbw.kappa import KappaMap
from app.services.pbw.rewriting import RewriteSystem, Word, add_to, words_of_length
from app.services.qalgebra.qtuple import QTuple

logger = logging.getLogger(__name__)

Cell = Tuple[Word, int]
Relation = Dict[Cell, CycScalar]


class _Columns:
    """Column index for (word, g) cells, assigned on first use."""

    def __init__(self):
        self.index: Dict[Cell, int] = {}

    def row(self, element: Relation) -> SparseRow:
        out: SparseRow = {}
        for cell, c in element.items():
            col = self.index.setdefault(cell, len(self.index))
            out[col] = c
        return out


def _relations(kappa: KappaMap, G: Group, q: QTuple) -> List[Relation]:
    """r_ba = v_b v_a - q_ba v_a v_b - kappa(v_b, v_a) for b > a."""
    one = CycScalar.one(q.conductor)
    out: List[Relation] = []
    for a in range(q.n):
        for b in range(a + 1, q.n):
            r: Relation = {}
            add_to(r, ((b, a), G.identity), one)
            add_to(r, ((a, b), G.identity), -q(b, a))
            for g, c in kappa.value(b, a).items():
                add_to(r, ((), g), -c)
            out.append(r)
    return out


def _conjugate(system: RewriteSystem, h: int, element: Relation) -> Relation:
    """h x h^-1 for x in T(V) x| G."""
    G = system.G
    out: Relation = {}
    for (word, g), c in element.items():
        target = G.conjugate(h, g)
        for moved, value in system.act_word(h, word):
            add_to(out, (moved, target), c * value)
    return out


def _saturate(system: RewriteSystem, relations: List[Relation]) -> List[Relation]:
    """Basis of the span of G-conjugates of the relations."""
    columns = _Columns()
    span = EchelonBasis(conductor=system.q.conductor)
    basis: List[Relation] = []
    queue = list(relations)
    while queue:
        r = queue.pop()
        if not r or not span.add(columns.row(r)):
            continue
        basis.append(r)
        for h in dict.fromkeys(system.G.generators):
            queue.append(_conjugate(system, h, r))
    return basis


def _multiples(system: RewriteSystem, r: Relation, left: Word, right: Word, k: int) -> Relation:
    """left * r * right * k."""
    G = system.G
    out: Relation = {}
    for (word, g), c in r.items():
        target = G.mul(g, k)
        for moved, value in system.act_word(g, right):
            add_to(out, (left + word + moved, target), c * value)
    return out


def graded_dimension_check(kappa: KappaMap, G: Group, q: QTuple, d: int = 3) -> GradedDimensionReport:
    """
    Compare dim H_{<=e} with sum_{e' <= e} C(n+e'-1, e') |G| for e = 0..d.

    Usable whether or not kappa passes the criteria check.
    """
    n = q.n
    system = RewriteSystem(kappa, G, q)
    relations = _saturate(system, _relations(kappa, G, q))
    logger.debug(f"saturated relation space has dimension {len(relations)}")

    columns = _Columns()
    span = EchelonBasis(conductor=q.conductor)
    dimensions: List[DegreeDimension] = []
    cells = 0
    previous = 0
    first_deficient = None
    for e in range(d + 1):
        cells += (n ** e) * G.order
        # multiples of degree exactly e; lower ones are already in the span
        outer = e - 2
        for left_length in range(outer + 1):
            for left in words_of_length(n, left_length):
                for right in words_of_length(n, outer - left_length):
                    for r in relations:
                        for k in range(G.order):
                            span.add(columns.row(_multiples(system, r, left, right, k)))
        cumulative = cells - span.rank
        expected = comb(n + e - 1, e) * G.order
        actual = cumulative - previous
        previous = cumulative
        dimensions.append(DegreeDimension(degree=e, expected=expected, actual=actual))
        logger.debug(f"degree {e}: expected {expected}, quotient grows by {actual}")
        if actual != expected and first_deficient is None:
            first_deficient = e
            break
    return GradedDimensionReport(
        passed=first_deficient is None,
        cap=d,
        dimensions=dimensions,
        first_deficient=first_deficient,
    )
