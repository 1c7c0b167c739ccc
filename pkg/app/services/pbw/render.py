# app/services/pbw/render.py

from typing import List

from app.schemas.reports import GroupTerm, KappaEntry, KappaModel
from app.services.cyclotomic import render_scalar
from app.services.group.group import Group
from app.services.pbw.kappa import KappaMap
from app.services.qalgebra.render import render_group_algebra


def kappa_lines(kappa: KappaMap, G: Group) -> List[str]:
    """`kappa i j := ...` lines that the problem grammar reads back."""
    lines = []
    for (i, j) in sorted(kappa.values):
        terms = [f"({render_scalar(c)})*{G.word(g)}" for g, c in sorted(kappa.values[(i, j)].items())]
        lines.append(f"kappa {i + 1} {j + 1} := " + " + ".join(terms))
    return lines


def kappa_model(kappa: KappaMap, G: Group) -> KappaModel:
    """Report form of kappa on pairs i < j, 1-based."""
    entries = []
    for (i, j) in sorted(kappa.values):
        value = kappa.values[(i, j)]
        entries.append(KappaEntry(
            i=i + 1,
            j=j + 1,
            value=render_group_algebra(value, G),
            terms=[GroupTerm(coefficient=render_scalar(c), element=G.word(g)) for g, c in sorted(value.items())],
        ))
    return KappaModel(entries=entries, lines=kappa_lines(kappa, G))
