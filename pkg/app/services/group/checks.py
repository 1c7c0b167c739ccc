# app/services/group/checks.py

import logging
from typing import List

from app.schemas.reports import ActionCheckKind, ActionCheckReport, ActionViolation, CheckScope
from app.services.cyclotomic import CycScalar, render_scalar
from app.services.group.group import Group
from app.services.group.matrix import GroupElement
from app.services.qalgebra.qtuple import QTuple
from app.utils.error_handling import ConductorMismatch, DimensionMismatch, PreconditionFailed

logger = logging.getLogger(__name__)


def q_action_residual(g: GroupElement, q: QTuple, i: int, j: int, k: int, l: int) -> CycScalar:
    """
    Coefficient of v_k v_l (k <= l) in g(v_i v_j - q_ij v_j v_i).

    g^i_k is the coefficient of v_k in g(v_i), i.e. entry (k, i).
    """
    gik, gjl = g.entry(k, i), g.entry(l, j)
    gil, gjk = g.entry(l, i), g.entry(k, j)
    qij, qlk = q(i, j), q(l, k)
    return gik * gjl * (1 - qij * qlk) + gil * gjk * (qlk - qij)


def exterior_residual(g: GroupElement, q: QTuple, i: int, j: int, k: int, l: int) -> CycScalar:
    """Residual of the identity under which g extends to Lambda_q(V), for k < l."""
    gik, gjl = g.entry(k, i), g.entry(l, j)
    gil, gjk = g.entry(l, i), g.entry(k, j)
    qij, qlk = q(i, j), q(l, k)
    return (1 - qij * qlk) * gik * gjl + (qij - qlk) * gil * gjk


def _elements_in_scope(G: Group, scope: CheckScope) -> List[int]:
    if scope == CheckScope.ALL:
        return list(range(G.order))
    return list(dict.fromkeys(G.generators))


def _check(G: Group, q: QTuple, kind: ActionCheckKind, scope: CheckScope) -> ActionCheckReport:
    if G.dimension != q.n:
        raise DimensionMismatch(
            f"group acts in dimension {G.dimension} but the q-tuple has dimension {q.n}",
            {"group": G.dimension, "q": q.n},
        )
    residual = q_action_residual if kind == ActionCheckKind.Q_ACTION else exterior_residual
    # the symmetric algebra also constrains the square v_k^2
    offset = 0 if kind == ActionCheckKind.Q_ACTION else 1
    elements = _elements_in_scope(G, scope)
    violations: List[ActionViolation] = []
    n = q.n
    for g in elements:
        element = G[g]
        if element.is_diagonal():
            continue
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(n):
                    for l in range(k + offset, n):
                        value = residual(element, q, i, j, k, l)
                        if not value.is_zero():
                            violations.append(ActionViolation(
                                element=G.word(g),
                                indices=[i + 1, j + 1, k + 1, l + 1],
                                residual=render_scalar(value),
                            ))
    passed = not violations
    logger.debug(f"{kind.value} check over {len(elements)} elements: {'pass' if passed else 'fail'}")
    return ActionCheckReport(
        check=kind,
        passed=passed,
        scope=scope,
        elements_checked=len(elements),
        violations=violations,
    )


def check_q_action(G: Group, q: QTuple, scope: CheckScope = CheckScope.GENERATORS) -> ActionCheckReport:
    """
    Check that G acts on S_q(V) by algebra automorphisms.

    Generators suffice because automorphisms compose; scope=ALL checks
    every element.
    """
    return _check(G, q, ActionCheckKind.Q_ACTION, scope)


def check_exterior_extension(G: Group, q: QTuple, scope: CheckScope = CheckScope.GENERATORS) -> ActionCheckReport:
    """Check that the action extends to the quantum exterior algebra Lambda_q(V)."""
    return _check(G, q, ActionCheckKind.EXTERIOR_EXTENSION, scope)


def require_action_checks(G: Group, q: QTuple) -> None:
    """
    Raise PreconditionFailed unless G acts on S_q(V) and the action extends
    to Lambda_q(V).
    """
    if G.conductor != q.conductor:
        raise ConductorMismatch(G.conductor, q.conductor)
    q_report = check_q_action(G, q, CheckScope.GENERATORS)
    ext_report = check_exterior_extension(G, q, CheckScope.GENERATORS)
    if not (q_report.passed and ext_report.passed):
        raise PreconditionFailed(
            "the group action is not compatible with the q-tuple",
            {"q_action": q_report.model_dump(mode="json"),
             "exterior_extension": ext_report.model_dump(mode="json")},
        )
