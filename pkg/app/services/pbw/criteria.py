# app/services/pbw/criteria.py

import logging
from typing import Dict, List, Set

from app.schemas.reports import DiamondReport, LsCondition, LsReport, LsViolation
from app.services.cyclotomic import CycScalar, render_scalar
from app.services.group.group import Group
from app.services.group.matrix import GroupElement
from app.services.pbw.kappa import GroupAlgebra, KappaMap
from app.services.pbw.rewriting import RewriteSystem, subtract, to_monomial_terms
from app.services.qalgebra.qtuple import QTuple
from app.services.qalgebra.render import render_filtered, render_group_algebra, render_linear

logger = logging.getLogger(__name__)


def quantum_minor_det(h: GroupElement, i: int, j: int, k: int, l: int, q: QTuple) -> CycScalar:
    """ddet_ijkl(h) = h^j_l h^i_k - q_ji h^i_l h^j_k, with h^j_l = entry (l, j)."""
    return h.entry(l, j) * h.entry(k, i) - q(j, i) * h.entry(l, i) * h.entry(k, j)


def _linear_add(target: Dict[int, CycScalar], image, factor: CycScalar) -> None:
    for k, value in image:
        current = target.get(k)
        target[k] = value * factor if current is None else current + value * factor


def _overlap_residual(kappa: KappaMap, G: Group, q: QTuple, g: int, i: int, j: int, k: int) -> Dict[int, CycScalar]:
    """
    (q_ki q_kj g(v_k) - v_k) kappa_g(v_j, v_i) + (q_kj v_j - q_ji g(v_j)) kappa_g(v_k, v_i)
    + (g(v_i) - q_ji q_ki v_i) kappa_g(v_k, v_j), as a linear form.
    """
    element = G[g]
    kji = kappa.component(g, j, i)
    kki = kappa.component(g, k, i)
    kkj = kappa.component(g, k, j)
    out: Dict[int, CycScalar] = {}
    if not kji.is_zero():
        _linear_add(out, element.image(k), q(k, i) * q(k, j) * kji)
        _linear_add(out, ((k, CycScalar.one(q.conductor)),), -kji)
    if not kki.is_zero():
        _linear_add(out, ((j, CycScalar.one(q.conductor)),), q(k, j) * kki)
        _linear_add(out, element.image(j), -(q(j, i) * kki))
    if not kkj.is_zero():
        _linear_add(out, element.image(i), kkj)
        _linear_add(out, ((i, CycScalar.one(q.conductor)),), -(q(j, i) * q(k, i) * kkj))
    return {v: c for v, c in out.items() if not c.is_zero()}


def ls_check(kappa: KappaMap, G: Group, q: QTuple) -> LsReport:
    """
    Check the two criteria under which kappa defines a quantum Drinfeld
    Hecke algebra: the overlap identity for every g and i < j < k, and
    conjugation covariance kappa_{h^-1 g h}(v_j, v_i) =
    sum_{k<l} ddet_ijkl(h) kappa_g(v_l, v_k) for generators h.
    """
    n = q.n
    violations: List[LsViolation] = []
    support = sorted(kappa.group_support())

    for g in support:
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(j + 1, n):
                    residual = _overlap_residual(kappa, G, q, g, i, j, k)
                    if residual:
                        violations.append(LsViolation(
                            condition=LsCondition.OVERLAP,
                            element=G.word(g),
                            witness=[i + 1, j + 1, k + 1],
                            residual=render_linear(residual),
                        ))

    for h in dict.fromkeys(G.generators):
        h_inv = G.inv(h)
        element = G[h]
        # kappa_{h^-1 g h} or kappa_g nonzero only near the support
        candidates: Set[int] = set(support) | {G.conjugate(h, x) for x in support}
        for g in sorted(candidates):
            moved = G.conjugate(h_inv, g)
            for i in range(n):
                for j in range(i + 1, n):
                    lhs = kappa.component(moved, j, i)
                    rhs = CycScalar.zero(q.conductor)
                    for k in range(n):
                        for l in range(k + 1, n):
                            value = kappa.component(g, l, k)
                            if not value.is_zero():
                                rhs = rhs + quantum_minor_det(element, i, j, k, l, q) * value
                    if lhs != rhs:
                        violations.append(LsViolation(
                            condition=LsCondition.CONJUGATION,
                            element=G.word(g),
                            witness=[i + 1, j + 1],
                            conjugator=G.word(h),
                            residual=render_scalar(lhs - rhs),
                        ))
    passed = not violations
    logger.debug(f"ls_check: {'pass' if passed else f'{len(violations)} violations'}")
    return LsReport(passed=passed, violations=violations)


def conjugation_residual(kappa: KappaMap, G: Group, h: int, i: int, j: int) -> GroupAlgebra:
    """h kappa(v_j, v_i) h^-1 - kappa(h(v_j), h(v_i)) in CG."""
    out: GroupAlgebra = {}
    for g, c in kappa.value(j, i).items():
        x = G.conjugate(h, g)
        out[x] = out[x] + c if x in out else c
    element = G[h]
    image = kappa.bilinear(dict(element.image(j)), dict(element.image(i)))
    for g, c in image.items():
        out[g] = out[g] - c if g in out else -c
    return {g: c for g, c in out.items() if not c.is_zero()}


def diamond_check(kappa: KappaMap, G: Group, q: QTuple, system: RewriteSystem = None) -> DiamondReport:
    """
    Independent PBW test by rewriting.

    Every cubic overlap v_k v_j v_i (k > j > i) is resolved both ways and the
    normal forms compared; then h kappa(v_j, v_i) h^-1 = kappa(h v_j, h v_i)
    is checked for every generator h and i < j.
    """
    system = system or RewriteSystem(kappa, G, q)
    n = q.n
    checked = 0
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                checked += 1
                first, second = system.overlap(k, j, i)
                residual = subtract(first, second)
                if residual:
                    logger.debug(f"overlap ({k + 1},{j + 1},{i + 1}) does not resolve")
                    return DiamondReport(
                        passed=False,
                        overlaps_checked=checked,
                        overlap=[k + 1, j + 1, i + 1],
                        residual=render_filtered(to_monomial_terms(residual, n), G),
                    )
    for h in dict.fromkeys(G.generators):
        for i in range(n):
            for j in range(i + 1, n):
                residual = conjugation_residual(kappa, G, h, i, j)
                if residual:
                    return DiamondReport(
                        passed=False,
                        overlaps_checked=checked,
                        conjugation=[i + 1, j + 1],
                        conjugator=G.word(h),
                        residual=render_group_algebra(residual, G),
                    )
    return DiamondReport(passed=True, overlaps_checked=checked)
