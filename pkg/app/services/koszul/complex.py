# app/services/koszul/complex.py
"""
Differentials of the quantum Koszul resolution A^e (x) Lambda^m_q(V) of
A = S_q(V), and of the dual complex.

A wedge v^beta is a Monomial with 0/1 exponents. All indices are 0-based.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Tuple

from app.services.cyclotomic import CycScalar
from app.services.qalgebra.monomial import Monomial, mono_mul, wedges_of_degree
from app.services.qalgebra.qtuple import QTuple
from app.utils.cache import memoize

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class KoszulTerm:
    """
    sign * [left * (v_i (x) 1) - right * (1 (x) v_i)] (x) v^target
    """
    sign: int
    left: CycScalar
    right: CycScalar
    variable: int
    target: Monomial


def _scalars(beta: Monomial, i: int, q: QTuple) -> Tuple[CycScalar, CycScalar]:
    left = CycScalar.one(q.conductor)
    right = CycScalar.one(q.conductor)
    for s, b in enumerate(beta):
        if not b or s == i:
            continue
        if s < i:
            left = left * q(s, i)
        else:
            right = right * q(i, s)
    return left, right


def _flip(beta: Monomial, i: int) -> Monomial:
    return Monomial(1 - b if s == i else b for s, b in enumerate(beta))


@memoize()
def koszul_d(m: int, q: QTuple) -> Dict[Monomial, Tuple[KoszulTerm, ...]]:
    """
    d_m(1 (x) 1 (x) v^beta) for every |beta| = m.

    The sum runs over i with beta_i = 1, with sign (-1)^(sum_{s<i} beta_s),
    left scalar prod_{s<=i} q_si^beta_s and right scalar prod_{s>=i} q_is^beta_s.
    """
    table: Dict[Monomial, Tuple[KoszulTerm, ...]] = {}
    for beta in wedges_of_degree(q.n, m):
        terms: List[KoszulTerm] = []
        for i, b in enumerate(beta):
            if not b:
                continue
            sign = -1 if sum(beta[:i]) % 2 else 1
            left, right = _scalars(beta, i, q)
            terms.append(KoszulTerm(sign, left, right, i, _flip(beta, i)))
        table[beta] = tuple(terms)
    return table


@memoize()
def koszul_d_star(m: int, q: QTuple) -> Dict[Monomial, Tuple[KoszulTerm, ...]]:
    """
    Dual differential on m-cochains: for each |gamma| = m the terms landing on
    gamma + [i] for beta_i = 0. A cochain value f(v^gamma) contributes
    sign * (left * v_i f - right * f v_i) at v^(gamma + [i]).
    """
    table: Dict[Monomial, Tuple[KoszulTerm, ...]] = {}
    for gamma in wedges_of_degree(q.n, m):
        terms: List[KoszulTerm] = []
        for i, b in enumerate(gamma):
            if b:
                continue
            sign = -1 if sum(gamma[:i]) % 2 else 1
            left, right = _scalars(gamma, i, q)
            terms.append(KoszulTerm(sign, left, right, i, _flip(gamma, i)))
        table[gamma] = tuple(terms)
    return table


# an element of A^e (x) Lambda: (L, R, wedge) -> scalar, acting as L (x) R
BimoduleElement = Dict[Tuple[Monomial, Monomial, Monomial], CycScalar]


def _accumulate(target: BimoduleElement, key, value: CycScalar) -> None:
    current = target.get(key)
    value = value if current is None else current + value
    if value.is_zero():
        target.pop(key, None)
    else:
        target[key] = value


def apply_d(element: BimoduleElement, m: int, q: QTuple) -> BimoduleElement:
    """A^e-linear extension of d_m: (L (x) R) d_m(1 (x) 1 (x) v^beta)."""
    table = koszul_d(m, q)
    out: BimoduleElement = {}
    for (L, R, beta), c in element.items():
        for term in table[beta]:
            unit = Monomial.unit(q.n, term.variable)
            cl, new_left = mono_mul(L, unit, q)
            cr, new_right = mono_mul(unit, R, q)
            _accumulate(out, (new_left, R, term.target), c * cl * term.left * term.sign)
            _accumulate(out, (L, new_right, term.target), -(c * cr * term.right * term.sign))
    return out


def d_squared(m: int, q: QTuple) -> Dict[Monomial, BimoduleElement]:
    """
    Residual of d_{m-1} o d_m on each generator 1 (x) 1 (x) v^beta, |beta| = m.

    Empty iff the composition vanishes.
    """
    if m < 2:
        return {}
    one = Monomial.one(q.n)
    residual: Dict[Monomial, BimoduleElement] = {}
    for beta in wedges_of_degree(q.n, m):
        start: BimoduleElement = {(one, one, beta): CycScalar.one(q.conductor)}
        image = apply_d(apply_d(start, m, q), m - 1, q)
        if image:
            residual[beta] = image
    logger.debug(f"d_{m - 1} o d_{m} checked on {len(wedges_of_degree(q.n, m))} wedges")
    return residual
