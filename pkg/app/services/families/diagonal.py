# app/services/families/diagonal.py

import logging
from dataclasses import dataclass
from itertools import product
from typing import Dict, List, Tuple

from app.services.cyclotomic import CycScalar
from app.services.group.group import Group
from app.services.pbw.kappa import GroupAlgebra, KappaMap, ga_add
from app.services.qalgebra.qtuple import QTuple
from app.utils.error_handling import NotDiagonal

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DiagonalAction:
    """g(v_i) = lambdas[g][i] v_i for a group acting diagonally."""
    lambdas: Tuple[Tuple[CycScalar, ...], ...]

    @classmethod
    def of(cls, G: Group) -> "DiagonalAction":
        """
        Raises:
            NotDiagonal: If some element has an off-diagonal entry
        """
        rows = []
        for g in range(G.order):
            element = G[g]
            if not element.is_diagonal():
                raise NotDiagonal(g)
            rows.append(tuple(element.entry(i, i) for i in range(element.n)))
        return cls(tuple(rows))

    def __call__(self, g: int, i: int) -> CycScalar:
        return self.lambdas[g][i]

    def character(self, g: int, exponents) -> CycScalar:
        """prod_i lambda_{g,i}^exponents_i, exponents may be negative."""
        value = CycScalar.one(self.lambdas[g][0].conductor)
        for i, e in enumerate(exponents):
            if e:
                value = value * self.lambdas[g][i] ** e
        return value


def _supports_pair(action: DiagonalAction, q: QTuple, a: int, r: int, s: int) -> bool:
    """q_{r r'} q_{s r'} = lambda_{a,r'} for every r' outside {r, s}."""
    return all(
        q(r, t) * q(s, t) == action(a, t)
        for t in range(q.n) if t not in (r, s)
    )


def _centralizer_condition(action: DiagonalAction, centralizer: List[int], r: int, s: int) -> bool:
    return all((action(h, r) * action(h, s)).is_one() for h in centralizer)


def diagonal_classify(G: Group, q: QTuple) -> List[KappaMap]:
    """
    Basis f_{r,s,a} of the PBW parameters for a diagonal action.

    f_{r,s,a}(v_r, v_s) = sum over a transversal g of G / C_G(a) of
    lambda_{g,r}^-1 lambda_{g,s}^-1 g a g^-1, emitted for r < s and class
    representatives a with q_{r r'} q_{s r'} = lambda_{a,r'} (r' != r, s) and
    lambda_{h,r} lambda_{h,s} = 1 on C_G(a).

    Raises:
        NotDiagonal: If G does not act diagonally
    """
    action = DiagonalAction.of(G)
    data = G.conjugacy_data()
    basis: List[KappaMap] = []
    for r in range(q.n):
        for s in range(r + 1, q.n):
            for c, a in enumerate(data.representatives):
                if not _supports_pair(action, q, a, r, s):
                    continue
                if not _centralizer_condition(action, data.centralizers[c], r, s):
                    continue
                value: GroupAlgebra = {}
                for g, member in zip(data.cosets[c], data.classes[c]):
                    ga_add(value, member, (action(g, r) * action(g, s)).inverse())
                basis.append(KappaMap(q, {(r, s): value}))
                logger.debug(f"f_({r + 1},{s + 1},{G.word(a)}) is a basis map")
    return basis


def _in_cone(action: DiagonalAction, q: QTuple, g: int, gamma: Tuple[int, ...]) -> bool:
    """gamma in C_g: for each i, gamma_i = -1 or prod_s q_is^gamma_s = lambda_{g,i}."""
    for i in range(q.n):
        if gamma[i] == -1:
            continue
        value = CycScalar.one(q.conductor)
        for s, e in enumerate(gamma):
            if e:
                value = value * q(i, s) ** e
        if value != action(g, i):
            return False
    return True


def diagonal_hh_dim(G: Group, q: QTuple, degree: int, poly_degree_cap: int) -> int:
    """
    Dimension of the part of HH^degree(S_q(V), S_q(V) x| G) spanned by
    v^alpha g (x) (v*)^beta with |alpha| <= poly_degree_cap.

    Counts (g, beta, alpha) with |beta| = degree, alpha - beta in C_g and
    prod_i lambda_{h,i}^(alpha_i - beta_i) = 1 for every generator h; the
    action is abelian, so G-invariance is this character condition.

    Raises:
        NotDiagonal: If G does not act diagonally
    """
    action = DiagonalAction.of(G)
    n = q.n
    invariant_under: Dict[Tuple[int, ...], bool] = {}
    count = 0
    betas = [b for b in product((0, 1), repeat=n) if sum(b) == degree]
    alphas = [a for total in range(poly_degree_cap + 1) for a in _compositions(n, total)]
    for beta in betas:
        for alpha in alphas:
            gamma = tuple(a - b for a, b in zip(alpha, beta))
            if gamma not in invariant_under:
                invariant_under[gamma] = all(
                    action.character(h, gamma).is_one() for h in dict.fromkeys(G.generators)
                )
            if not invariant_under[gamma]:
                continue
            count += sum(1 for g in range(G.order) if _in_cone(action, q, g, gamma))
    logger.debug(f"HH^{degree} up to polynomial degree {poly_degree_cap}: {count}")
    return count


def _compositions(n: int, total: int) -> List[Tuple[int, ...]]:
    if n == 1:
        return [(total,)]
    return [(k,) + rest for k in range(total + 1) for rest in _compositions(n - 1, total - k)]
