# app/services/koszul/conversion.py

from typing import Dict, Tuple

from app.services.cyclotomic import CycScalar
from app.services.koszul.cochain import ConstantCochain
from app.services.pbw.kappa import GroupAlgebra, KappaMap, ga_add
from app.services.qalgebra.qtuple import QTuple


def cochain_to_kappa(c: ConstantCochain, q: QTuple) -> KappaMap:
    """kappa_g(v_i, v_j) = alpha^g_ij for i < j."""
    values: Dict[Tuple[int, int], GroupAlgebra] = {}
    for g, r, s, value in c.items():
        values.setdefault((r, s), {})[g] = value
    return KappaMap(q, values)


def kappa_to_cochain(kappa: KappaMap) -> ConstantCochain:
    return ConstantCochain(kappa.n, kappa.conductor, {(g, i, j): c for g, i, j, c in kappa.support()})


def kappa_from_mu1(table: Dict[Tuple[int, int], Dict[int, CycScalar]], q: QTuple) -> KappaMap:
    """
    Recover kappa from mu_1 on generators through
    sum_g kappa_g(v_j, v_i) g = mu_1(v_j (x) v_i) - q_ji mu_1(v_i (x) v_j).
    """
    lower: Dict[Tuple[int, int], GroupAlgebra] = {}
    for i in range(q.n):
        for j in range(i + 1, q.n):
            value: GroupAlgebra = {}
            for g, c in table.get((j, i), {}).items():
                ga_add(value, g, c)
            for g, c in table.get((i, j), {}).items():
                ga_add(value, g, -(q(j, i) * c))
            lower[(j, i)] = value
    return KappaMap.from_table(q, lower)
