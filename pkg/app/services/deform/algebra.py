# app/services/deform/algebra.py

import logging
from typing import Dict, Optional, Tuple

from app.services.cyclotomic import CycScalar
from app.services.deform.filtered import FilteredElement
from app.services.group.group import Group
from app.services.pbw.criteria import ls_check
from app.services.pbw.kappa import KappaMap
from app.services.pbw.rewriting import RewriteSystem, add_to
from app.services.qalgebra.monomial import Monomial
from app.services.qalgebra.qtuple import QTuple
from app.services.qalgebra.skew import SkewElement
from app.utils.error_handling import PbwPreconditionFailed

logger = logging.getLogger(__name__)

BasisKey = Tuple[Monomial, int]


class DeformedAlgebra:
    """
    H_{q,kappa,t} for a kappa that passes the criteria check.

    Products of basis elements v^alpha g are memoized; everything else is
    expanded bilinearly from them, with t-powers added.
    """

    def __init__(self, kappa: KappaMap, G: Group, q: QTuple, validate: bool = True):
        if validate:
            report = ls_check(kappa, G, q)
            if not report.passed:
                raise PbwPreconditionFailed(
                    "kappa fails the PBW criteria; products would depend on the reduction order",
                    {"violations": [v.model_dump(mode="json") for v in report.violations[:5]]},
                )
        self.kappa = kappa
        self.G = G
        self.q = q
        self.n = q.n
        self.conductor = q.conductor
        self.system = RewriteSystem(kappa, G, q)
        self._products: Dict[Tuple[BasisKey, BasisKey], Tuple[Tuple[Tuple[Monomial, int, int], CycScalar], ...]] = {}

    def basis_product(self, left: BasisKey, right: BasisKey):
        """Normal form of (v^a g)(v^b h) as ((mono, k, t), c) pairs."""
        key = (left, right)
        cached = self._products.get(key)
        if cached is None:
            one = CycScalar.one(self.conductor)
            terms = self.system.multiply(
                {(left[0].word(), left[1], 0): one},
                {(right[0].word(), right[1], 0): one},
            )
            cached = tuple(FilteredElement.from_terms(self.n, self.conductor, terms).terms.items())
            self._products[key] = cached
        return cached

    def multiply(self, x: FilteredElement, y: FilteredElement) -> FilteredElement:
        out: Dict[Tuple[Monomial, int, int], CycScalar] = {}
        for (a, g, s), ca in x.terms.items():
            for (b, h, r), cb in y.terms.items():
                coeff = ca * cb
                for (mono, k, power), c in self.basis_product((a, g), (b, h)):
                    add_to(out, (mono, k, power + s + r), coeff * c)
        result = FilteredElement(self.n, self.conductor)
        result.terms = out
        return result

    def mu(self, power: int, r: SkewElement, s: SkewElement) -> SkewElement:
        """Coefficient of t^power in r * s."""
        return self.multiply(FilteredElement.from_skew(r), FilteredElement.from_skew(s)).coefficient_of_t(power)

    def cache_sizes(self) -> Dict[str, int]:
        sizes = self.system.cache_sizes()
        sizes["basis_products"] = len(self._products)
        return sizes


def h_multiply(
    x: FilteredElement,
    y: FilteredElement,
    kappa: KappaMap,
    G: Group,
    q: QTuple,
    algebra: Optional[DeformedAlgebra] = None,
) -> FilteredElement:
    """
    Product in H_{q,kappa,t}: concatenate and rewrite to normal form.

    Raises:
        PbwPreconditionFailed: If kappa fails ls_check
    """
    algebra = algebra or DeformedAlgebra(kappa, G, q)
    return algebra.multiply(x, y)


def extract_mu(
    power: int,
    r: SkewElement,
    s: SkewElement,
    kappa: KappaMap,
    G: Group,
    q: QTuple,
    algebra: Optional[DeformedAlgebra] = None,
) -> SkewElement:
    """
    mu_power(r (x) s): the t^power coefficient of r * s for t-free r, s.

    Raises:
        PbwPreconditionFailed: If kappa fails ls_check
    """
    algebra = algebra or DeformedAlgebra(kappa, G, q)
    return algebra.mu(power, r, s)


def mu1_table(algebra: DeformedAlgebra) -> Dict[Tuple[int, int], Dict[int, CycScalar]]:
    """mu_1(v_i (x) v_j) for all i, j, as group-algebra elements."""
    n, conductor = algebra.n, algebra.conductor
    identity = algebra.G.identity
    table = {}
    for i in range(n):
        for j in range(n):
            value = algebra.mu(
                1,
                SkewElement.variable(n, conductor, i, identity),
                SkewElement.variable(n, conductor, j, identity),
            )
            table[(i, j)] = value.group_part()
    return table
