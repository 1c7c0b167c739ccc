# app/services/deform/laws.py

import logging
from typing import Dict, List, Optional, Tuple

from app.schemas.reports import CheckScope, DeformationFailure, DeformationLaw, DeformationLawReport
from app.services.cyclotomic import CycScalar
from app.services.deform.algebra import BasisKey, DeformedAlgebra
from app.services.deform.filtered import FilteredElement
from app.services.group.group import Group
from app.services.pbw.kappa import KappaMap
from app.services.qalgebra.monomial import monomials_of_degree
from app.services.qalgebra.qtuple import QTuple
from app.services.qalgebra.render import render_filtered, render_skew, render_term
from app.services.qalgebra.skew import SkewElement, skew_multiply

logger = logging.getLogger(__name__)

Pair = Tuple[BasisKey, BasisKey]


def _basis_by_degree(algebra: DeformedAlgebra, cap: int, decorations: List[int]) -> List[List[BasisKey]]:
    """Canonical basis elements v^a g by degree of v^a, the unit left out."""
    out: List[List[BasisKey]] = []
    for d in range(cap + 1):
        keys: List[BasisKey] = []
        for mono in monomials_of_degree(algebra.n, d):
            for g in decorations:
                if d == 0 and g == algebra.G.identity:
                    continue
                keys.append((mono, g))
        out.append(keys)
    return out


def _skew(algebra: DeformedAlgebra, key: BasisKey) -> SkewElement:
    return SkewElement.basis(key[0], key[1], algebra.conductor)


def _render(algebra: DeformedAlgebra, key: BasisKey) -> str:
    return render_term(CycScalar.one(algebra.conductor), key[0], algebra.G.word(key[1]))


class _TripleChecker:
    """Products of basis pairs are computed once and shared between triples."""

    def __init__(self, algebra: DeformedAlgebra):
        self.algebra = algebra
        self._products: Dict[Pair, FilteredElement] = {}
        self._skew_products: Dict[Pair, SkewElement] = {}

    def product(self, r: BasisKey, s: BasisKey) -> FilteredElement:
        key = (r, s)
        if key not in self._products:
            self._products[key] = self.algebra.multiply(
                FilteredElement.from_skew(_skew(self.algebra, r)),
                FilteredElement.from_skew(_skew(self.algebra, s)),
            )
        return self._products[key]

    def skew_product(self, r: BasisKey, s: BasisKey) -> SkewElement:
        key = (r, s)
        if key not in self._skew_products:
            algebra = self.algebra
            self._skew_products[key] = skew_multiply(_skew(algebra, r), _skew(algebra, s), algebra.q, algebra.G)
        return self._skew_products[key]

    def degree_failure(self, r: BasisKey, s: BasisKey) -> Optional[str]:
        """First t-power whose coefficient in r * s has the wrong degree."""
        product = self.product(r, s)
        expected = r[0].degree + s[0].degree
        for mono, _, power, _ in product:
            if mono.degree != expected - 2 * power:
                return f"t^{power} coefficient {render_skew(product.coefficient_of_t(power), self.algebra.G)}"
        return None

    def triple_failure(self, r: BasisKey, s: BasisKey, u: BasisKey) -> Optional[Tuple[DeformationLaw, str]]:
        algebra = self.algebra
        G, q = algebra.G, algebra.q
        x, z = _skew(algebra, r), _skew(algebra, u)

        left = algebra.multiply(self.product(r, s), FilteredElement.from_skew(z))
        right = algebra.multiply(FilteredElement.from_skew(x), self.product(s, u))
        if left != right:
            return DeformationLaw.ASSOCIATIVITY, render_filtered((left - right).terms, G)

        # mu_1(r s) u + mu_1(rs u) = mu_1(r su) + r mu_1(s u)
        xy = self.skew_product(r, s)
        yz = self.skew_product(s, u)
        lhs = skew_multiply(self.product(r, s).coefficient_of_t(1), z, q, G) + algebra.mu(1, xy, z)
        rhs = algebra.mu(1, x, yz) + skew_multiply(x, self.product(s, u).coefficient_of_t(1), q, G)
        if lhs != rhs:
            return DeformationLaw.COCYCLE, render_skew(lhs - rhs, G)
        return None


def check_deformation_laws(
    kappa: KappaMap,
    G: Group,
    q: QTuple,
    degree_cap: int = 3,
    scope: CheckScope = CheckScope.ALL,
) -> DeformationLawReport:
    """
    Check that H_{q,kappa,t} is a deformation of S_q(V) x| G up to a degree cap.

    Every triple of canonical basis elements v^a g of total polynomial degree
    at most degree_cap is checked, the unit excepted. The product must be
    associative on it and mu_1 must satisfy the Hochschild cocycle identity.
    Every pair must also satisfy deg mu_i(r (x) s) = deg r + deg s - 2i.

    With scope GENERATORS the first two factors are decorated by e and the
    generators only and the third factor is undecorated, which keeps large
    groups within reach.

    Raises:
        PbwPreconditionFailed: If kappa fails ls_check
    """
    algebra = DeformedAlgebra(kappa, G, q)
    checker = _TripleChecker(algebra)
    if scope == CheckScope.ALL:
        decorated = _basis_by_degree(algebra, degree_cap, list(range(G.order)))
        third = decorated
    else:
        decorated = _basis_by_degree(algebra, degree_cap, list(dict.fromkeys([G.identity, *G.generators])))
        third = _basis_by_degree(algebra, degree_cap, [G.identity])
    checked = 0

    for dr in range(degree_cap + 1):
        for ds in range(degree_cap + 1 - dr):
            for r in decorated[dr]:
                for s in decorated[ds]:
                    detail = checker.degree_failure(r, s)
                    if detail is not None:
                        return _failure(algebra, degree_cap, scope, checked, DeformationLaw.DEGREE, [r, s], detail)
                    for du in range(degree_cap + 1 - dr - ds):
                        for u in third[du]:
                            checked += 1
                            failure = checker.triple_failure(r, s, u)
                            if failure is not None:
                                return _failure(algebra, degree_cap, scope, checked, failure[0], [r, s, u], failure[1])

    logger.debug(f"deformation laws hold on {checked} triples; caches {algebra.cache_sizes()}")
    return DeformationLawReport(passed=True, degree_cap=degree_cap, scope=scope, triples_checked=checked)


def _failure(
    algebra: DeformedAlgebra,
    cap: int,
    scope: CheckScope,
    checked: int,
    law: DeformationLaw,
    keys: List[BasisKey],
    detail: str,
) -> DeformationLawReport:
    logger.debug(f"{law.value} law fails")
    return DeformationLawReport(
        passed=False,
        degree_cap=cap,
        scope=scope,
        triples_checked=checked,
        failure=DeformationFailure(law=law, triple=[_render(algebra, key) for key in keys], detail=detail),
    )
