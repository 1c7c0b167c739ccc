import logging
from typing import Optional

from app.core.config import settings
from app.schemas.reports import CheckScope, DeformationLawReport, GradedDimensionReport, MultiplyReport, TPowerTerm
from app.services.deform.algebra import DeformedAlgebra
from app.services.deform.filtered import FilteredElement
from app.services.deform.graded import graded_dimension_check
from app.services.deform.laws import check_deformation_laws
from app.services.group.group import Group
from app.services.pbw.kappa import KappaMap
from app.services.qalgebra.qtuple import QTuple
from app.services.qalgebra.render import render_filtered, render_skew

logger = logging.getLogger(__name__)


class DeformService:
    """
    Service for computing in H_{q,kappa,t} and checking that it deforms S_q(V) x| G.
    """

    def multiply(
        self,
        x: FilteredElement,
        y: FilteredElement,
        kappa: KappaMap,
        G: Group,
        q: QTuple,
        t_cap: Optional[int] = None,
    ) -> MultiplyReport:
        """
        Multiply two elements and list the t-power coefficients of the product.

        Args:
            x: Left factor
            y: Right factor
            kappa: Parameter map, must pass the criteria check
            G: Enumerated group
            q: Commutation scalars
            t_cap: Highest t-power listed in the expansion (default: all)

        Returns:
            MultiplyReport
        """
        logger.info(f"Multiplying in H with {len(x.terms)} x {len(y.terms)} terms")
        algebra = DeformedAlgebra(kappa, G, q)
        product = algebra.multiply(x, y)
        top = product.t_degree() or 0
        if t_cap is not None:
            top = min(top, t_cap)
        expansion = [
            TPowerTerm(t_power=k, element=render_skew(product.coefficient_of_t(k), G))
            for k in range(top + 1)
        ]
        return MultiplyReport(
            left=render_filtered(x.terms, G),
            right=render_filtered(y.terms, G),
            product=render_filtered(product.terms, G),
            expansion=expansion,
        )

    def laws(
        self,
        kappa: KappaMap,
        G: Group,
        q: QTuple,
        degree_cap: Optional[int] = None,
        scope: CheckScope = CheckScope.ALL,
    ) -> DeformationLawReport:
        cap = settings.DEGREE_CAP if degree_cap is None else degree_cap
        logger.info(f"Checking deformation laws up to degree {cap} over {scope.value} decorations")
        report = check_deformation_laws(kappa, G, q, cap, scope)
        logger.info(f"Deformation laws: {'pass' if report.passed else 'fail'} on {report.triples_checked} triples")
        return report

    def graded_dimensions(self, kappa: KappaMap, G: Group, q: QTuple, cap: Optional[int] = None) -> GradedDimensionReport:
        cap = settings.GRADED_DIMENSION_CAP if cap is None else cap
        logger.info(f"Checking associated graded dimensions up to degree {cap}")
        report = graded_dimension_check(kappa, G, q, cap)
        logger.info(f"Graded dimensions: {'pass' if report.passed else f'deficient at degree {report.first_deficient}'}")
        return report


# Create a singleton instance
deform_service = DeformService()
