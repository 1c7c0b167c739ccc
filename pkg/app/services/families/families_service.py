import logging
from typing import List, Optional

from app.schemas.families import (
    BazlovBerensteinSpec,
    BraidedCherednikReport,
    ClassificationReport,
    ReflectionGroupSpec,
    Representation,
)
from app.schemas.reports import DiagonalHHReport
from app.services.families.diagonal import diagonal_classify, diagonal_hh_dim
from app.services.families.reflection import ReflectionFamily
from app.services.families.references import bazlov_berenstein, natural_reference_maps, symplectic_reference_maps
from app.services.group.group import Group
from app.services.koszul.conversion import cochain_to_kappa
from app.services.koszul.solver import solve_constant_cocycles
from app.services.linalg.echelon import in_span
from app.services.pbw.kappa import KappaMap
from app.services.pbw.pbw_service import pbw_service
from app.services.pbw.render import kappa_model
from app.services.qalgebra.qtuple import QTuple

logger = logging.getLogger(__name__)

# PBW parameter dimensions for n >= 4 natural and n >= 3 symplectic actions
_NATURAL_DIMENSIONS = {(1, 1): 5, (2, 1): 2, (2, 2): 2}


def expected_dimension(spec: ReflectionGroupSpec) -> Optional[int]:
    if spec.representation == Representation.SYMPLECTIC:
        return spec.m + 1 if spec.n >= 3 else None
    if spec.n < 4:
        return None
    if spec.m >= 3:
        return 0
    return _NATURAL_DIMENSIONS.get((spec.m, spec.p))


def _coordinates(kappa: KappaMap, columns: dict) -> dict:
    return {columns.setdefault(key, len(columns)): c for key, c in kappa.as_vector().items()}


def spans_contain(basis: List[KappaMap], candidates: List[KappaMap]) -> bool:
    """True when every candidate lies in the span of basis."""
    columns: dict = {}
    rows = [_coordinates(k, columns) for k in basis]
    return all(in_span(_coordinates(k, columns), rows) for k in candidates)


class FamiliesService:
    """
    Service classifying PBW parameters for the reflection families and for
    diagonal actions.
    """

    def classify(
        self,
        spec: ReflectionGroupSpec,
        threads: Optional[int] = None,
        reference: bool = False,
        cap: Optional[int] = None,
    ) -> ClassificationReport:
        """
        Build the family, solve for its constant cocycles and compare with
        the known classification.

        Args:
            spec: Family parameters
            threads: Worker threads for the solver
            reference: Also check the closed-form maps lie in the solved span
            cap: Closure cap for the family group

        Returns:
            ClassificationReport
        """
        label = f"G({spec.m},{spec.p},{spec.n}) {spec.representation.value}"
        logger.info(f"Classifying {label}")
        family = ReflectionFamily(spec, cap)
        G, q = family.group, family.q
        space = solve_constant_cocycles(G, q, threads)
        solved = [cochain_to_kappa(c, q) for c in space.basis]
        expected = expected_dimension(spec)
        if expected is not None and expected != space.dimension:
            logger.warning(f"{label}: solver dimension {space.dimension}, classification says {expected}")
        report = ClassificationReport(
            family=label,
            group_order=G.order,
            dimension=q.n,
            cocycle_dimension=space.dimension,
            expected_dimension=expected,
            kappas=[kappa_model(k, G) for k in solved],
        )
        if reference:
            if spec.representation == Representation.SYMPLECTIC:
                maps = symplectic_reference_maps(spec.m, spec.n, family)
            else:
                maps = natural_reference_maps(spec, family)
            report.reference_maps = len(maps)
            report.reference_in_span = spans_contain(solved, maps)
        logger.info(f"{label}: dimension {space.dimension}")
        return report

    def classify_diagonal(self, G: Group, q: QTuple) -> List[KappaMap]:
        logger.info(f"Classifying diagonal action of order {G.order} on dimension {q.n}")
        basis = diagonal_classify(G, q)
        logger.info(f"Diagonal classification has {len(basis)} basis maps")
        return basis

    def diagonal_report(self, G: Group, q: QTuple, threads: Optional[int] = None) -> ClassificationReport:
        """
        Closed-form diagonal classification, cross-checked against the solver.

        Raises:
            NotDiagonal: If some element of G is not diagonal
        """
        basis = self.classify_diagonal(G, q)
        space = solve_constant_cocycles(G, q, threads)
        solved = [cochain_to_kappa(c, q) for c in space.basis]
        agrees = spans_contain(solved, basis)
        if space.dimension != len(basis) or not agrees:
            logger.warning(f"diagonal classification ({len(basis)}) and solver ({space.dimension}) disagree")
        return ClassificationReport(
            family="diagonal",
            group_order=G.order,
            dimension=q.n,
            cocycle_dimension=space.dimension,
            expected_dimension=len(basis),
            reference_maps=len(basis),
            reference_in_span=agrees,
            kappas=[kappa_model(k, G) for k in basis],
        )

    def diagonal_hh(self, G: Group, q: QTuple, degree: int, poly_degree_cap: int) -> DiagonalHHReport:
        logger.info(f"Counting HH^{degree} of S_q(V) x| G up to polynomial degree {poly_degree_cap}")
        dimension = diagonal_hh_dim(G, q, degree, poly_degree_cap)
        logger.info(f"HH^{degree} truncated dimension {dimension}")
        return DiagonalHHReport(cohomological_degree=degree, poly_degree_cap=poly_degree_cap, dimension=dimension)

    def braided_cherednik(self, spec: BazlovBerensteinSpec, cap: Optional[int] = None) -> BraidedCherednikReport:
        """
        Build a braided Cherednik parameter on G(m, 1, n) and run the PBW verdict on it.

        Args:
            spec: Subgroup C' and the scalars c_1, c_eps
            cap: Closure cap for the family group

        Returns:
            BraidedCherednikReport
        """
        family = ReflectionFamily(
            ReflectionGroupSpec(m=spec.m, p=1, n=spec.n, representation=Representation.SYMPLECTIC), cap
        )
        label = f"G({spec.m},1,{spec.n}) symplectic, |C'|={spec.subgroup_order}"
        logger.info(f"Braided Cherednik parameter on {label}")
        kappa = bazlov_berenstein(spec, family)
        return BraidedCherednikReport(
            family=label,
            kappa=kappa_model(kappa, family.group),
            pbw=pbw_service.verdict(kappa, family.group, family.q),
        )


# Create a singleton instance
families_service = FamiliesService()
