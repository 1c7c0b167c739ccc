import logging
from typing import List, Optional

from app.schemas.reports import CochainEntry, CochainModel, CocycleReport
from app.services.cyclotomic import render_scalar
from app.services.group.group import Group
from app.services.koszul.cochain import ConstantCochain, d3_star_constant, invariance_residual
from app.services.koszul.conversion import cochain_to_kappa
from app.services.koszul.solver import CocycleSpace, solve_constant_cocycles
from app.services.pbw.render import kappa_model
from app.services.qalgebra.qtuple import QTuple

logger = logging.getLogger(__name__)


def cochain_model(c: ConstantCochain, G: Group) -> CochainModel:
    return CochainModel(entries=[
        CochainEntry(element=G.word(g), i=r + 1, j=s + 1, value=render_scalar(value))
        for g, r, s, value in c.items()
    ])


class KoszulService:
    """
    Service for constant Hochschild 2-cocycles of S_q(V) x| G.
    """

    def solve(self, G: Group, q: QTuple, threads: Optional[int] = None) -> CocycleSpace:
        logger.info(f"Solving for constant cocycles: |G|={G.order}, n={q.n}, {len(G.classes())} classes")
        space = solve_constant_cocycles(G, q, threads)
        logger.info(f"Constant cocycle space has dimension {space.dimension}")
        return space

    def report(self, G: Group, q: QTuple, threads: Optional[int] = None) -> CocycleReport:
        """
        Solve and package the basis both as cochains and as kappa maps.

        Args:
            G: Enumerated group
            q: Commutation scalars
            threads: Worker threads for the class blocks

        Returns:
            CocycleReport
        """
        space = self.solve(G, q, threads)
        return CocycleReport(
            conductor=q.conductor,
            dimension=q.n,
            group_order=G.order,
            classes=len(G.classes()),
            cocycle_dimension=space.dimension,
            basis=[cochain_model(c, G) for c in space.basis],
            kappas=[kappa_model(cochain_to_kappa(c, q), G) for c in space.basis],
        )

    def verify(self, space: CocycleSpace, G: Group, q: QTuple) -> List[int]:
        """Indices of basis elements that are not closed or not fully invariant."""
        bad = []
        for k, c in enumerate(space.basis):
            if d3_star_constant(c, G, q) or invariance_residual(c, G, q):
                logger.warning(f"basis cochain {k} fails closedness or invariance")
                bad.append(k)
        return bad


# Create a singleton instance
koszul_service = KoszulService()
