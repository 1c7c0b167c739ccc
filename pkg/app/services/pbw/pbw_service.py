import logging

from app.schemas.reports import PbwReport
from app.services.group.group import Group
from app.services.pbw.criteria import diamond_check, ls_check
from app.services.pbw.kappa import KappaMap
from app.services.qalgebra.qtuple import QTuple

logger = logging.getLogger(__name__)


class PbwService:
    """
    Service deciding whether kappa yields a quantum Drinfeld Hecke algebra.
    """

    def verdict(self, kappa: KappaMap, G: Group, q: QTuple) -> PbwReport:
        """
        Run the criteria check and the rewriting oracle.

        Args:
            kappa: Parameter map
            G: Enumerated group
            q: Commutation scalars

        Returns:
            PbwReport, passed iff both checks pass
        """
        logger.info(f"Checking PBW property for kappa on {len(kappa.values)} pairs, |G|={G.order}")
        ls = ls_check(kappa, G, q)
        diamond = diamond_check(kappa, G, q)
        if ls.passed != diamond.passed:
            logger.warning("criteria check and rewriting oracle disagree")
        report = PbwReport(passed=ls.passed and diamond.passed, ls=ls, diamond=diamond)
        logger.info(f"PBW verdict: {'pass' if report.passed else 'fail'}")
        return report


# Create a singleton instance
pbw_service = PbwService()
