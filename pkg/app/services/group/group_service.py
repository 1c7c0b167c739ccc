import logging

from app.schemas.reports import CheckReport, CheckScope
from app.services.group.checks import check_exterior_extension, check_q_action
from app.services.group.group import Group
from app.services.qalgebra.qtuple import QTuple

logger = logging.getLogger(__name__)


class GroupService:
    """
    Service for building matrix groups and checking their actions.
    """

    def check_actions(self, G: Group, q: QTuple, scope: CheckScope = CheckScope.GENERATORS) -> CheckReport:
        """
        Run both action-compatibility checks.

        Args:
            G: Enumerated group
            q: Commutation scalars
            scope: Check generators only or every element

        Returns:
            CheckReport combining the q-action and exterior-extension reports
        """
        logger.info(f"Checking action of a group of order {G.order} on S_q(V) and Lambda_q(V)")
        q_report = check_q_action(G, q, scope)
        ext_report = check_exterior_extension(G, q, scope)
        report = CheckReport(
            passed=q_report.passed and ext_report.passed,
            group_order=G.order,
            dimension=q.n,
            q_action=q_report,
            exterior_extension=ext_report,
        )
        logger.info(f"Action checks: {'pass' if report.passed else 'fail'}")
        return report


# Create a singleton instance
group_service = GroupService()
