from app.services.group.matrix import GroupElement
from app.services.group.group import ConjugacyData, Group, close, shortest_words
from app.services.group.checks import (
    check_exterior_extension,
    check_q_action,
    exterior_residual,
    q_action_residual,
    require_action_checks,
)
from app.services.group.group_service import group_service

__all__ = [
    "ConjugacyData",
    "Group",
    "GroupElement",
    "check_exterior_extension",
    "check_q_action",
    "close",
    "exterior_residual",
    "group_service",
    "q_action_residual",
    "require_action_checks",
    "shortest_words",
]
