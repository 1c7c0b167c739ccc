from app.services.pbw.kappa import GroupAlgebra, KappaMap, check_antisymmetry
from app.services.pbw.rewriting import RewriteSystem
from app.services.pbw.criteria import conjugation_residual, diamond_check, ls_check, quantum_minor_det
from app.services.pbw.render import kappa_lines, kappa_model
from app.services.pbw.pbw_service import pbw_service

__all__ = [
    "GroupAlgebra",
    "KappaMap",
    "RewriteSystem",
    "check_antisymmetry",
    "conjugation_residual",
    "diamond_check",
    "kappa_lines",
    "kappa_model",
    "ls_check",
    "pbw_service",
    "quantum_minor_det",
]
