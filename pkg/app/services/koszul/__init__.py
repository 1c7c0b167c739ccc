from app.services.koszul.complex import KoszulTerm, apply_d, d_squared, koszul_d, koszul_d_star
from app.services.koszul.cochain import (
    ConstantCochain,
    d3_star_constant,
    invariance_residual,
    mu1_on_generators,
    pairs,
    psi2_apply,
    reynolds,
)
from app.services.koszul.conversion import cochain_to_kappa, kappa_from_mu1, kappa_to_cochain
from app.services.koszul.solver import CocycleSpace, solve_constant_cocycles
from app.services.koszul.koszul_service import koszul_service

__all__ = [
    "CocycleSpace",
    "ConstantCochain",
    "KoszulTerm",
    "apply_d",
    "cochain_to_kappa",
    "d3_star_constant",
    "d_squared",
    "invariance_residual",
    "kappa_from_mu1",
    "kappa_to_cochain",
    "koszul_d",
    "koszul_d_star",
    "koszul_service",
    "mu1_on_generators",
    "pairs",
    "psi2_apply",
    "reynolds",
    "solve_constant_cocycles",
]
