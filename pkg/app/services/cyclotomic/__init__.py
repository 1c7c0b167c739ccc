from app.services.cyclotomic.polynomials import cyclotomic_polynomial
from app.services.cyclotomic.field import (
    CycScalar,
    embed,
    field_degree,
    lcm_conductor,
    root_of_unity,
    zeta_exponent,
)
from app.services.cyclotomic.grammar import parse_scalar, render_scalar

__all__ = [
    "CycScalar",
    "cyclotomic_polynomial",
    "embed",
    "field_degree",
    "lcm_conductor",
    "parse_scalar",
    "render_scalar",
    "root_of_unity",
    "zeta_exponent",
]
