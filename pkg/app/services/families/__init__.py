from app.services.families.reflection import ReflectionFamily, build_family, compose, cycle, transposition
from app.services.families.diagonal import DiagonalAction, diagonal_classify, diagonal_hh_dim
from app.services.families.references import (
    bazlov_berenstein,
    natural_constant_cocycles,
    natural_reference_maps,
    symplectic_constant_cocycles,
    symplectic_maps,
    symplectic_reference_maps,
)
from app.services.families.families_service import expected_dimension, families_service, spans_contain

__all__ = [
    "DiagonalAction",
    "ReflectionFamily",
    "bazlov_berenstein",
    "build_family",
    "compose",
    "cycle",
    "diagonal_classify",
    "diagonal_hh_dim",
    "expected_dimension",
    "families_service",
    "natural_constant_cocycles",
    "natural_reference_maps",
    "spans_contain",
    "symplectic_constant_cocycles",
    "symplectic_maps",
    "symplectic_reference_maps",
    "transposition",
]
