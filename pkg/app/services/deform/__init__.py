from app.services.deform.filtered import FilteredElement
from app.services.deform.algebra import DeformedAlgebra, extract_mu, h_multiply, mu1_table
from app.services.deform.laws import check_deformation_laws
from app.services.deform.graded import graded_dimension_check
from app.services.deform.deform_service import deform_service

__all__ = [
    "DeformedAlgebra",
    "FilteredElement",
    "check_deformation_laws",
    "deform_service",
    "extract_mu",
    "graded_dimension_check",
    "h_multiply",
    "mu1_table",
]
