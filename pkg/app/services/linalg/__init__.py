from app.services.linalg.echelon import (
    EchelonBasis,
    SparseRow,
    axpy,
    in_span,
    rank_of,
    same_span,
)

__all__ = ["EchelonBasis", "SparseRow", "axpy", "in_span", "rank_of", "same_span"]
