# app/services/linalg/echelon.py
"""Exact sparse Gaussian elimination over Q(zeta_N)."""

import logging
from typing import Dict, Iterable, List, Optional

from app.services.cyclotomic import CycScalar

logger = logging.getLogger(__name__)

SparseRow = Dict[int, CycScalar]


def clean(row: SparseRow) -> SparseRow:
    return {c: v for c, v in row.items() if not v.is_zero()}


def axpy(target: SparseRow, factor: CycScalar, source: SparseRow) -> None:
    """In place: target += factor * source, dropping cancelled entries."""
    for c, v in source.items():
        updated = target.get(c)
        product = factor * v
        if updated is None:
            if not product.is_zero():
                target[c] = product
        else:
            updated = updated + product
            if updated.is_zero():
                del target[c]
            else:
                target[c] = updated


class EchelonBasis:
    """
    Incrementally maintained row echelon form.

    Each stored row is keyed by its pivot (its smallest column) and scaled so
    the pivot entry is 1. Rows are sparse maps column -> scalar.
    """

    def __init__(self, ncols: Optional[int] = None, conductor: Optional[int] = None):
        self.ncols = ncols
        self.conductor = conductor
        self.rows: Dict[int, SparseRow] = {}

    @property
    def rank(self) -> int:
        return len(self.rows)

    def is_full(self) -> bool:
        return self.ncols is not None and self.rank >= self.ncols

    def reduce(self, row: SparseRow) -> SparseRow:
        """Remainder of a row after eliminating every stored pivot."""
        work = clean(row)
        done = set()
        while True:
            candidates = [c for c in work if c in self.rows and c not in done]
            if not candidates:
                return work
            col = min(candidates)
            factor = work[col]
            axpy(work, -factor, self.rows[col])
            done.add(col)

    def add(self, row: SparseRow) -> bool:
        """Insert a row; returns True when it raised the rank."""
        work = self.reduce(row)
        if not work:
            return False
        pivot = min(work)
        inv = work[pivot].inverse()
        if self.conductor is None:
            self.conductor = inv.conductor
        self.rows[pivot] = {c: v * inv for c, v in work.items()}
        return True

    def extend(self, rows: Iterable[SparseRow]) -> int:
        added = 0
        for row in rows:
            if self.add(row):
                added += 1
        return added

    def contains(self, row: SparseRow) -> bool:
        return not self.reduce(row)

    def reduced_rows(self) -> Dict[int, SparseRow]:
        """Reduced row echelon form: pivot columns cleared from every other row."""
        out: Dict[int, SparseRow] = {}
        for pivot in sorted(self.rows, reverse=True):
            row = dict(self.rows[pivot])
            for c in sorted(c for c in row if c != pivot and c in out):
                if c in row:
                    axpy(row, -row[c], out[c])
            out[pivot] = row
        return {p: out[p] for p in sorted(out)}

    def nullspace(self, ncols: Optional[int] = None) -> List[SparseRow]:
        """
        Basis of the solution space of the stored homogeneous system.

        One vector per free column, in increasing column order; the free
        column carries coefficient 1.
        """
        ncols = ncols if ncols is not None else self.ncols
        if ncols is None:
            raise ValueError("nullspace needs the column count")
        rref = self.reduced_rows()
        basis: List[SparseRow] = []
        for free in range(ncols):
            if free in rref:
                continue
            vec: SparseRow = {}
            for pivot, row in rref.items():
                coeff = row.get(free)
                if coeff is not None:
                    vec[pivot] = -coeff
            vec[free] = CycScalar.one(self.conductor)
            basis.append(vec)
        return basis


def rank_of(rows: Iterable[SparseRow]) -> int:
    basis = EchelonBasis()
    basis.extend(rows)
    return basis.rank


def in_span(vector: SparseRow, spanning: Iterable[SparseRow]) -> bool:
    basis = EchelonBasis()
    basis.extend(spanning)
    return basis.contains(vector)


def same_span(first: List[SparseRow], second: List[SparseRow]) -> bool:
    """Span equality by rank: rank(A) == rank(B) == rank(A + B)."""
    ra, rb = rank_of(first), rank_of(second)
    return ra == rb == rank_of(list(first) + list(second))
