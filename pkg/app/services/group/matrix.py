# app/services/group/matrix.py

import logging
from typing import List, Optional, Sequence, Tuple

from app.services.cyclotomic import CycScalar
from app.utils.error_handling import DimensionMismatch, FieldDivisionByZero

logger = logging.getLogger(__name__)

Rows = Tuple[Tuple[CycScalar, ...], ...]


class GroupElement:
    """
    Invertible n x n matrix over Q(zeta_N).

    Entry (i, j) is g^j_i, the coefficient of v_i in the image of v_j, so
    column j is the image of v_j. Indices are 0-based internally.
    """

    __slots__ = ("rows", "n", "conductor", "_hash", "_cols")

    def __init__(self, rows: Sequence[Sequence[CycScalar]]):
        self.rows: Rows = tuple(tuple(r) for r in rows)
        self.n = len(self.rows)
        if any(len(r) != self.n for r in self.rows):
            raise DimensionMismatch("group element matrix must be square")
        self.conductor = self.rows[0][0].conductor
        self._hash = hash(tuple(tuple(c.coeffs for c in r) for r in self.rows))
        self._cols: Optional[Tuple[Tuple[Tuple[int, CycScalar], ...], ...]] = None

    @classmethod
    def identity(cls, n: int, conductor: int) -> "GroupElement":
        zero, one = CycScalar.zero(conductor), CycScalar.one(conductor)
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def diagonal(cls, entries: Sequence[CycScalar]) -> "GroupElement":
        n = len(entries)
        zero = CycScalar.zero(entries[0].conductor)
        return cls([[entries[i] if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def monomial(cls, images: Sequence[Tuple[int, CycScalar]]) -> "GroupElement":
        """Matrix sending v_j to scalar * v_target for images[j] = (target, scalar)."""
        n = len(images)
        conductor = images[0][1].conductor
        zero = CycScalar.zero(conductor)
        rows = [[zero] * n for _ in range(n)]
        for j, (target, scalar) in enumerate(images):
            rows[target][j] = scalar
        return cls(rows)

    def entry(self, i: int, j: int) -> CycScalar:
        return self.rows[i][j]

    def image(self, j: int) -> Tuple[Tuple[int, CycScalar], ...]:
        """Nonzero (i, g^j_i) pairs: the expansion of g(v_j)."""
        if self._cols is None:
            self._cols = tuple(
                tuple((i, self.rows[i][col]) for i in range(self.n) if not self.rows[i][col].is_zero())
                for col in range(self.n)
            )
        return self._cols[j]

    def __matmul__(self, other: "GroupElement") -> "GroupElement":
        if other.n != self.n:
            raise DimensionMismatch("cannot multiply matrices of different size")
        zero = CycScalar.zero(self.conductor)
        out: List[List[CycScalar]] = [[zero] * self.n for _ in range(self.n)]
        # (AB)[i][j] = sum_k A[i][k] B[k][j]; iterate over nonzero B[k][j]
        for j in range(self.n):
            for k, b in other.image(j):
                for i, a in self.image(k):
                    out[i][j] = out[i][j] + a * b
        return GroupElement(out)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroupElement):
            return NotImplemented
        return self._hash == other._hash and self.rows == other.rows

    def __hash__(self) -> int:
        return self._hash

    def is_diagonal(self) -> bool:
        return all(self.rows[i][j].is_zero() for i in range(self.n) for j in range(self.n) if i != j)

    def is_identity(self) -> bool:
        return all(
            (self.rows[i][j].is_one() if i == j else self.rows[i][j].is_zero())
            for i in range(self.n) for j in range(self.n)
        )

    def inverse(self) -> "GroupElement":
        """Gauss-Jordan inverse; raises FieldDivisionByZero when singular."""
        n = self.n
        one, zero = CycScalar.one(self.conductor), CycScalar.zero(self.conductor)
        work = [list(self.rows[i]) + [one if i == j else zero for j in range(n)] for i in range(n)]
        for col in range(n):
            pivot = next((r for r in range(col, n) if not work[r][col].is_zero()), None)
            if pivot is None:
                raise FieldDivisionByZero("singular matrix")
            work[col], work[pivot] = work[pivot], work[col]
            inv = work[col][col].inverse()
            work[col] = [x * inv for x in work[col]]
            for r in range(n):
                if r != col and not work[r][col].is_zero():
                    factor = work[r][col]
                    work[r] = [x - factor * y for x, y in zip(work[r], work[col])]
        return GroupElement([row[n:] for row in work])

    def determinant(self) -> CycScalar:
        n = self.n
        work = [list(r) for r in self.rows]
        det = CycScalar.one(self.conductor)
        for col in range(n):
            pivot = next((r for r in range(col, n) if not work[r][col].is_zero()), None)
            if pivot is None:
                return CycScalar.zero(self.conductor)
            if pivot != col:
                work[col], work[pivot] = work[pivot], work[col]
                det = -det
            det = det * work[col][col]
            inv = work[col][col].inverse()
            for r in range(col + 1, n):
                if not work[r][col].is_zero():
                    factor = work[r][col] * inv
                    work[r] = [x - factor * y for x, y in zip(work[r], work[col])]
        return det

    def is_invertible(self) -> bool:
        return not self.determinant().is_zero()

    def __repr__(self) -> str:
        from app.services.cyclotomic import render_scalar
        body = ",".join("[" + ",".join(render_scalar(c) for c in row) + "]" for row in self.rows)
        return f"[{body}]"
