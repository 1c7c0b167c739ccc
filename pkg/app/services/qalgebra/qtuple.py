# app/services/qalgebra/qtuple.py

import logging
from typing import Dict, List, Sequence, Tuple

from app.services.cyclotomic import CycScalar, render_scalar
from app.utils.error_handling import ProblemInvariantError

logger = logging.getLogger(__name__)


class QTuple:
    """
    The commutation scalars q_ij of a quantum symmetric algebra.

    Indices are 0-based. q_ii = 1 and q_ji = q_ij^-1 always hold; every entry
    is a root of unity in Q(zeta_N).
    """

    __slots__ = ("n", "conductor", "entries", "_hash")

    def __init__(self, entries: Sequence[Sequence[CycScalar]]):
        self.entries: Tuple[Tuple[CycScalar, ...], ...] = tuple(tuple(r) for r in entries)
        self.n = len(self.entries)
        self.conductor = self.entries[0][0].conductor
        self._hash = hash(tuple(c.coeffs for r in self.entries for c in r))
        self.validate()

    @classmethod
    def from_pairs(cls, n: int, conductor: int, pairs: Dict[Tuple[int, int], CycScalar]) -> "QTuple":
        """
        Build from (i, j) -> q_ij assignments; q_ji is filled in as the inverse
        and unspecified entries default to 1.
        """
        one = CycScalar.one(conductor)
        rows: List[List[CycScalar]] = [[one] * n for _ in range(n)]
        for (i, j), value in pairs.items():
            if i == j:
                if not value.is_one():
                    raise ProblemInvariantError(f"q_{i + 1}{i + 1} must be 1, got {render_scalar(value)}")
                continue
            if (j, i) in pairs and pairs[(j, i)] * value != one:
                raise ProblemInvariantError(f"q_{i + 1}{j + 1} and q_{j + 1}{i + 1} are not inverse")
            rows[i][j] = value
            rows[j][i] = value.inverse()
        return cls(rows)

    @classmethod
    def uniform(cls, n: int, conductor: int, value: int = -1) -> "QTuple":
        """q_ij = value for all i != j (value must be +-1)."""
        one = CycScalar.one(conductor)
        off = CycScalar.from_rational(conductor, value)
        return cls([[one if i == j else off for j in range(n)] for i in range(n)])

    def validate(self) -> None:
        for i in range(self.n):
            if len(self.entries[i]) != self.n:
                raise ProblemInvariantError("q-tuple must be square")
            if not self.entries[i][i].is_one():
                raise ProblemInvariantError(f"q_{i + 1}{i + 1} must be 1")
            for j in range(i + 1, self.n):
                qij, qji = self.entries[i][j], self.entries[j][i]
                if not (qij * qji).is_one():
                    raise ProblemInvariantError(f"q_{j + 1}{i + 1} must be the inverse of q_{i + 1}{j + 1}")
                if qij.root_order() is None:
                    raise ProblemInvariantError(
                        f"q_{i + 1}{j + 1} = {render_scalar(qij)} is not a root of unity"
                    )

    def __call__(self, i: int, j: int) -> CycScalar:
        return self.entries[i][j]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QTuple):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        body = ", ".join(
            f"q{i + 1}{j + 1}={render_scalar(self.entries[i][j])}"
            for i in range(self.n) for j in range(i + 1, self.n)
        )
        return f"QTuple({body})"
