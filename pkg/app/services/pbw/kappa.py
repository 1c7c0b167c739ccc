# app/services/pbw/kappa.py

import logging
from typing import Dict, Iterator, Optional, Tuple

from app.services.cyclotomic import CycScalar
from app.services.qalgebra.qtuple import QTuple
from app.utils.error_handling import AntisymmetryViolation, DimensionMismatch

logger = logging.getLogger(__name__)

GroupAlgebra = Dict[int, CycScalar]


def ga_add(target: GroupAlgebra, g: int, value: CycScalar) -> None:
    current = target.get(g)
    value = value if current is None else current + value
    if value.is_zero():
        target.pop(g, None)
    else:
        target[g] = value


def ga_scale(x: GroupAlgebra, factor: CycScalar) -> GroupAlgebra:
    scaled = {g: c * factor for g, c in x.items()}
    return {g: c for g, c in scaled.items() if not c.is_zero()}


class KappaMap:
    """
    Bilinear map kappa: V x V -> CG with quantum antisymmetry.

    Only the values on pairs i < j (0-based) are stored; the rest follow from
    kappa(v_j, v_i) = -q_ji kappa(v_i, v_j) and kappa(v_i, v_i) = 0.
    """

    def __init__(self, q: QTuple, values: Optional[Dict[Tuple[int, int], GroupAlgebra]] = None):
        self.q = q
        self.n = q.n
        self.conductor = q.conductor
        self.values: Dict[Tuple[int, int], GroupAlgebra] = {}
        for (i, j), value in (values or {}).items():
            if not (0 <= i < j < self.n):
                raise DimensionMismatch(f"kappa pair ({i + 1},{j + 1}) must satisfy 1 <= i < j <= {self.n}")
            cleaned = {g: c for g, c in value.items() if not c.is_zero()}
            if cleaned:
                self.values[(i, j)] = cleaned

    @classmethod
    def zero(cls, q: QTuple) -> "KappaMap":
        return cls(q)

    @classmethod
    def from_table(cls, q: QTuple, table: Dict[Tuple[int, int], GroupAlgebra]) -> "KappaMap":
        """
        Build from values on arbitrary ordered pairs, checking antisymmetry.

        Raises:
            AntisymmetryViolation: If the table contradicts quantum antisymmetry
        """
        check_antisymmetry(q, table)
        upper: Dict[Tuple[int, int], GroupAlgebra] = {}
        for (i, j), value in table.items():
            if i < j:
                upper[(i, j)] = dict(value)
            elif i > j and (j, i) not in table:
                # kappa(v_j, v_i) = -q_ji kappa(v_i, v_j) with j < i here
                upper[(j, i)] = ga_scale(value, -q(j, i))
        return cls(q, upper)

    def value(self, i: int, j: int) -> GroupAlgebra:
        """kappa(v_i, v_j) for any ordered pair."""
        if i == j:
            return {}
        if i < j:
            return dict(self.values.get((i, j), {}))
        return ga_scale(self.values.get((j, i), {}), -self.q(i, j))

    def component(self, g: int, i: int, j: int) -> CycScalar:
        """The scalar kappa_g(v_i, v_j)."""
        return self.value(i, j).get(g, CycScalar.zero(self.conductor))

    def bilinear(self, u: Dict[int, CycScalar], w: Dict[int, CycScalar]) -> GroupAlgebra:
        """kappa(sum u_k v_k, sum w_l v_l)."""
        out: GroupAlgebra = {}
        for k, a in u.items():
            for l, b in w.items():
                for g, c in self.value(k, l).items():
                    ga_add(out, g, a * b * c)
        return out

    def support(self) -> Iterator[Tuple[int, int, int, CycScalar]]:
        """(g, i, j, kappa_g(v_i, v_j)) over stored pairs i < j."""
        for (i, j) in sorted(self.values):
            for g, c in sorted(self.values[(i, j)].items()):
                yield g, i, j, c

    def group_support(self) -> set:
        return {g for value in self.values.values() for g in value}

    def is_zero(self) -> bool:
        return not self.values

    def __add__(self, other: "KappaMap") -> "KappaMap":
        out: Dict[Tuple[int, int], GroupAlgebra] = {k: dict(v) for k, v in self.values.items()}
        for key, value in other.values.items():
            target = out.setdefault(key, {})
            for g, c in value.items():
                ga_add(target, g, c)
        return KappaMap(self.q, out)

    def scale(self, factor: CycScalar) -> "KappaMap":
        return KappaMap(self.q, {k: ga_scale(v, factor) for k, v in self.values.items()})

    def as_vector(self) -> Dict[Tuple[int, int, int], CycScalar]:
        """Coordinates keyed by (g, i, j), for span computations."""
        return {(g, i, j): c for g, i, j, c in self.support()}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, KappaMap):
            return NotImplemented
        return self.q == other.q and self.values == other.values

    def __repr__(self) -> str:
        return f"KappaMap({len(self.values)} pairs, support {sorted(self.group_support())})"


def check_antisymmetry(q: QTuple, table: Dict[Tuple[int, int], GroupAlgebra]) -> None:
    """
    Raise AntisymmetryViolation (1-based indices) unless
    kappa(v_i, v_j) = -q_ij kappa(v_j, v_i) across the table.
    """
    zero = CycScalar.zero(q.conductor)
    for (i, j), value in table.items():
        if i == j:
            for g, c in value.items():
                if not c.is_zero():
                    raise AntisymmetryViolation(g, i + 1, j + 1)
            continue
        if (j, i) not in table:
            continue
        other = table[(j, i)]
        for g in set(value) | set(other):
            lhs = value.get(g, zero)
            rhs = -q(i, j) * other.get(g, zero)
            if lhs != rhs:
                raise AntisymmetryViolation(g, i + 1, j + 1)
