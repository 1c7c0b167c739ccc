# app/services/families/reflection.py
"""
Complex reflection groups G(m, p, n) as enumerated matrix groups.

An element zeta^lambda sigma sends x_i to zeta^(lambda_sigma(i)) x_sigma(i).
The symplectic representation on U + U* lets it act on y_i by the inverse
scalar, and orders the basis x_1..x_n, y_1..y_n.
"""

import logging
from functools import cached_property
from typing import List, Optional, Sequence, Tuple

from app.schemas.families import ReflectionGroupSpec, Representation
from app.services.cyclotomic import CycScalar, root_of_unity
from app.services.group.group import Group, close
from app.services.group.matrix import GroupElement
from app.services.qalgebra.qtuple import QTuple
from app.utils.error_handling import FamilyOrderMismatch

logger = logging.getLogger(__name__)

Permutation = Tuple[int, ...]


def transposition(n: int, i: int, j: int) -> Permutation:
    perm = list(range(n))
    perm[i], perm[j] = j, i
    return tuple(perm)


def cycle(n: int, *points: int) -> Permutation:
    """The cycle points[0] -> points[1] -> ... -> points[0]."""
    perm = list(range(n))
    for a, b in zip(points, points[1:] + points[:1]):
        perm[a] = b
    return tuple(perm)


def compose(first: Permutation, second: Permutation) -> Permutation:
    """first after second."""
    return tuple(first[second[i]] for i in range(len(first)))


class ReflectionFamily:
    """G(m, p, n) together with its q-tuple, built once and then queried by element."""

    def __init__(self, spec: ReflectionGroupSpec, cap: Optional[int] = None):
        self.spec = spec
        self.m, self.p, self.n = spec.m, spec.p, spec.n
        self.conductor = spec.conductor
        self.symplectic = spec.representation == Representation.SYMPLECTIC
        self.dimension = spec.dimension
        self._cap = cap

    def zeta(self, k: int) -> CycScalar:
        """zeta_m^k inside Q(zeta_N)."""
        return root_of_unity(self.conductor, (k % self.m) * (self.conductor // self.m))

    def matrix(self, lam: Sequence[int], perm: Optional[Permutation] = None) -> GroupElement:
        """The matrix of zeta^lambda sigma in this representation."""
        perm = perm if perm is not None else tuple(range(self.n))
        images: List[Tuple[int, CycScalar]] = [
            (perm[i], self.zeta(lam[perm[i]])) for i in range(self.n)
        ]
        if self.symplectic:
            images += [(self.n + perm[i], self.zeta(-lam[perm[i]])) for i in range(self.n)]
        return GroupElement.monomial(images)

    def _generators(self) -> Tuple[List[GroupElement], List[str]]:
        n, m, p = self.n, self.m, self.p
        zero = [0] * n
        gens: List[GroupElement] = []
        names: List[str] = []
        for i in range(n - 1):
            gens.append(self.matrix(zero, transposition(n, i, i + 1)))
            names.append(f"s{i + 1}")
        if p < m:
            lam = list(zero)
            lam[0] = p
            gens.append(self.matrix(lam))
            names.append("d")
        if m > 1 and n > 1:
            lam = list(zero)
            lam[0], lam[1] = 1, -1
            gens.append(self.matrix(lam))
            names.append("r")
        if not gens:
            gens.append(GroupElement.identity(self.dimension, self.conductor))
            names.append("id")
        return gens, names

    @cached_property
    def group(self) -> Group:
        gens, names = self._generators()
        G = close(gens, names, self._cap)
        expected = self.spec.expected_order()
        if G.order != expected:
            raise FamilyOrderMismatch(expected, G.order)
        logger.info(f"Built G({self.m},{self.p},{self.n}) {self.spec.representation.value}: order {G.order}")
        return G

    @cached_property
    def q(self) -> QTuple:
        one = CycScalar.one(self.conductor)
        minus = -one
        d = self.dimension
        if self.symplectic:
            return QTuple([[one if i % self.n == j % self.n else minus for j in range(d)] for i in range(d)])
        return QTuple.uniform(d, self.conductor, -1)

    def element(self, lam: Sequence[int], perm: Optional[Permutation] = None) -> int:
        """Group index of zeta^lambda sigma."""
        return self.group.lookup(self.matrix(lam, perm))

    def exponents(self, entries: dict) -> List[int]:
        """Exponent vector from {position: exponent}."""
        out = [0] * self.n
        for i, k in entries.items():
            out[i] = k % self.m
        return out

    def sigma(self, i: int, j: int, k: int) -> int:
        """sigma_ij^(eps), eps = zeta^k: x_i -> eps x_j, x_j -> -eps^-1 x_i."""
        return self.element(self.exponents({j: k, i: self.m // 2 - k}), transposition(self.n, i, j))

    def t(self, i: int, k: int) -> int:
        """t_i^(eps), eps = zeta^k: x_i -> eps x_i."""
        return self.element(self.exponents({i: k}))


def build_family(spec: ReflectionGroupSpec, cap: Optional[int] = None) -> Tuple[Group, QTuple]:
    """
    Enumerate G(m, p, n) in the requested representation with its q-tuple.

    Raises:
        FamilyOrderMismatch: If the closure does not have order m^n n! / p
        ClosureCapExceeded: If the group outgrows the closure cap
    """
    family = ReflectionFamily(spec, cap)
    return family.group, family.q
