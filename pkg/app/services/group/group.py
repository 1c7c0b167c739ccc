# app/services/group/group.py

import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from app.core.config import settings
from app.services.group.matrix import GroupElement
from app.utils.error_handling import ClosureCapExceeded, DimensionMismatch, NonInvertibleGenerator

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ConjugacyData:
    """
    Conjugacy structure of a finite group.

    The class of a contains g a g^-1; cosets[c][t] conjugates the class
    representative to classes[c][t].
    """
    classes: List[List[int]]
    representatives: List[int]
    centralizers: List[List[int]]
    cosets: List[List[int]]


@dataclass
class _ClassSweep:
    members: List[int]
    transversal: List[int]
    schreier: List[int] = field(default_factory=list)


class Group:
    """
    Finite matrix group, fully enumerated.

    Element 0 is the identity; the rest follow breadth-first discovery order
    under right multiplication by the generators.
    """

    def __init__(
        self,
        elements: List[GroupElement],
        generators: List[int],
        generator_names: List[str],
        words: List[Tuple[str, ...]],
    ):
        self.elements = elements
        self.index: Dict[GroupElement, int] = {g: i for i, g in enumerate(elements)}
        self.generators = generators
        self.generator_names = generator_names
        self.words = words
        self.identity = 0
        self.dimension = elements[0].n
        self.conductor = elements[0].conductor
        self._inverse: List[Optional[int]] = [None] * len(elements)
        self._inverse[0] = 0
        self._table: Optional[np.ndarray] = None
        if len(elements) <= settings.PRODUCT_TABLE_LIMIT:
            self._table = np.full((len(elements), len(elements)), -1, dtype=np.int32)
        self._sweeps: Optional[List[_ClassSweep]] = None
        self._conjugacy: Optional[ConjugacyData] = None
        self._centralizers: Dict[int, List[int]] = {}

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __getitem__(self, i: int) -> GroupElement:
        return self.elements[i]

    def lookup(self, element: GroupElement) -> int:
        return self.index[element]

    def mul(self, i: int, j: int) -> int:
        """Index of elements[i] @ elements[j]."""
        if self._table is not None:
            k = int(self._table[i, j])
            if k >= 0:
                return k
        k = self.index[self.elements[i] @ self.elements[j]]
        if self._table is not None:
            self._table[i, j] = k
        return k

    def inv(self, i: int) -> int:
        k = self._inverse[i]
        if k is None:
            k = self.index[self.elements[i].inverse()]
            self._inverse[i] = k
            self._inverse[k] = i
        return k

    def conjugate(self, x: int, g: int) -> int:
        """x g x^-1."""
        return self.mul(self.mul(x, g), self.inv(x))

    def word(self, i: int) -> str:
        return "*".join(self.words[i]) if self.words[i] else "e"

    def generator_index(self, name: str) -> int:
        return self.generators[self.generator_names.index(name)]

    # conjugacy

    def _sweep_classes(self) -> List[_ClassSweep]:
        if self._sweeps is not None:
            return self._sweeps
        assigned = [False] * self.order
        sweeps: List[_ClassSweep] = []
        for a in range(self.order):
            if assigned[a]:
                continue
            sweep = _ClassSweep(members=[a], transversal=[self.identity])
            position = {a: 0}
            assigned[a] = True
            queue = deque([a])
            while queue:
                b = queue.popleft()
                tb = sweep.transversal[position[b]]
                for h in self.generators:
                    b2 = self.conjugate(h, b)
                    candidate = self.mul(h, tb)
                    if b2 not in position:
                        position[b2] = len(sweep.members)
                        sweep.members.append(b2)
                        sweep.transversal.append(candidate)
                        assigned[b2] = True
                        queue.append(b2)
                    else:
                        t2 = sweep.transversal[position[b2]]
                        s = self.mul(self.inv(t2), candidate)
                        if s != self.identity:
                            sweep.schreier.append(s)
            order = sorted(range(len(sweep.members)), key=lambda p: sweep.members[p])
            sweep.members = [sweep.members[p] for p in order]
            sweep.transversal = [sweep.transversal[p] for p in order]
            sweeps.append(sweep)
        logger.debug(f"group of order {self.order} has {len(sweeps)} conjugacy classes")
        self._sweeps = sweeps
        return sweeps

    def classes(self) -> List[List[int]]:
        return [s.members for s in self._sweep_classes()]

    def representatives(self) -> List[int]:
        return [s.members[0] for s in self._sweep_classes()]

    def class_transversal(self, c: int) -> List[int]:
        return self._sweep_classes()[c].transversal

    def centralizer(self, c: int) -> List[int]:
        """Centralizer of the c-th class representative, from Schreier generators."""
        if c in self._centralizers:
            return self._centralizers[c]
        sweep = self._sweep_classes()[c]
        members = {self.identity}
        gens: List[int] = []
        for s in sweep.schreier:
            if s in members:
                continue
            gens.append(s)
            members = set(self._subgroup_closure(gens))
        result = sorted(members)
        self._centralizers[c] = result
        return result

    def _subgroup_closure(self, gens: Sequence[int]) -> List[int]:
        seen = {self.identity}
        queue = deque([self.identity])
        while queue:
            x = queue.popleft()
            for s in gens:
                y = self.mul(x, s)
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return list(seen)

    def conjugacy_data(self) -> ConjugacyData:
        if self._conjugacy is None:
            sweeps = self._sweep_classes()
            self._conjugacy = ConjugacyData(
                classes=[s.members for s in sweeps],
                representatives=[s.members[0] for s in sweeps],
                centralizers=[self.centralizer(c) for c in range(len(sweeps))],
                cosets=[s.transversal for s in sweeps],
            )
        return self._conjugacy

    def is_diagonal(self) -> bool:
        return all(g.is_diagonal() for g in self.elements)


def close(
    generators: Sequence[GroupElement],
    names: Optional[Sequence[str]] = None,
    cap: Optional[int] = None,
) -> Group:
    """
    Enumerate the group generated by invertible matrices.

    Args:
        generators: Generator matrices of a common size and conductor
        names: Display names for the generators (default g1, g2, ...)
        cap: Maximum group order (default settings.CLOSURE_CAP)

    Returns:
        The enumerated Group, identity first, then breadth-first order

    Raises:
        NonInvertibleGenerator: If a generator is singular
        ClosureCapExceeded: If the group outgrows the cap
    """
    cap = cap or settings.CLOSURE_CAP
    names = list(names) if names is not None else [f"g{k + 1}" for k in range(len(generators))]
    if not generators:
        raise DimensionMismatch("at least one generator is required")
    n, conductor = generators[0].n, generators[0].conductor
    for name, g in zip(names, generators):
        if g.n != n or g.conductor != conductor:
            raise DimensionMismatch(f"generator {name} has a different size or conductor")
        if not g.is_invertible():
            raise NonInvertibleGenerator(name)

    identity = GroupElement.identity(n, conductor)
    elements = [identity]
    index = {identity: 0}
    words: List[Tuple[str, ...]] = [()]
    products: List[Tuple[int, int, int]] = []
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for s, (name, gen) in enumerate(zip(names, generators)):
            y = elements[x] @ gen
            k = index.get(y)
            if k is None:
                k = len(elements)
                if k >= cap:
                    raise ClosureCapExceeded(cap)
                elements.append(y)
                index[y] = k
                words.append(words[x] + (name,))
                queue.append(k)
            products.append((x, s, k))

    generator_indices = [index[g] for g in generators]
    group = Group(elements, generator_indices, names, words)
    if group._table is not None:
        for x, s, k in products:
            group._table[x, generator_indices[s]] = k
    logger.info(f"Closed {len(generators)} generators into a group of order {group.order}")
    return group


def shortest_words(G: Group) -> List[str]:
    """Breadth-first shortest generator word of every element, identity as `e`."""
    return [G.word(i) for i in range(G.order)]
