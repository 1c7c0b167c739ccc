# app/services/koszul/solver.py

import logging
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Optional

from app.core.config import settings
from app.services.cyclotomic import CycScalar
from app.services.group.checks import require_action_checks
from app.services.group.group import Group
from app.services.koszul.cochain import ConstantCochain, d3_star_rows, pairs, pullback_matrix
from app.services.linalg.echelon import EchelonBasis, SparseRow, axpy
from app.services.qalgebra.qtuple import QTuple

logger = logging.getLogger(__name__)

Transport = List[SparseRow]


@dataclass
class CocycleSpace:
    """Basis of the G-invariant, d_3^*-closed constant cochains."""
    basis: List[ConstantCochain]
    class_dimensions: List[int] = field(default_factory=list)

    @property
    def dimension(self) -> int:
        return len(self.basis)


def _compose(row: SparseRow, transport: Transport) -> SparseRow:
    """row . M: a linear form in alpha^b rewritten in the class unknowns."""
    out: SparseRow = {}
    for p, value in row.items():
        axpy(out, value, transport[p])
    return out


def _move(G: Group, h: int, q: QTuple, transport: Transport) -> Transport:
    """Transport for h^-1 b h from the transport for b: T(h) M_b."""
    moved: Transport = []
    for row in pullback_matrix(G[h], q):
        out: SparseRow = {}
        for p, value in row:
            axpy(out, value, transport[p])
        moved.append(out)
    return moved


def solve_class(G: Group, q: QTuple, c: int) -> List[ConstantCochain]:
    """
    Cocycles supported on one conjugacy class.

    The unknowns are alpha^a at the class representative a. Sweeping the
    class by b -> h^-1 b h over generators h, alpha^b = M_b alpha^a; tree
    edges define M_b, the remaining edges give the equations
    M_{h^-1 b h} = T(h) M_b, and d_3^* vanishing is imposed at every b.
    """
    a = G.representatives()[c]
    size = len(pairs(q.n))
    one = CycScalar.one(q.conductor)
    system = EchelonBasis(ncols=size, conductor=q.conductor)
    if size == 0:
        return []

    transports: Dict[int, Transport] = {a: [{p: one} for p in range(size)]}
    system.extend(d3_star_rows(G[a], q))
    queue = deque([a])
    while queue and not system.is_full():
        b = queue.popleft()
        for h in G.generators:
            b2 = G.conjugate(G.inv(h), b)
            moved = _move(G, h, q, transports[b])
            if b2 not in transports:
                transports[b2] = moved
                queue.append(b2)
                system.extend(_compose(row, moved) for row in d3_star_rows(G[b2], q))
            else:
                existing = transports[b2]
                for p in range(size):
                    difference = dict(moved[p])
                    axpy(difference, -one, existing[p])
                    if difference:
                        system.add(difference)
            if system.is_full():
                break

    if system.is_full():
        logger.debug(f"class {c} (representative {G.word(a)}): no cocycles")
        return []

    basis: List[ConstantCochain] = []
    for vector in system.nullspace(size):
        components: Dict[int, SparseRow] = {}
        for b, transport in transports.items():
            expanded: SparseRow = {}
            for row_index, row in enumerate(transport):
                value = _dot(row, vector)
                if value is not None and not value.is_zero():
                    expanded[row_index] = value
            components[b] = expanded
        basis.append(ConstantCochain.from_components(q.n, q.conductor, components))
    logger.debug(f"class {c} (representative {G.word(a)}): {len(basis)} cocycles")
    return basis


def _dot(row: SparseRow, vector: SparseRow) -> Optional[CycScalar]:
    total = None
    for p, value in row.items():
        x = vector.get(p)
        if x is not None:
            total = value * x if total is None else total + value * x
    return total


def solve_constant_cocycles(G: Group, q: QTuple, threads: Optional[int] = None) -> CocycleSpace:
    """
    Basis of G-invariant constant cochains killed by d_3^*.

    Args:
        G: Enumerated group
        q: Commutation scalars compatible with the action
        threads: Worker threads for the class blocks (default from settings)

    Returns:
        CocycleSpace with the basis in class order

    Raises:
        PreconditionFailed: If either action check fails
    """
    require_action_checks(G, q)
    classes = G.classes()
    workers = threads or settings.worker_threads()
    logger.debug(f"solving {len(classes)} class blocks on {workers} threads")
    if workers <= 1 or len(classes) == 1:
        results = [solve_class(G, q, c) for c in range(len(classes))]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda c: solve_class(G, q, c), range(len(classes))))
    basis = [cochain for block in results for cochain in block]
    return CocycleSpace(basis=basis, class_dimensions=[len(block) for block in results])
