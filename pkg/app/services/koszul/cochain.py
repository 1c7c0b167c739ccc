# app/services/koszul/cochain.py

import logging
from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Optional, Tuple

from app.services.cyclotomic import CycScalar
from app.services.group.checks import require_action_checks
from app.services.group.group import Group
from app.services.group.matrix import GroupElement
from app.services.koszul.complex import koszul_d_star
from app.services.linalg.echelon import SparseRow, axpy
from app.services.qalgebra.monomial import Monomial
from app.services.qalgebra.qtuple import QTuple
from app.services.qalgebra.skew import SkewElement
from app.utils.cache import memoize

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]


@memoize()
def pairs(n: int) -> Tuple[Pair, ...]:
    """Pairs r < s in lexicographic order; position = column index."""
    return tuple((r, s) for r in range(n) for s in range(r + 1, n))


@memoize()
def pair_index(n: int) -> Dict[Pair, int]:
    return {p: k for k, p in enumerate(pairs(n))}


class ConstantCochain:
    """
    Element sum_g sum_{r<s} alpha^g_rs g (x) v_r* ^ v_s* of CG (x) Lambda^2.

    Keys are (g, r, s) with 0-based r < s; zero values are never stored.
    """

    __slots__ = ("n", "conductor", "alpha")

    def __init__(self, n: int, conductor: int, alpha: Optional[Dict[Tuple[int, int, int], CycScalar]] = None):
        self.n = n
        self.conductor = conductor
        self.alpha: Dict[Tuple[int, int, int], CycScalar] = {}
        for (g, r, s), c in (alpha or {}).items():
            if not r < s:
                raise ValueError(f"cochain key ({r}, {s}) must have r < s")
            if not c.is_zero():
                self.alpha[(g, r, s)] = c

    def get(self, g: int, r: int, s: int) -> CycScalar:
        return self.alpha.get((g, r, s), CycScalar.zero(self.conductor))

    def component(self, g: int) -> SparseRow:
        """alpha^g as a sparse vector over pair columns."""
        index = pair_index(self.n)
        return {index[(r, s)]: c for (h, r, s), c in self.alpha.items() if h == g}

    def group_support(self) -> List[int]:
        return sorted({g for g, _, _ in self.alpha})

    def items(self) -> Iterator[Tuple[int, int, int, CycScalar]]:
        for (g, r, s) in sorted(self.alpha):
            yield g, r, s, self.alpha[(g, r, s)]

    def is_zero(self) -> bool:
        return not self.alpha

    def scale(self, factor: CycScalar) -> "ConstantCochain":
        return ConstantCochain(self.n, self.conductor, {k: c * factor for k, c in self.alpha.items()})

    def __add__(self, other: "ConstantCochain") -> "ConstantCochain":
        out = dict(self.alpha)
        for key, c in other.alpha.items():
            out[key] = out[key] + c if key in out else c
        return ConstantCochain(self.n, self.conductor, out)

    def __sub__(self, other: "ConstantCochain") -> "ConstantCochain":
        return self + other.scale(CycScalar.from_rational(self.conductor, -1))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ConstantCochain):
            return NotImplemented
        return self.n == other.n and self.alpha == other.alpha

    def as_vector(self) -> Dict[Tuple[int, int, int], CycScalar]:
        return dict(self.alpha)

    @classmethod
    def from_components(cls, n: int, conductor: int, components: Dict[int, SparseRow]) -> "ConstantCochain":
        plist = pairs(n)
        return cls(n, conductor, {
            (g, *plist[col]): c for g, row in components.items() for col, c in row.items()
        })

    def __repr__(self) -> str:
        return f"ConstantCochain({len(self.alpha)} entries over {self.group_support()})"


@memoize()
def pullback_matrix(h: GroupElement, q: QTuple) -> Tuple[Tuple[Tuple[int, CycScalar], ...], ...]:
    """
    Sparse rows of T(h), with (T(h) alpha)_ij = sum_{k<l} (h^i_k h^j_l - q_lk h^i_l h^j_k) alpha_kl.

    Row index and column index both follow pairs(n); h^i_k is entry (k, i).
    """
    plist = pairs(q.n)
    rows = []
    for (i, j) in plist:
        row = []
        for col, (k, l) in enumerate(plist):
            value = h.entry(k, i) * h.entry(l, j) - q(l, k) * h.entry(l, i) * h.entry(k, j)
            if not value.is_zero():
                row.append((col, value))
        rows.append(tuple(row))
    return tuple(rows)


def apply_pullback(h: GroupElement, q: QTuple, vector: SparseRow) -> SparseRow:
    out: SparseRow = {}
    for row_index, row in enumerate(pullback_matrix(h, q)):
        total = None
        for col, value in row:
            x = vector.get(col)
            if x is not None:
                total = value * x if total is None else total + value * x
        if total is not None and not total.is_zero():
            out[row_index] = total
    return out


def psi2_apply(c: ConstantCochain, i: int, j: int) -> Dict[int, CycScalar]:
    """sum_g alpha^g_ij g for i < j; zero when i >= j."""
    if i >= j:
        return {}
    return {g: value for (g, r, s), value in c.alpha.items() if (r, s) == (i, j)}


def d3_star_constant(c: ConstantCochain, G: Group, q: QTuple) -> Dict[Monomial, SkewElement]:
    """
    d_3^* of a constant cochain: for each wedge of degree 3 an element of
    S_q(V) x| G with linear polynomial coefficients. Zero wedges are omitted.
    """
    table = koszul_d_star(2, q)
    out: Dict[Monomial, SkewElement] = {}
    for (g, r, s), value in c.alpha.items():
        gamma = Monomial(1 if t in (r, s) else 0 for t in range(q.n))
        element = G[g]
        for term in table[gamma]:
            target = out.setdefault(term.target, SkewElement(q.n, q.conductor))
            i = term.variable
            target.add_term(Monomial.unit(q.n, i), g, value * term.left * term.sign)
            for k, gik in element.image(i):
                target.add_term(Monomial.unit(q.n, k), g, -(value * term.right * gik * term.sign))
    return {beta: x for beta, x in out.items() if not x.is_zero()}


@memoize()
def d3_star_rows(element: GroupElement, q: QTuple) -> Tuple[SparseRow, ...]:
    """
    Linear equations in alpha^g (columns = pairs) expressing d_3^* alpha = 0
    at a single group element with matrix `element`.
    """
    table = koszul_d_star(2, q)
    index = pair_index(q.n)
    rows: Dict[Tuple[Monomial, int], SparseRow] = {}
    for (r, s), col in index.items():
        gamma = Monomial(1 if t in (r, s) else 0 for t in range(q.n))
        for term in table[gamma]:
            i = term.variable
            contributions = [(i, term.left * term.sign)]
            contributions.extend((k, -(term.right * gik * term.sign)) for k, gik in element.image(i))
            for k, value in contributions:
                row = rows.setdefault((term.target, k), {})
                total = row[col] + value if col in row else value
                if total.is_zero():
                    row.pop(col, None)
                else:
                    row[col] = total
    return tuple(row for _, row in sorted(rows.items(), key=lambda kv: (tuple(kv[0][0]), kv[0][1])) if row)


def invariance_residual(
    c: ConstantCochain,
    G: Group,
    q: QTuple,
    elements: Optional[Iterable[int]] = None,
) -> List[Tuple[int, int, int, int]]:
    """
    (h, g, i, j) where alpha^{h^-1 g h}_ij differs from (T(h) alpha^g)_ij.

    Defaults to every group element h.
    """
    plist = pairs(q.n)
    zero = CycScalar.zero(q.conductor)
    bad: List[Tuple[int, int, int, int]] = []
    components = {g: c.component(g) for g in range(G.order)}
    for h in (elements if elements is not None else range(G.order)):
        h_inv = G.inv(h)
        for g in range(G.order):
            moved = apply_pullback(G[h], q, components[g])
            target = components[G.conjugate(h_inv, g)]
            for col, pair in enumerate(plist):
                if moved.get(col, zero) != target.get(col, zero):
                    bad.append((h, g, pair[0], pair[1]))
    return bad


def reynolds(c: ConstantCochain, G: Group, q: QTuple) -> ConstantCochain:
    """
    Group average (1/|G|) sum_h h*alpha with (h*alpha)^g = T(h) alpha^{h g h^-1}.
    """
    components = {g: c.component(g) for g in c.group_support()}
    total: Dict[int, SparseRow] = {}
    for h in range(G.order):
        h_inv = G.inv(h)
        for g, row in components.items():
            # (h*alpha)^{g'} picks up alpha^g at g' = h^-1 g h
            target = total.setdefault(G.conjugate(h_inv, g), {})
            axpy(target, CycScalar.one(q.conductor), apply_pullback(G[h], q, row))
    factor = CycScalar.from_rational(q.conductor, Fraction(1, G.order))
    return ConstantCochain.from_components(
        q.n, q.conductor, {g: {col: v * factor for col, v in row.items()} for g, row in total.items()}
    )


def mu1_on_generators(c: ConstantCochain, G: Group, q: QTuple) -> Dict[Pair, Dict[int, CycScalar]]:
    """
    mu_1(v_i (x) v_j) = (1/|G|) sum_g g(alpha(Psi_2(1 (x) g^-1 v_i (x) g^-1 v_j (x) 1))) for all i, j.

    The action of g on CG is conjugation.

    Raises:
        PreconditionFailed: If the action checks fail
    """
    require_action_checks(G, q)
    n = q.n
    by_pair: Dict[Pair, Dict[int, CycScalar]] = {}
    for (h, r, s), value in c.alpha.items():
        by_pair.setdefault((r, s), {})[h] = value
    factor = CycScalar.from_rational(q.conductor, Fraction(1, G.order))
    table: Dict[Pair, Dict[int, CycScalar]] = {(i, j): {} for i in range(n) for j in range(n)}
    for g in range(G.order):
        inverse = G[G.inv(g)]
        conjugated = {}
        for i in range(n):
            for k, a in inverse.image(i):
                for j in range(n):
                    for l, b in inverse.image(j):
                        if k >= l or (k, l) not in by_pair:
                            continue
                        for h, value in by_pair[(k, l)].items():
                            if h not in conjugated:
                                conjugated[h] = G.conjugate(g, h)
                            target = table[(i, j)]
                            x = conjugated[h]
                            contribution = a * b * value * factor
                            target[x] = target[x] + contribution if x in target else contribution
    return {key: {g: v for g, v in value.items() if not v.is_zero()} for key, value in table.items()}
