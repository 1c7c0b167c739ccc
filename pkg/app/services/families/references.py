# app/services/families/references.py
"""
Closed-form PBW parameters and constant cocycles for the reflection families.

These are independent of the generic solver and serve as its oracle: every
map here passes the criteria check and lies in the span of the solver's
output for the same group.
"""

import logging
from itertools import permutations
from typing import Dict, List, Optional, Sequence, Tuple

from app.schemas.families import BazlovBerensteinSpec, ReflectionGroupSpec, Representation
from app.services.cyclotomic import CycScalar, parse_scalar
from app.services.families.reflection import ReflectionFamily, compose, cycle, transposition
from app.services.koszul.cochain import ConstantCochain
from app.services.pbw.kappa import GroupAlgebra, KappaMap, ga_add
from app.services.qalgebra.qtuple import QTuple

logger = logging.getLogger(__name__)

Entry = Tuple[int, int, int, CycScalar]


def _kappa(family: ReflectionFamily, values: Dict[Tuple[int, int], GroupAlgebra]) -> KappaMap:
    return KappaMap(family.q, values)


def _wedge(q: QTuple, a: int, b: int) -> Tuple[Tuple[int, int], CycScalar]:
    """v_a* ^ v_b* in the ordered basis: v_a* ^ v_b* = -q_ba v_b* ^ v_a* for a > b."""
    one = CycScalar.one(q.conductor)
    return ((a, b), one) if a < b else ((b, a), -q(b, a))


def _cochain(family: ReflectionFamily, entries: Sequence[Entry]) -> ConstantCochain:
    q = family.q
    alpha: Dict[Tuple[int, int, int], CycScalar] = {}
    for g, a, b, c in entries:
        (r, s), factor = _wedge(q, a, b)
        key = (g, r, s)
        alpha[key] = alpha[key] + c * factor if key in alpha else c * factor
    return ConstantCochain(q.n, q.conductor, alpha)


def _symmetric_group_maps(family: ReflectionFamily) -> List[KappaMap]:
    n = family.n
    zero = [0] * n
    one = CycScalar.one(family.conductor)
    identity = family.group.identity
    shapes: List[Dict[Tuple[int, int], GroupAlgebra]] = [{} for _ in range(5)]
    for i in range(n):
        for j in range(i + 1, n):
            others = [k for k in range(n) if k not in (i, j)]
            shapes[0][(i, j)] = {identity: one}
            shapes[1][(i, j)] = {family.element(zero, transposition(n, i, j)): one}
            third: GroupAlgebra = {}
            fifth: GroupAlgebra = {}
            for k in others:
                ga_add(third, family.element(zero, transposition(n, i, k)), one)
                ga_add(third, family.element(zero, transposition(n, j, k)), one)
                ga_add(fifth, family.element(zero, cycle(n, i, j, k)), one)
                ga_add(fifth, family.element(zero, cycle(n, i, k, j)), one)
            fourth: GroupAlgebra = {}
            for k, l in permutations(others, 2):
                perm = compose(transposition(n, i, k), transposition(n, j, l))
                ga_add(fourth, family.element(zero, perm), one)
            shapes[2][(i, j)] = third
            shapes[3][(i, j)] = fourth
            shapes[4][(i, j)] = fifth
    return [m for m in (_kappa(family, s) for s in shapes) if not m.is_zero()]


def _hyperoctahedral_maps(family: ReflectionFamily) -> List[KappaMap]:
    n = family.n
    zero = [0] * n
    one = CycScalar.one(family.conductor)
    transpositions: Dict[Tuple[int, int], GroupAlgebra] = {}
    cycles: Dict[Tuple[int, int], GroupAlgebra] = {}
    for i in range(n):
        for j in range(i + 1, n):
            swap = transposition(n, i, j)
            transpositions[(i, j)] = {
                family.element(zero, swap): one,
                family.element(family.exponents({i: 1, j: 1}), swap): -one,
            }
            value: GroupAlgebra = {}
            for k in range(n):
                if k in (i, j):
                    continue
                # signs of 1, z_i z_j, z_j z_k, z_i z_k on (ijk), then on (ikj)
                for perm, signs in ((cycle(n, i, j, k), (1, -1, -1, 1)), (cycle(n, i, k, j), (1, -1, 1, -1))):
                    flips = ({}, {i: 1, j: 1}, {j: 1, k: 1}, {i: 1, k: 1})
                    for flip, sign in zip(flips, signs):
                        ga_add(value, family.element(family.exponents(flip), perm), one if sign > 0 else -one)
            cycles[(i, j)] = value
    return [m for m in (_kappa(family, transpositions), _kappa(family, cycles)) if not m.is_zero()]


def natural_reference_maps(spec: ReflectionGroupSpec, family: Optional[ReflectionFamily] = None) -> List[KappaMap]:
    """
    Classified PBW parameters for G(m, p, n) acting naturally with q = -1.

    Five maps for the symmetric group, two for G(2, 1, n) and G(2, 2, n), and
    none for m >= 3.
    """
    family = family or ReflectionFamily(spec)
    if spec.m == 1:
        return _symmetric_group_maps(family)
    if spec.m == 2:
        return _hyperoctahedral_maps(family)
    return []


def symplectic_maps(family: ReflectionFamily) -> Tuple[Dict[int, KappaMap], KappaMap]:
    """f_eps keyed by the exponent k of eps = zeta^k, and the sigma-sum map."""
    n, m = family.n, family.m
    one = CycScalar.one(family.conductor)
    f: Dict[int, KappaMap] = {}
    for k in range(m):
        f[k] = _kappa(family, {(i, n + i): {family.t(i, k): one} for i in range(n)})
    tilde: Dict[Tuple[int, int], GroupAlgebra] = {}
    for i in range(n):
        diagonal: GroupAlgebra = {}
        for j in range(n):
            if j == i:
                continue
            cross: GroupAlgebra = {}
            for k in range(m):
                ga_add(cross, family.sigma(i, j, k), family.zeta(k))
                ga_add(diagonal, family.sigma(i, j, k), one)
            tilde[(i, n + j)] = cross
        tilde[(i, n + i)] = diagonal
    return f, _kappa(family, tilde)


def symplectic_reference_maps(m: int, n: int, family: Optional[ReflectionFamily] = None) -> List[KappaMap]:
    """The m + 1 classified maps for G(m, 1, n) on U + U*: f_eps for every eps, then the sigma-sum."""
    family = family or ReflectionFamily(ReflectionGroupSpec(m=m, p=1, n=n, representation=Representation.SYMPLECTIC))
    f, tilde = symplectic_maps(family)
    return [f[k] for k in range(m)] + [tilde]


def natural_constant_cocycles(spec: ReflectionGroupSpec, family: Optional[ReflectionFamily] = None) -> List[ConstantCochain]:
    """
    Every instance of the five cocycle shapes for G(m, p, n), q = -1.

    The cochains are d_3^*-closed but not G-invariant.
    """
    family = family or ReflectionFamily(spec)
    n, m, p = family.n, family.m, family.p
    one = CycScalar.one(family.conductor)
    z = family.zeta
    out: List[ConstantCochain] = []

    for r in range(n):
        for s in range(r + 1, n):
            for lr in range(m):
                for ls in range(m):
                    if (lr + ls) % p:
                        continue
                    lam = family.exponents({r: lr, s: ls})
                    out.append(_cochain(family, [(family.element(lam), r, s, one)]))
                    out.append(_cochain(family, [(family.element(lam, transposition(n, r, s)), r, s, one)]))

    for r, s in permutations(range(n), 2):
        for lr in range(m):
            ls = -lr
            g = family.element(family.exponents({r: lr, s: ls}), transposition(n, r, s))
            for t in range(n):
                if t in (r, s):
                    continue
                out.append(_cochain(family, [(g, r, t, z(ls)), (g, s, t, one)]))

    for r, s, t, u in permutations(range(n), 4):
        for lr in range(m):
            for lt in range(m):
                lam = family.exponents({r: lr, s: -lr, t: lt, u: -lt})
                g = family.element(lam, compose(transposition(n, r, s), transposition(n, t, u)))
                out.append(_cochain(family, [
                    (g, r, t, z(-lr)),
                    (g, r, u, z(-lr + lt)),
                    (g, s, t, one),
                    (g, s, u, z(lt)),
                ]))

    for r, s, t in permutations(range(n), 3):
        for lr in range(m):
            for ls in range(m):
                lt = -lr - ls
                g = family.element(family.exponents({r: lr, s: ls, t: lt}), cycle(n, r, s, t))
                out.append(_cochain(family, [
                    (g, r, s, z(ls + lt)),
                    (g, s, t, one),
                    (g, r, t, z(ls)),
                ]))
    return out


def symplectic_constant_cocycles(m: int, n: int, family: Optional[ReflectionFamily] = None) -> List[ConstantCochain]:
    """Every instance of the five cocycle shapes for G(m, 1, n) on U + U*."""
    family = family or ReflectionFamily(ReflectionGroupSpec(m=m, p=1, n=n, representation=Representation.SYMPLECTIC))
    one = CycScalar.one(family.conductor)
    half = m // 2
    out: List[ConstantCochain] = []
    for r in range(n):
        for s in range(n):
            if r == s:
                continue
            g = family.element(family.exponents({r: half, s: half}))
            if r < s:
                out.append(_cochain(family, [(g, r, s, one)]))
                out.append(_cochain(family, [(g, n + r, n + s, one)]))
            out.append(_cochain(family, [(g, r, n + s, one)]))
    for r in range(n):
        for k in range(m):
            out.append(_cochain(family, [(family.t(r, k), r, n + r, one)]))
    for r in range(n):
        for s in range(n):
            if r == s:
                continue
            for k in range(m):
                g = family.sigma(r, s, k)
                xi = family.zeta(k)
                out.append(_cochain(family, [
                    (g, r, n + r, one),
                    (g, s, n + s, one),
                    (g, r, n + s, xi),
                    (g, s, n + r, -xi.inverse()),
                ]))
    return out


def bazlov_berenstein(spec: BazlovBerensteinSpec, family: Optional[ReflectionFamily] = None) -> KappaMap:
    """
    kappa = f_1 + c_1 f~ + sum over eps in C' \\ {1} of c_eps f_eps on G(m, 1, n).

    Raises:
        InvalidFamilySpec: If C' or c is malformed
        ProblemParseError: If a scalar does not parse
    """
    family = family or ReflectionFamily(
        ReflectionGroupSpec(m=spec.m, p=1, n=spec.n, representation=Representation.SYMPLECTIC)
    )
    f, tilde = symplectic_maps(family)
    kappa = f[0] + tilde.scale(parse_scalar(spec.c_one, family.conductor))
    for k in spec.subgroup_exponents():
        if k == 0 or k not in spec.c:
            continue
        kappa = kappa + f[k].scale(parse_scalar(spec.c[k], family.conductor))
    logger.debug(f"braided Cherednik parameter on {len(kappa.values)} pairs")
    return kappa
