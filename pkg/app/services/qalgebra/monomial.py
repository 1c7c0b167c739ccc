# app/services/qalgebra/monomial.py

import logging
from itertools import combinations_with_replacement
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from app.services.cyclotomic import CycScalar
from app.services.qalgebra.qtuple import QTuple
from app.utils.cache import memoize

logger = logging.getLogger(__name__)


class Monomial(tuple):
    """Exponent vector alpha of v^alpha = v_1^a_1 ... v_n^a_n."""

    __slots__ = ()

    def __new__(cls, exponents: Iterable[int]):
        return super().__new__(cls, exponents)

    @classmethod
    def one(cls, n: int) -> "Monomial":
        return cls((0,) * n)

    @classmethod
    def unit(cls, n: int, i: int) -> "Monomial":
        """The variable v_i (0-based)."""
        return cls(1 if k == i else 0 for k in range(n))

    @classmethod
    def from_word(cls, n: int, word: Sequence[int]) -> "Monomial":
        counts = [0] * n
        for i in word:
            counts[i] += 1
        return cls(counts)

    @property
    def degree(self) -> int:
        return sum(self)

    def word(self) -> Tuple[int, ...]:
        """Sorted variable word of the monomial."""
        out: List[int] = []
        for i, a in enumerate(self):
            out.extend([i] * a)
        return tuple(out)

    def __mul__(self, other):
        return NotImplemented

    def __add__(self, other):
        return NotImplemented

    def shift(self, other: "Monomial") -> "Monomial":
        return Monomial(a + b for a, b in zip(self, other))

    def render(self) -> str:
        parts = [f"v{i + 1}" if a == 1 else f"v{i + 1}^{a}" for i, a in enumerate(self) if a]
        return "*".join(parts)


Poly = Dict[Monomial, CycScalar]


def sq_normalize(word: Sequence[int], q: QTuple) -> Tuple[CycScalar, Monomial]:
    """
    Sort a word of (0-based) variables into a monomial of S_q(V).

    Every inversion v_a ... v_b with a > b contributes one factor q_ab, so
    the result does not depend on the order in which swaps are made.
    """
    coeff = CycScalar.one(q.conductor)
    counts = [0] * q.n
    # counts[b] = occurrences of v_b already seen; each earlier v_a with a > b
    # is an inversion with the current letter
    for letter in word:
        for a in range(letter + 1, q.n):
            if counts[a]:
                coeff = coeff * (q(a, letter) ** counts[a])
        counts[letter] += 1
    return coeff, Monomial(counts)


def mono_mul(left: Monomial, right: Monomial, q: QTuple) -> Tuple[CycScalar, Monomial]:
    """v^left * v^right = c * v^(left+right)."""
    coeff = CycScalar.one(q.conductor)
    for s, a in enumerate(left):
        if not a:
            continue
        for r in range(s):
            b = right[r]
            if b:
                coeff = coeff * (q(s, r) ** (a * b))
    return coeff, left.shift(right)


def poly_add(target: Poly, mono: Monomial, value: CycScalar) -> None:
    current = target.get(mono)
    value = value if current is None else current + value
    if value.is_zero():
        target.pop(mono, None)
    else:
        target[mono] = value


def poly_mul(left: Poly, right: Poly, q: QTuple) -> Poly:
    out: Poly = {}
    for a, ca in left.items():
        for b, cb in right.items():
            c, m = mono_mul(a, b, q)
            poly_add(out, m, c * ca * cb)
    return out


def wedge_normalize(word: Sequence[int], q: QTuple) -> Optional[Tuple[CycScalar, Monomial]]:
    """
    Sort a wedge word in Lambda_q(V) using v_i ^ v_j = -q_ij v_j ^ v_i.

    Returns None when a variable repeats (the wedge vanishes).
    """
    if len(set(word)) != len(word):
        return None
    coeff, mono = sq_normalize(word, q)
    inversions = sum(1 for p in range(len(word)) for r in range(p + 1, len(word)) if word[p] > word[r])
    return (-coeff if inversions % 2 else coeff), mono


@memoize()
def monomials_of_degree(n: int, d: int) -> Tuple[Monomial, ...]:
    """All monomials of degree d in n variables, lexicographically descending in exponents."""
    out = [Monomial.from_word(n, w) for w in combinations_with_replacement(range(n), d)]
    return tuple(out)


@memoize()
def wedges_of_degree(n: int, m: int) -> Tuple[Monomial, ...]:
    """0/1 exponent vectors beta with |beta| = m, in the same order as monomials_of_degree."""
    return tuple(mono for mono in monomials_of_degree(n, m) if all(a <= 1 for a in mono))
