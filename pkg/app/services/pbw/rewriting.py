# app/services/pbw/rewriting.py
"""
Rewriting in T(V) x| G [t] modulo the deformed relations

    v_b v_a -> q_ba v_a v_b + t kappa(v_b, v_a)     (b > a)
    g v     -> g(v) g

Terms are keyed by (word, group index, t-power) with the group element on
the right. A word is in normal form when it is non-decreasing.
"""

import logging
from typing import Dict, List, Optional, Tuple

from app.services.cyclotomic import CycScalar
from app.services.group.group import Group
from app.services.pbw.kappa import KappaMap
from app.services.qalgebra.monomial import Monomial
from app.services.qalgebra.qtuple import QTuple

logger = logging.getLogger(__name__)

Word = Tuple[int, ...]
Key = Tuple[Word, int, int]
Terms = Dict[Key, CycScalar]


def add_to(target: Dict, key, value: CycScalar) -> None:
    current = target.get(key)
    value = value if current is None else current + value
    if value.is_zero():
        target.pop(key, None)
    else:
        target[key] = value


def first_descent(word: Word) -> Optional[int]:
    for p in range(len(word) - 1):
        if word[p] > word[p + 1]:
            return p
    return None


def subtract(left: Terms, right: Terms) -> Terms:
    out = dict(left)
    for key, c in right.items():
        add_to(out, key, -c)
    return out


def to_monomial_terms(terms: Terms, n: int) -> Dict[Tuple[Monomial, int, int], CycScalar]:
    """Re-key normal-form terms by exponent vector."""
    out: Dict[Tuple[Monomial, int, int], CycScalar] = {}
    for (word, g, t), c in terms.items():
        add_to(out, (Monomial.from_word(n, word), g, t), c)
    return out


class RewriteSystem:
    """
    Leftmost-descent rewriting for one (kappa, G, q).

    Normal forms of bare words are memoized; w * g reduces to NF(w) * g
    because every rule acts on the word to the left of g.
    """

    def __init__(self, kappa: KappaMap, G: Group, q: QTuple):
        self.kappa = kappa
        self.G = G
        self.q = q
        self.n = q.n
        self.one = CycScalar.one(q.conductor)
        self._nf: Dict[Word, Tuple[Tuple[Key, CycScalar], ...]] = {}
        self._act: Dict[Tuple[int, Word], Tuple[Tuple[Word, CycScalar], ...]] = {}
        self._kappa: Dict[Tuple[int, int], Tuple[Tuple[int, CycScalar], ...]] = {}

    def kappa_value(self, b: int, a: int) -> Tuple[Tuple[int, CycScalar], ...]:
        key = (b, a)
        if key not in self._kappa:
            self._kappa[key] = tuple(sorted(self.kappa.value(b, a).items()))
        return self._kappa[key]

    def act_word(self, g: int, word: Word) -> Tuple[Tuple[Word, CycScalar], ...]:
        """g(w) expanded in the free algebra, letter by letter."""
        if g == self.G.identity or not word:
            return ((word, self.one),)
        key = (g, word)
        cached = self._act.get(key)
        if cached is not None:
            return cached
        element = self.G[g]
        partial: Dict[Word, CycScalar] = {(): self.one}
        for letter in word:
            grown: Dict[Word, CycScalar] = {}
            for prefix, c in partial.items():
                for k, value in element.image(letter):
                    add_to(grown, prefix + (k,), c * value)
            partial = grown
        result = tuple(sorted(partial.items()))
        self._act[key] = result
        return result

    def step(self, word: Word, p: int) -> Terms:
        """Apply the relation at positions (p, p+1), which must be a descent."""
        b, a = word[p], word[p + 1]
        head, tail = word[:p], word[p + 2:]
        out: Terms = {(head + (a, b) + tail, self.G.identity, 0): self.q(b, a)}
        for k, c in self.kappa_value(b, a):
            for moved, value in self.act_word(k, tail):
                add_to(out, (head + moved, k, 1), c * value)
        return out

    def normal_form(self, word: Word) -> Tuple[Tuple[Key, CycScalar], ...]:
        cached = self._nf.get(word)
        if cached is not None:
            return cached
        p = first_descent(word)
        if p is None:
            result: Tuple[Tuple[Key, CycScalar], ...] = (((word, self.G.identity, 0), self.one),)
        else:
            result = tuple(sorted(self.reduce(self.step(word, p)).items()))
        self._nf[word] = result
        return result

    def reduce(self, terms: Terms) -> Terms:
        """Normal form of a combination of (word, g, t) terms."""
        out: Terms = {}
        for (word, g, t), c in terms.items():
            for (nword, k, s), value in self.normal_form(word):
                add_to(out, (nword, self.G.mul(k, g), t + s), c * value)
        return out

    def multiply(self, left: Terms, right: Terms) -> Terms:
        """(w1 g1 t^a)(w2 g2 t^b) = w1 g1(w2) g1 g2 t^(a+b), then reduced."""
        raw: Terms = {}
        for (w1, g1, t1), c1 in left.items():
            for (w2, g2, t2), c2 in right.items():
                g = self.G.mul(g1, g2)
                for moved, value in self.act_word(g1, w2):
                    add_to(raw, (w1 + moved, g, t1 + t2), c1 * c2 * value)
        return self.reduce(raw)

    def overlap(self, k: int, j: int, i: int) -> Tuple[Terms, Terms]:
        """Both resolutions of v_k v_j v_i for k > j > i."""
        word = (k, j, i)
        return self.reduce(self.step(word, 0)), self.reduce(self.step(word, 1))

    def cache_sizes(self) -> Dict[str, int]:
        return {"normal_forms": len(self._nf), "actions": len(self._act)}


def words_of_length(n: int, length: int) -> List[Word]:
    words: List[Word] = [()]
    for _ in range(length):
        words = [w + (i,) for w in words for i in range(n)]
    return words
