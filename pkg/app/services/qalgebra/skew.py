# app/services/qalgebra/skew.py

import logging
from typing import TYPE_CHECKING, Dict, Iterable, Iterator, Optional, Tuple

from app.services.cyclotomic import CycScalar
from app.services.qalgebra.monomial import Monomial, Poly, mono_mul, poly_mul
from app.services.qalgebra.qtuple import QTuple
from app.utils.cache import memoize

if TYPE_CHECKING:
    from app.services.group.group import Group
    from app.services.group.matrix import GroupElement

logger = logging.getLogger(__name__)

SkewKey = Tuple[Monomial, int]


class SkewElement:
    """
    Element of S_q(V) x| G written as sum of c * v^alpha * g.

    Group elements are indices into a Group and sit on the right. Zero
    coefficients are never stored, so equality is structural.
    """

    __slots__ = ("n", "conductor", "terms")

    def __init__(self, n: int, conductor: int, terms: Optional[Dict[SkewKey, CycScalar]] = None):
        self.n = n
        self.conductor = conductor
        self.terms: Dict[SkewKey, CycScalar] = {}
        for key, value in (terms or {}).items():
            if not value.is_zero():
                self.terms[key] = value

    @classmethod
    def zero(cls, n: int, conductor: int) -> "SkewElement":
        return cls(n, conductor)

    @classmethod
    def basis(cls, mono: Monomial, g: int, conductor: int, coeff: Optional[CycScalar] = None) -> "SkewElement":
        return cls(len(mono), conductor, {(mono, g): coeff if coeff is not None else CycScalar.one(conductor)})

    @classmethod
    def group_element(cls, n: int, conductor: int, g: int) -> "SkewElement":
        return cls.basis(Monomial.one(n), g, conductor)

    @classmethod
    def variable(cls, n: int, conductor: int, i: int, g: int = 0) -> "SkewElement":
        return cls.basis(Monomial.unit(n, i), g, conductor)

    def add_term(self, mono: Monomial, g: int, value: CycScalar) -> None:
        key = (mono, g)
        current = self.terms.get(key)
        value = value if current is None else current + value
        if value.is_zero():
            self.terms.pop(key, None)
        else:
            self.terms[key] = value

    def copy(self) -> "SkewElement":
        out = SkewElement(self.n, self.conductor)
        out.terms = dict(self.terms)
        return out

    def __iter__(self) -> Iterator[Tuple[Monomial, int, CycScalar]]:
        for (mono, g), c in self.sorted_terms():
            yield mono, g, c

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (kv[0][0].degree, tuple(-a for a in kv[0][0]), kv[0][1]))

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: "SkewElement") -> "SkewElement":
        out = self.copy()
        for (mono, g), c in other.terms.items():
            out.add_term(mono, g, c)
        return out

    def __neg__(self) -> "SkewElement":
        return SkewElement(self.n, self.conductor, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "SkewElement") -> "SkewElement":
        return self + (-other)

    def scale(self, factor: CycScalar) -> "SkewElement":
        return SkewElement(self.n, self.conductor, {k: c * factor for k, c in self.terms.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SkewElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def degree(self) -> Optional[int]:
        """Largest polynomial degree present, None for zero."""
        return max((mono.degree for mono, _ in self.terms), default=None)

    def group_part(self) -> Dict[int, CycScalar]:
        """Coefficients of the degree-zero part, keyed by group index."""
        return {g: c for (mono, g), c in self.terms.items() if mono.degree == 0}

    def __repr__(self) -> str:
        from app.services.qalgebra.render import render_skew
        return f"SkewElement({render_skew(self)})"


@memoize()
def act_on_monomial(g: "GroupElement", mono: Monomial, q: QTuple) -> Tuple[Tuple[Monomial, CycScalar], ...]:
    """Expansion of g(v^alpha) = prod_i g(v_i)^alpha_i in the monomial basis of S_q(V)."""
    one = CycScalar.one(q.conductor)
    result: Poly = {Monomial.one(q.n): one}
    for i, a in enumerate(mono):
        if not a:
            continue
        image: Poly = {Monomial.unit(q.n, k): c for k, c in g.image(i)}
        for _ in range(a):
            result = poly_mul(result, image, q)
    return tuple(sorted(result.items()))


def skew_multiply(x: SkewElement, y: SkewElement, q: QTuple, G: "Group") -> SkewElement:
    """
    Product in S_q(V) x| G from (a g)(b h) = a g(b) gh.
    """
    out = SkewElement(x.n, x.conductor)
    for (a, g), ca in x.terms.items():
        element = G[g]
        for (b, h), cb in y.terms.items():
            gh = G.mul(g, h)
            coeff = ca * cb
            for mono, cm in act_on_monomial(element, b, q):
                c, product = mono_mul(a, mono, q)
                out.add_term(product, gh, coeff * cm * c)
    return out


def group_act(g: int, x: SkewElement, q: QTuple, G: "Group") -> SkewElement:
    """g(a h) = g(a) * g h g^-1 for g an index into G."""
    element = G[g]
    out = SkewElement(x.n, x.conductor)
    for (a, h), c in x.terms.items():
        conj = G.conjugate(g, h)
        for mono, cm in act_on_monomial(element, a, q):
            out.add_term(mono, conj, c * cm)
    return out


def polynomial_times(poly: Poly, x: SkewElement, q: QTuple) -> SkewElement:
    """Left multiplication of x by a group-free polynomial."""
    out = SkewElement(x.n, x.conductor)
    for a, ca in poly.items():
        for (b, h), cb in x.terms.items():
            c, m = mono_mul(a, b, q)
            out.add_term(m, h, ca * cb * c)
    return out


def from_group_algebra(n: int, conductor: int, coeffs: Dict[int, CycScalar]) -> SkewElement:
    out = SkewElement(n, conductor)
    for g, c in coeffs.items():
        out.add_term(Monomial.one(n), g, c)
    return out


def linear_combination(items: Iterable[Tuple[CycScalar, SkewElement]], n: int, conductor: int) -> SkewElement:
    out = SkewElement(n, conductor)
    for c, x in items:
        for (mono, g), v in x.terms.items():
            out.add_term(mono, g, c * v)
    return out


__all__ = [
    "SkewElement",
    "act_on_monomial",
    "from_group_algebra",
    "group_act",
    "linear_combination",
    "polynomial_times",
    "skew_multiply",
]
