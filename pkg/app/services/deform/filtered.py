# app/services/deform/filtered.py

from typing import Dict, Iterator, Optional, Tuple

from app.services.cyclotomic import CycScalar
from app.services.pbw.rewriting import Terms, add_to
from app.services.qalgebra.monomial import Monomial
from app.services.qalgebra.skew import SkewElement

FilteredKey = Tuple[Monomial, int, int]


class FilteredElement:
    """
    Element of H_{q,kappa,t}: a sum of c * v^alpha * g * t^k in normal form.

    The filtration degree of a term is the degree of its monomial; group
    elements and t have degree zero.
    """

    __slots__ = ("n", "conductor", "terms")

    def __init__(self, n: int, conductor: int, terms: Optional[Dict[FilteredKey, CycScalar]] = None):
        self.n = n
        self.conductor = conductor
        self.terms: Dict[FilteredKey, CycScalar] = {}
        for (mono, g, power), c in (terms or {}).items():
            if power < 0:
                raise ValueError("t-power must be non-negative")
            add_to(self.terms, (mono, g, power), c)

    @classmethod
    def zero(cls, n: int, conductor: int) -> "FilteredElement":
        return cls(n, conductor)

    @classmethod
    def from_skew(cls, x: SkewElement, power: int = 0) -> "FilteredElement":
        """Embed a t-free element at t^power."""
        return cls(x.n, x.conductor, {(mono, g, power): c for (mono, g), c in x.terms.items()})

    @classmethod
    def from_terms(cls, n: int, conductor: int, terms: Terms) -> "FilteredElement":
        """From rewriting terms keyed by (sorted word, g, t)."""
        out = cls(n, conductor)
        for (word, g, power), c in terms.items():
            add_to(out.terms, (Monomial.from_word(n, word), g, power), c)
        return out

    def coefficient_of_t(self, power: int) -> SkewElement:
        """The t^power coefficient as an element of S_q(V) x| G."""
        return SkewElement(self.n, self.conductor, {
            (mono, g): c for (mono, g, k), c in self.terms.items() if k == power
        })

    def t_degree(self) -> Optional[int]:
        return max((k for _, _, k in self.terms), default=None)

    def is_t_free(self) -> bool:
        return all(k == 0 for _, _, k in self.terms)

    def __iter__(self) -> Iterator[Tuple[Monomial, int, int, CycScalar]]:
        for (mono, g, k), c in sorted(self.terms.items(), key=lambda kv: (kv[0][2], tuple(kv[0][0]), kv[0][1])):
            yield mono, g, k, c

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: "FilteredElement") -> "FilteredElement":
        out = FilteredElement(self.n, self.conductor, self.terms)
        for key, c in other.terms.items():
            add_to(out.terms, key, c)
        return out

    def __neg__(self) -> "FilteredElement":
        return FilteredElement(self.n, self.conductor, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "FilteredElement") -> "FilteredElement":
        return self + (-other)

    def scale(self, factor: CycScalar) -> "FilteredElement":
        return FilteredElement(self.n, self.conductor, {k: c * factor for k, c in self.terms.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FilteredElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        from app.services.qalgebra.render import render_filtered
        return f"FilteredElement({render_filtered(self.terms)})"
