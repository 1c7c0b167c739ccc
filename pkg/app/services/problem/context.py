# app/services/problem/context.py

import logging
from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple

from app.schemas.problem import Expression, FactorKind, ProblemSpec
from app.services.cyclotomic import CycScalar
from app.services.deform.algebra import DeformedAlgebra
from app.services.deform.filtered import FilteredElement
from app.services.group.group import Group, close
from app.services.group.matrix import GroupElement
from app.services.pbw.kappa import GroupAlgebra, KappaMap, ga_add
from app.services.problem.expression import parse_expression, term_scalar
from app.services.qalgebra.monomial import Monomial
from app.services.qalgebra.qtuple import QTuple
from app.utils.error_handling import AntisymmetryViolation, ProblemInvariantError, ProblemParseError

logger = logging.getLogger(__name__)


@dataclass
class ProblemContext:
    """A problem file resolved into a group, a q-tuple and kappa."""
    spec: ProblemSpec
    group: Group
    q: QTuple
    kappa: KappaMap
    _algebra: Optional[DeformedAlgebra] = field(default=None, repr=False)

    @property
    def n(self) -> int:
        return self.q.n

    @property
    def conductor(self) -> int:
        return self.q.conductor

    def algebra(self) -> DeformedAlgebra:
        """
        The deformed algebra for this kappa, built on first use.

        Raises:
            PbwPreconditionFailed: If kappa fails the criteria check
        """
        if self._algebra is None:
            self._algebra = DeformedAlgebra(self.kappa, self.group, self.q)
        return self._algebra

    def generator(self, name: str, power: int = 1) -> int:
        g = self.group.identity
        base = self.group.generator_index(name)
        for _ in range(power):
            g = self.group.mul(g, base)
        return g


def _group_value(expression: Expression, group: Group, conductor: int, line: int) -> GroupAlgebra:
    """Evaluate an expression that may only contain scalars and group elements."""
    out: GroupAlgebra = {}
    for term in expression.terms:
        g = group.identity
        for factor in term.factors:
            if factor.kind == FactorKind.GENERATOR:
                base = group.generator_index(factor.name)
                for _ in range(factor.power):
                    g = group.mul(g, base)
            elif factor.kind in (FactorKind.VARIABLE, FactorKind.T):
                raise ProblemParseError("kappa values must lie in the group algebra", line)
        ga_add(out, g, term_scalar(term, conductor))
    return out


def build_context(spec: ProblemSpec, cap: Optional[int] = None) -> ProblemContext:
    """
    Close the generators and resolve q and kappa.

    Args:
        spec: Parsed problem
        cap: Closure cap (default from settings)

    Returns:
        ProblemContext

    Raises:
        ClosureCapExceeded: If the group outgrows the cap
        ProblemInvariantError: If kappa contradicts quantum antisymmetry
    """
    n, conductor = spec.dimension, spec.conductor
    if spec.generators:
        generators = [GroupElement(g.rows) for g in spec.generators]
        names = spec.generator_names
    else:
        generators = [GroupElement.identity(n, conductor)]
        names = ["id"]
    group = close(generators, names, cap)
    q = QTuple.from_pairs(n, conductor, spec.q)

    table: Dict[Tuple[int, int], GroupAlgebra] = {}
    for decl in spec.kappa:
        table[(decl.i, decl.j)] = _group_value(decl.expression, group, conductor, decl.line)
    try:
        kappa = KappaMap.from_table(q, table)
    except AntisymmetryViolation as e:
        i, j = e.details["i"], e.details["j"]
        line = next((d.line for d in spec.kappa if (d.i + 1, d.j + 1) in ((i, j), (j, i))), None)
        raise ProblemInvariantError(e.message, line)
    logger.info(f"Problem context: |G|={group.order}, n={n}, field {conductor}, kappa support {len(kappa.group_support())}")
    return ProblemContext(spec=spec, group=group, q=q, kappa=kappa)


def parse_element(text: str, ctx: ProblemContext) -> FilteredElement:
    """
    Parse and evaluate an element of H_{q,kappa,t}.

    Factors multiply left to right in the deformed algebra, so `v2*v1`
    is rewritten with kappa while scalars simply scale.

    Raises:
        ProblemParseError: On syntax errors or unknown names
        PbwPreconditionFailed: If kappa fails the criteria check
    """
    expression = parse_expression(text, ctx.conductor, ctx.n, ctx.spec.generator_names)
    algebra = ctx.algebra()
    n, conductor = ctx.n, ctx.conductor
    one = CycScalar.one(conductor)
    unit = Monomial.one(n)
    total = FilteredElement.zero(n, conductor)
    for term in expression.terms:
        value = FilteredElement(n, conductor, {(unit, ctx.group.identity, 0): term_scalar(term, conductor)})
        for factor in term.factors:
            if factor.kind in (FactorKind.SCALAR, FactorKind.IDENTITY):
                continue
            if factor.kind == FactorKind.VARIABLE:
                exponents = [0] * n
                exponents[factor.index] = factor.power
                right = FilteredElement(n, conductor, {(Monomial(exponents), ctx.group.identity, 0): one})
            elif factor.kind == FactorKind.GENERATOR:
                right = FilteredElement(n, conductor, {(unit, ctx.generator(factor.name, factor.power), 0): one})
            else:
                right = FilteredElement(n, conductor, {(unit, ctx.group.identity, factor.power): one})
            value = algebra.multiply(value, right)
        total = total + value
    return total
