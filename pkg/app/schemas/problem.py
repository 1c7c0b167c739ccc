# app/schemas/problem.py
from enum import Enum
from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field

from app.services.cyclotomic import CycScalar


class FactorKind(str, Enum):
    SCALAR = "scalar"
    VARIABLE = "variable"
    GENERATOR = "generator"
    IDENTITY = "identity"
    T = "t"


class Factor(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    kind: FactorKind
    scalar: Optional[CycScalar] = None
    index: int = Field(0, description="0-based variable index")
    name: Optional[str] = None
    power: int = 1


class Term(BaseModel):
    """A signed left-to-right product of factors."""
    negative: bool = False
    factors: List[Factor] = Field(default_factory=list)


class Expression(BaseModel):
    text: str
    terms: List[Term] = Field(default_factory=list)


class GeneratorDecl(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    name: str
    rows: List[List[CycScalar]]
    line: int


class KappaDecl(BaseModel):
    i: int = Field(..., description="0-based")
    j: int = Field(..., description="0-based")
    expression: Expression
    line: int


class ProblemSpec(BaseModel):
    """A parsed problem file: field, dimension, q-tuple, generators and kappa."""
    model_config = ConfigDict(arbitrary_types_allowed=True)

    conductor: int
    dimension: int
    q: Dict[Tuple[int, int], CycScalar] = Field(default_factory=dict, description="0-based (i, j) -> q_ij")
    generators: List[GeneratorDecl] = Field(default_factory=list)
    kappa: List[KappaDecl] = Field(default_factory=list)

    @property
    def generator_names(self) -> List[str]:
        return [g.name for g in self.generators]
