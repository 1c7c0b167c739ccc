# app/schemas/reports.py
from enum import Enum
from typing import List, Optional

from pydantic import BaseModel, Field


class ActionCheckKind(str, Enum):
    Q_ACTION = "q_action"
    EXTERIOR_EXTENSION = "exterior_extension"


class CheckScope(str, Enum):
    GENERATORS = "generators"
    ALL = "all"


class LsCondition(str, Enum):
    OVERLAP = "i"
    CONJUGATION = "ii"


class DeformationLaw(str, Enum):
    ASSOCIATIVITY = "associativity"
    COCYCLE = "cocycle"
    DEGREE = "degree"


class ActionViolation(BaseModel):
    element: str = Field(..., description="Group element as a generator word")
    indices: List[int] = Field(..., description="1-based (i, j, k, l)")
    residual: str = Field(..., description="Nonzero value of the identity")


class ActionCheckReport(BaseModel):
    check: ActionCheckKind
    passed: bool
    scope: CheckScope = CheckScope.GENERATORS
    elements_checked: int = 0
    violations: List[ActionViolation] = Field(default_factory=list)


class CheckReport(BaseModel):
    """Both action-compatibility checks for one problem."""
    passed: bool
    group_order: int
    dimension: int
    q_action: ActionCheckReport
    exterior_extension: ActionCheckReport


class GroupTerm(BaseModel):
    coefficient: str
    element: str


class CochainEntry(BaseModel):
    element: str
    i: int
    j: int
    value: str


class CochainModel(BaseModel):
    entries: List[CochainEntry] = Field(default_factory=list)


class KappaEntry(BaseModel):
    i: int = Field(..., description="1-based, i < j")
    j: int
    value: str = Field(..., description="kappa(v_i, v_j) in the element grammar")
    terms: List[GroupTerm] = Field(default_factory=list)


class KappaModel(BaseModel):
    entries: List[KappaEntry] = Field(default_factory=list)
    lines: List[str] = Field(default_factory=list, description="kappa lines in problem-file form")


class CocycleReport(BaseModel):
    conductor: int
    dimension: int = Field(..., description="Space dimension n")
    group_order: int
    classes: int
    cocycle_dimension: int
    basis: List[CochainModel] = Field(default_factory=list)
    kappas: List[KappaModel] = Field(default_factory=list)


class LsViolation(BaseModel):
    condition: LsCondition
    element: str
    witness: List[int] = Field(..., description="1-based indices; (i, j, k) or (i, j)")
    conjugator: Optional[str] = None
    residual: str


class LsReport(BaseModel):
    passed: bool
    violations: List[LsViolation] = Field(default_factory=list)


class DiamondReport(BaseModel):
    passed: bool
    overlaps_checked: int = 0
    overlap: Optional[List[int]] = Field(None, description="1-based (k, j, i) of the first failing overlap")
    conjugation: Optional[List[int]] = Field(None, description="1-based (i, j) of a failing conjugation")
    conjugator: Optional[str] = None
    residual: Optional[str] = None


class PbwReport(BaseModel):
    passed: bool
    ls: LsReport
    diamond: DiamondReport


class TPowerTerm(BaseModel):
    t_power: int
    element: str


class MultiplyReport(BaseModel):
    left: str
    right: str
    product: str
    expansion: List[TPowerTerm] = Field(default_factory=list)


class DeformationFailure(BaseModel):
    law: DeformationLaw
    triple: List[str]
    detail: str


class DeformationLawReport(BaseModel):
    passed: bool
    degree_cap: int
    scope: CheckScope = CheckScope.ALL
    triples_checked: int = 0
    failure: Optional[DeformationFailure] = None


class DegreeDimension(BaseModel):
    degree: int
    expected: int
    actual: int


class GradedDimensionReport(BaseModel):
    passed: bool
    cap: int
    dimensions: List[DegreeDimension] = Field(default_factory=list)
    first_deficient: Optional[int] = None


class DiagonalHHReport(BaseModel):
    cohomological_degree: int
    poly_degree_cap: int
    dimension: int
