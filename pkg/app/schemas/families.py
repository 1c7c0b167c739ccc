# app/schemas/families.py
from enum import Enum
from typing import Dict, List, Optional

from pydantic import BaseModel, Field, model_validator

from app.schemas.reports import KappaModel, PbwReport
from app.services.cyclotomic import lcm_conductor
from app.utils.error_handling import InvalidFamilySpec


class Representation(str, Enum):
    NATURAL = "natural"
    SYMPLECTIC = "symplectic"


class ReflectionGroupSpec(BaseModel):
    """G(m, p, n) in its natural or symplectic representation."""
    m: int = Field(..., description="Order of the root of unity")
    p: int = Field(1, description="Divisor of m cutting out G(m, p, n)")
    n: int = Field(..., description="Rank; the symplectic representation has dimension 2n")
    representation: Representation = Representation.NATURAL

    @model_validator(mode="after")
    def check_parameters(self) -> "ReflectionGroupSpec":
        if min(self.m, self.p, self.n) < 1:
            raise InvalidFamilySpec("m, p and n must be positive", {"m": self.m, "p": self.p, "n": self.n})
        if self.m % self.p:
            raise InvalidFamilySpec(f"p = {self.p} does not divide m = {self.m}", {"m": self.m, "p": self.p})
        if self.representation == Representation.SYMPLECTIC:
            if self.m % 2:
                raise InvalidFamilySpec("the symplectic representation needs m even", {"m": self.m})
            if self.p != 1:
                raise InvalidFamilySpec("the symplectic representation is built for G(m, 1, n)", {"p": self.p})
        return self

    @property
    def dimension(self) -> int:
        return 2 * self.n if self.representation == Representation.SYMPLECTIC else self.n

    @property
    def conductor(self) -> int:
        # -1 is always needed for the q-tuple
        return lcm_conductor([self.m, 2])

    def expected_order(self) -> int:
        factorial = 1
        for k in range(2, self.n + 1):
            factorial *= k
        return self.m ** self.n * factorial // self.p


class BazlovBerensteinSpec(BaseModel):
    """Parameters of a braided Cherednik algebra on G(m, 1, n)."""
    m: int
    n: int = Field(..., ge=3)
    subgroup_order: int = Field(1, description="Order of the subgroup C' of the m-th roots of unity")
    c_one: str = Field("0", description="Scalar c_1 in the element grammar")
    c: Dict[int, str] = Field(default_factory=dict, description="c_eps for eps = zeta^k in C', keyed by k")

    @model_validator(mode="after")
    def check_parameters(self) -> "BazlovBerensteinSpec":
        if self.m < 2 or self.m % 2:
            raise InvalidFamilySpec("m must be a positive even integer", {"m": self.m})
        if self.subgroup_order < 1 or self.m % self.subgroup_order:
            raise InvalidFamilySpec(
                f"C' must have order dividing {self.m}", {"subgroup_order": self.subgroup_order}
            )
        step = self.m // self.subgroup_order
        stray = [k for k in self.c if k % step or not 0 <= k < self.m]
        if stray:
            raise InvalidFamilySpec("c is defined off the subgroup C'", {"exponents": stray})
        return self

    def subgroup_exponents(self) -> List[int]:
        step = self.m // self.subgroup_order
        return list(range(0, self.m, step))


class ClassificationReport(BaseModel):
    family: str
    group_order: int
    dimension: int
    cocycle_dimension: int
    expected_dimension: Optional[int] = None
    reference_maps: int = 0
    reference_in_span: Optional[bool] = None
    kappas: List[KappaModel] = Field(default_factory=list)


class BraidedCherednikReport(BaseModel):
    family: str
    kappa: KappaModel
    pbw: PbwReport
