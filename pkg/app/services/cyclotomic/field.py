# app/services/cyclotomic/field.py

import logging
from fractions import Fraction
from math import gcd
from typing import Dict, Iterable, Optional, Sequence, Tuple, Union

from app.services.cyclotomic.polynomials import (
    cyclotomic_polynomial,
    poly_divmod,
    poly_gcdex,
    power_reduction_table,
    trim,
)
from app.utils.cache import memoize
from app.utils.error_handling import ConductorMismatch, EmbedError, FieldDivisionByZero

logger = logging.getLogger(__name__)

Rational = Union[int, Fraction]
ScalarLike = Union["CycScalar", int, Fraction]


def field_degree(n: int) -> int:
    return len(cyclotomic_polynomial(n)) - 1


def _reduce(n: int, coeffs: Sequence[Fraction]) -> Tuple[Fraction, ...]:
    """Canonical residue of a polynomial modulo Phi_n."""
    d = field_degree(n)
    if len(coeffs) <= d:
        out = [Fraction(c) for c in coeffs]
        out.extend([Fraction(0)] * (d - len(out)))
        return tuple(out)
    if len(coeffs) <= 2 * d - 1:
        table = power_reduction_table(n)
        out = [Fraction(c) for c in coeffs[:d]]
        for k in range(d, len(coeffs)):
            c = coeffs[k]
            if c:
                row = table[k - d]
                for i in range(d):
                    if row[i]:
                        out[i] += c * row[i]
        return tuple(out)
    _, rem = poly_divmod(list(coeffs), list(cyclotomic_polynomial(n)))
    rem.extend([Fraction(0)] * (d - len(rem)))
    return tuple(rem)


class CycScalar:
    """
    Exact element of the cyclotomic field Q(zeta_N).

    Stored as the unique residue of a rational polynomial modulo Phi_N, so
    structural equality is field equality. Instances are immutable.
    """

    __slots__ = ("conductor", "coeffs", "_hash")

    def __init__(self, conductor: int, coeffs: Iterable[Rational]):
        if conductor < 1:
            raise ValueError(f"conductor must be positive, got {conductor}")
        object.__setattr__(self, "conductor", conductor)
        object.__setattr__(self, "coeffs", _reduce(conductor, list(coeffs)))
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _raw(cls, conductor: int, coeffs: Tuple[Fraction, ...]) -> "CycScalar":
        obj = cls.__new__(cls)
        object.__setattr__(obj, "conductor", conductor)
        object.__setattr__(obj, "coeffs", coeffs)
        object.__setattr__(obj, "_hash", None)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("CycScalar is immutable")

    # constructors

    @classmethod
    def from_rational(cls, conductor: int, value: Rational) -> "CycScalar":
        d = field_degree(conductor)
        return cls._raw(conductor, (Fraction(value),) + (Fraction(0),) * (d - 1))

    @classmethod
    def zero(cls, conductor: int) -> "CycScalar":
        return cls.from_rational(conductor, 0)

    @classmethod
    def one(cls, conductor: int) -> "CycScalar":
        return cls.from_rational(conductor, 1)

    # predicates

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_one(self) -> bool:
        return self.coeffs[0] == 1 and not any(self.coeffs[1:])

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def __bool__(self) -> bool:
        return not self.is_zero()

    # arithmetic

    def _coerce(self, other: ScalarLike) -> "CycScalar":
        if isinstance(other, CycScalar):
            if other.conductor != self.conductor:
                raise ConductorMismatch(self.conductor, other.conductor)
            return other
        if isinstance(other, (int, Fraction)):
            return CycScalar.from_rational(self.conductor, other)
        return NotImplemented

    def __add__(self, other: ScalarLike) -> "CycScalar":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycScalar._raw(self.conductor, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> "CycScalar":
        return CycScalar._raw(self.conductor, tuple(-a for a in self.coeffs))

    def __sub__(self, other: ScalarLike) -> "CycScalar":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycScalar._raw(self.conductor, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other: ScalarLike) -> "CycScalar":
        return (-self) + other

    def __mul__(self, other: ScalarLike) -> "CycScalar":
        if isinstance(other, (int, Fraction)):
            if other == 1:
                return self
            return CycScalar._raw(self.conductor, tuple(a * other for a in self.coeffs))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        d = len(a)
        if d == 1:
            return CycScalar._raw(self.conductor, (a[0] * b[0],))
        prod = [Fraction(0)] * (2 * d - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        prod[i + j] += ai * bj
        return CycScalar._raw(self.conductor, _reduce(self.conductor, prod))

    __rmul__ = __mul__

    def inverse(self) -> "CycScalar":
        """Multiplicative inverse via extended Euclid against Phi_N."""
        if self.is_zero():
            raise FieldDivisionByZero()
        if self.is_rational():
            return CycScalar.from_rational(self.conductor, 1 / self.coeffs[0])
        s, _, g = poly_gcdex(trim(self.coeffs), list(cyclotomic_polynomial(self.conductor)))
        if len(g) != 1:
            raise ArithmeticError("cyclotomic polynomial is not irreducible?")
        return CycScalar(self.conductor, s)

    def __truediv__(self, other: ScalarLike) -> "CycScalar":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other: ScalarLike) -> "CycScalar":
        return self.inverse() * other

    def __pow__(self, exponent: int) -> "CycScalar":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = CycScalar.one(self.conductor)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # comparison

    def __eq__(self, other: object) -> bool:
        if isinstance(other, CycScalar):
            return self.conductor == other.conductor and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs[0] == other and not any(self.coeffs[1:])
        return NotImplemented

    def __ne__(self, other: object) -> bool:
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self) -> int:
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.conductor, self.coeffs)))
        return self._hash

    # roots of unity

    def root_order(self) -> Optional[int]:
        """Multiplicative order if this is a root of unity, else None."""
        if self.is_zero():
            return None
        limit = 2 * self.conductor
        power = self
        for k in range(1, limit + 1):
            if power.is_one():
                return k
            power = power * self
        return None

    def embed(self, target: int) -> "CycScalar":
        """Image under Q(zeta_N) -> Q(zeta_M), zeta_N -> zeta_M^(M/N)."""
        return embed(self, target)

    def __repr__(self) -> str:
        from app.services.cyclotomic.grammar import render_scalar
        return f"CycScalar({self.conductor}, {render_scalar(self)})"


def root_of_unity(conductor: int, k: int = 1) -> CycScalar:
    """zeta_N^k as a canonical residue."""
    return _powers_of_zeta(conductor)[k % conductor]


@memoize()
def _powers_of_zeta(conductor: int) -> Tuple[CycScalar, ...]:
    powers = []
    for k in range(conductor):
        coeffs = [Fraction(0)] * k + [Fraction(1)]
        powers.append(CycScalar(conductor, coeffs))
    return tuple(powers)


@memoize()
def _zeta_power_lookup(conductor: int) -> Dict[CycScalar, int]:
    return {z: k for k, z in enumerate(_powers_of_zeta(conductor))}


def zeta_exponent(value: CycScalar) -> Optional[int]:
    """k with value == zeta_N^k, or None."""
    return _zeta_power_lookup(value.conductor).get(value)


def embed(value: CycScalar, target: int) -> CycScalar:
    if target % value.conductor != 0:
        raise EmbedError(value.conductor, target)
    step = target // value.conductor
    coeffs = [Fraction(0)] * (step * (len(value.coeffs) - 1) + 1)
    for i, c in enumerate(value.coeffs):
        coeffs[i * step] = c
    return CycScalar(target, coeffs)


def lcm_conductor(orders: Iterable[int]) -> int:
    out = 1
    for o in orders:
        out = out * o // gcd(out, o)
    return out
