# app/services/cyclotomic/polynomials.py

import logging
from fractions import Fraction
from typing import List, Sequence, Tuple

from app.utils.cache import memoize

logger = logging.getLogger(__name__)

Poly = Tuple[Fraction, ...]  # coefficients, lowest degree first


def trim(coeffs: Sequence[Fraction]) -> List[Fraction]:
    """Drop trailing zero coefficients (the zero polynomial becomes [])."""
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return out


def poly_mul(a: Sequence[Fraction], b: Sequence[Fraction]) -> List[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            if bj:
                out[i + j] += ai * bj
    return trim(out)


def poly_sub(a: Sequence[Fraction], b: Sequence[Fraction]) -> List[Fraction]:
    size = max(len(a), len(b))
    out = [Fraction(0)] * size
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] -= c
    return trim(out)


def poly_divmod(a: Sequence[Fraction], b: Sequence[Fraction]) -> Tuple[List[Fraction], List[Fraction]]:
    """
    Exact long division of rational polynomials.

    Args:
        a: Dividend coefficients, lowest degree first
        b: Nonzero divisor coefficients, lowest degree first

    Returns:
        (quotient, remainder) with deg remainder < deg b
    """
    b = trim(b)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = trim(a)
    if len(rem) < len(b):
        return [], rem
    quot = [Fraction(0)] * (len(rem) - len(b) + 1)
    lead = b[-1]
    while len(rem) >= len(b):
        shift = len(rem) - len(b)
        factor = Fraction(rem[-1]) / lead
        quot[shift] = factor
        for i, c in enumerate(b):
            rem[shift + i] -= factor * c
        rem = trim(rem)
    return trim(quot), rem


def poly_gcdex(a: Sequence[Fraction], b: Sequence[Fraction]) -> Tuple[List[Fraction], List[Fraction], List[Fraction]]:
    """Extended Euclid over Q[x]: returns (s, t, g) with s*a + t*b = g, g monic."""
    r0, r1 = trim(a), trim(b)
    s0, s1 = [Fraction(1)], []
    t0, t1 = [], [Fraction(1)]
    while r1:
        q, r = poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, poly_sub(s0, poly_mul(q, s1))
        t0, t1 = t1, poly_sub(t0, poly_mul(q, t1))
    if not r0:
        return s0, t0, r0
    lead = r0[-1]
    return ([c / lead for c in s0], [c / lead for c in t0], [c / lead for c in r0])


def divisors(n: int) -> List[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


@memoize()
def cyclotomic_polynomial(n: int) -> Poly:
    """
    The n-th cyclotomic polynomial.

    Computed by dividing x^n - 1 by the product of Phi_d over the proper
    divisors d of n, recursively.

    Args:
        n: Positive integer

    Returns:
        Rational coefficients, lowest degree first
    """
    if n < 1:
        raise ValueError(f"cyclotomic polynomial needs n >= 1, got {n}")
    numerator = [Fraction(-1)] + [Fraction(0)] * (n - 1) + [Fraction(1)]
    denominator = [Fraction(1)]
    for d in divisors(n)[:-1]:
        denominator = poly_mul(denominator, cyclotomic_polynomial(d))
    quotient, remainder = poly_divmod(numerator, denominator)
    if remainder:
        raise ArithmeticError(f"x^{n} - 1 not divisible by lower cyclotomic factors")
    logger.debug(f"Phi_{n} has degree {len(quotient) - 1}")
    return tuple(quotient)


@memoize()
def power_reduction_table(n: int) -> Tuple[Poly, ...]:
    """
    Residues of x^k modulo Phi_n for deg(Phi_n) <= k <= 2*deg(Phi_n) - 2.

    Row r of the result is x^(d + r) mod Phi_n, a length-d tuple.
    """
    phi = cyclotomic_polynomial(n)
    d = len(phi) - 1
    if d < 1:
        return ()
    # x^d = -(phi - x^d) since phi is monic
    current = [-c for c in phi[:d]]
    rows = [tuple(current)]
    for _ in range(d - 2):
        top = current[-1]
        shifted = [Fraction(0)] + current[:-1]
        current = [shifted[i] + top * rows[0][i] for i in range(d)]
        rows.append(tuple(current))
    return tuple(rows)
