import random
from fractions import Fraction

import pytest
import sympy

from app.services.cyclotomic import (
    CycScalar,
    cyclotomic_polynomial,
    embed,
    field_degree,
    lcm_conductor,
    parse_scalar,
    render_scalar,
    root_of_unity,
)
from app.utils.error_handling import ConductorMismatch, EmbedError, FieldDivisionByZero, ProblemParseError


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6, 8, 9, 10, 12, 15, 16, 18, 24, 30])
def test_cyclotomic_polynomial_matches_sympy(n):
    x = sympy.Symbol("x")
    expected = [Fraction(int(c)) for c in reversed(sympy.Poly(sympy.cyclotomic_poly(n, x), x).all_coeffs())]
    assert list(cyclotomic_polynomial(n)) == expected
    assert field_degree(n) == sympy.totient(n)


@pytest.mark.parametrize("n", [3, 4, 5, 6, 8, 12])
def test_roots_of_unity_have_their_order(n):
    z = root_of_unity(n)
    assert z ** n == 1
    assert z.root_order() == n
    assert root_of_unity(n, n + 1) == z
    assert root_of_unity(n, -1) == z.inverse()


def test_sum_of_cube_roots_vanishes(zeta3):
    assert (1 + zeta3 + zeta3 ** 2).is_zero()


def test_fourth_root_squares_to_minus_one():
    i = root_of_unity(4)
    assert i * i == -1
    assert (i * i).is_rational()


def test_inverse_and_division():
    z = root_of_unity(5)
    x = 2 + 3 * z - z ** 3
    assert (x * x.inverse()).is_one()
    assert x / x == 1
    assert (1 / x) * x == 1


def test_zero_has_no_inverse():
    with pytest.raises(FieldDivisionByZero):
        CycScalar.zero(6).inverse()
    with pytest.raises(ZeroDivisionError):
        CycScalar.one(6) / CycScalar.zero(6)


def test_mixing_conductors_is_refused():
    with pytest.raises(ConductorMismatch):
        root_of_unity(3) + root_of_unity(4)


def test_embedding_respects_roots():
    z3 = root_of_unity(3)
    image = embed(z3, 12)
    assert image == root_of_unity(12, 4)
    assert z3.embed(6) == root_of_unity(6, 2)
    with pytest.raises(EmbedError):
        embed(z3, 8)


def random_scalar(rng, conductor):
    value = CycScalar.zero(conductor)
    for _ in range(rng.randint(1, 4)):
        coeff = CycScalar.from_rational(conductor, Fraction(rng.randint(-5, 5), rng.randint(1, 4)))
        value = value + coeff * root_of_unity(conductor, rng.randrange(conductor))
    return value


@pytest.mark.parametrize("source, target", [(2, 4), (3, 6), (3, 12), (4, 12), (5, 10), (6, 12), (4, 8)])
@pytest.mark.parametrize("seed", range(5))
def test_embedding_is_a_ring_homomorphism(source, target, seed):
    rng = random.Random(seed)
    a, b = random_scalar(rng, source), random_scalar(rng, source)
    assert embed(a * b, target) == embed(a, target) * embed(b, target)
    assert embed(a + b, target) == embed(a, target) + embed(b, target)
    assert embed(CycScalar.one(source), target).is_one()
    if not a.is_zero():
        assert embed(a.inverse(), target) == embed(a, target).inverse()


def test_lcm_conductor():
    assert lcm_conductor([2, 3, 4]) == 12
    assert lcm_conductor([5]) == 5


def test_scalars_are_hashable_by_value():
    z = root_of_unity(6)
    assert len({z ** 7, z, z * z ** 6}) == 1
    assert hash(z ** 2 - z) == hash(root_of_unity(6, 2) - root_of_unity(6, 1))


@pytest.mark.parametrize("text, value", [
    ("1", lambda: CycScalar.one(4)),
    ("-3/2", lambda: CycScalar.from_rational(4, Fraction(-3, 2))),
    ("z^1", lambda: root_of_unity(4)),
    ("z^-1", lambda: root_of_unity(4, 3)),
    ("2*z^1 - 1", lambda: 2 * root_of_unity(4) - 1),
    ("-z^2", lambda: CycScalar.one(4)),
])
def test_parse_scalar(text, value):
    assert parse_scalar(text, 4) == value()


def test_parse_scalar_reports_line():
    with pytest.raises(ProblemParseError) as info:
        parse_scalar("2*w", 4, line=7)
    assert info.value.line == 7
    assert "line 7" in info.value.message


def test_render_roots_of_unity():
    assert render_scalar(root_of_unity(8, 3)) == "z^3"
    assert render_scalar(-root_of_unity(3, 1)) == "-1*z^1"
    assert render_scalar(CycScalar.from_rational(5, Fraction(1, 3))) == "1/3"
    assert render_scalar(CycScalar.zero(5)) == "0"


@pytest.mark.parametrize("n", [3, 5, 8])
def test_render_is_read_back(n):
    z = root_of_unity(n)
    for value in (z + 2, Fraction(1, 2) * z ** 2 - 3, z - z ** 2 + Fraction(5, 7)):
        assert parse_scalar(render_scalar(value), n) == value
