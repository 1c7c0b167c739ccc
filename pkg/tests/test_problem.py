import pytest

from app.schemas.problem import FactorKind
from app.services.cyclotomic import CycScalar, root_of_unity
from app.services.problem import build_context, parse_element, parse_expression, parse_problem
from app.services.qalgebra.monomial import Monomial
from app.utils.error_handling import ClosureCapExceeded, ProblemInvariantError, ProblemParseError

HEADER = "field 3\ndim 3\n"


def test_diagonal_example_parses(diagonal_text):
    spec = parse_problem(diagonal_text)
    z = root_of_unity(3)
    assert spec.conductor == 3
    assert spec.dimension == 3
    assert spec.q == {(1, 0): z, (2, 1): z, (0, 2): z}
    assert spec.generator_names == ["g"]
    assert spec.generators[0].rows[1][1] == z ** 2
    assert len(spec.kappa) == 1
    decl = spec.kappa[0]
    assert (decl.i, decl.j, decl.line) == (0, 1, 8)


def test_context_fills_in_inverse_q(diagonal_ctx):
    z = root_of_unity(3)
    q = diagonal_ctx.q
    assert q(0, 1) == z ** 2
    assert q(1, 2) == z ** 2
    assert q(2, 0) == z ** 2
    g = diagonal_ctx.group.generator_index("g")
    assert diagonal_ctx.kappa.value(0, 1) == {g: CycScalar.one(3)}
    # kappa(v2, v1) = -q21 kappa(v1, v2)
    assert diagonal_ctx.kappa.value(1, 0) == {g: -z}


def test_missing_field_is_a_parse_error():
    with pytest.raises(ProblemParseError) as info:
        parse_problem("dim 2\nq 1 2 -1\n")
    assert info.value.line == 2
    with pytest.raises(ProblemParseError):
        parse_problem("# nothing\n")


def test_diagonal_q_entries_must_be_one():
    with pytest.raises(ProblemInvariantError) as info:
        parse_problem(HEADER + "q 1 1 z^1\n")
    assert info.value.line == 3


def test_q_must_be_a_root_of_unity():
    with pytest.raises(ProblemInvariantError):
        parse_problem(HEADER + "q 1 2 2\n")
    with pytest.raises(ProblemInvariantError):
        parse_problem(HEADER + "q 1 2 z^1\nq 2 1 z^1\n")


def test_singular_and_misshapen_generators():
    with pytest.raises(ProblemInvariantError) as info:
        parse_problem(HEADER + "gen g [[1,1,0],[1,1,0],[0,0,1]]\n")
    assert info.value.line == 3
    with pytest.raises(ProblemInvariantError):
        parse_problem(HEADER + "gen g [[1,0],[0,1]]\n")
    with pytest.raises(ProblemParseError):
        parse_problem(HEADER + "gen g [1,0,0]\n")
    with pytest.raises(ProblemParseError):
        parse_problem(HEADER + "gen t [[1,0,0],[0,1,0],[0,0,1]]\n")


def test_unknown_directives_and_names():
    with pytest.raises(ProblemParseError) as info:
        parse_problem(HEADER + "\n\nfoo 1\n")
    assert info.value.line == 5
    with pytest.raises(ProblemParseError):
        parse_problem(HEADER + "kappa 1 2 := 1*h\n")


def test_contradictory_kappa_is_reported_on_its_line(diagonal_text):
    text = diagonal_text + "kappa 2 1 := 1*g\n"
    with pytest.raises(ProblemInvariantError) as info:
        build_context(parse_problem(text))
    assert info.value.line in (8, 9)


def test_kappa_values_must_be_in_the_group_algebra():
    text = HEADER + "gen g [[z^1,0,0],[0,z^2,0],[0,0,1]]\nkappa 1 2 := v1*g\n"
    with pytest.raises(ProblemParseError):
        build_context(parse_problem(text))


def test_closure_cap_applies_to_problem_groups(s3_file):
    from app.services.problem import read_problem
    with pytest.raises(ClosureCapExceeded):
        build_context(read_problem(s3_file), cap=3)


def test_expression_structure():
    expression = parse_expression("-(1/2)*v1^2*g - z^1*t^2 + e", 3, 3, ["g"])
    assert [t.negative for t in expression.terms] == [True, True, False]
    kinds = [f.kind for f in expression.terms[0].factors]
    assert kinds == [FactorKind.SCALAR, FactorKind.VARIABLE, FactorKind.GENERATOR]
    assert expression.terms[0].factors[1].power == 2
    assert expression.terms[1].factors[1].kind == FactorKind.T
    with pytest.raises(ProblemParseError):
        parse_expression("v4", 3, 3, [])
    with pytest.raises(ProblemParseError):
        parse_expression("v1 *", 3, 3, [])
    with pytest.raises(ProblemParseError):
        parse_expression("(1 + z^1", 3, 3, [])


def test_products_are_taken_in_the_deformed_algebra(diagonal_ctx):
    z = root_of_unity(3)
    g = diagonal_ctx.group.generator_index("g")
    product = parse_element("v2*v1", diagonal_ctx)
    # v2 v1 = q21 v1 v2 + t kappa(v2, v1) = z v1 v2 - z t g
    assert product.terms == {
        (Monomial((1, 1, 0)), 0, 0): z,
        (Monomial((0, 0, 0)), g, 1): -z,
    }
    assert parse_element("g*v1", diagonal_ctx).terms == {(Monomial((1, 0, 0)), g, 0): z}
    assert parse_element("v1*v2 - v1*v2", diagonal_ctx).is_zero()
    assert parse_element("2*t^2", diagonal_ctx).terms == {(Monomial((0, 0, 0)), 0, 2): CycScalar.from_rational(3, 2)}
