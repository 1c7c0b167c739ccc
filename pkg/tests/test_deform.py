import pytest

from app.schemas.reports import CheckScope
from app.services.cyclotomic import CycScalar, root_of_unity
from app.services.deform import (
    DeformedAlgebra,
    FilteredElement,
    check_deformation_laws,
    deform_service,
    extract_mu,
    graded_dimension_check,
    h_multiply,
    mu1_table,
)
from app.services.group.group import close
from app.services.group.matrix import GroupElement
from app.services.koszul import kappa_from_mu1, kappa_to_cochain, mu1_on_generators
from app.services.pbw.kappa import KappaMap
from app.services.problem import parse_element
from app.services.qalgebra.monomial import Monomial
from app.services.qalgebra.qtuple import QTuple
from app.services.qalgebra.skew import SkewElement, skew_multiply
from app.utils.error_handling import PbwPreconditionFailed


def variable(ctx, i, g=0):
    return SkewElement.variable(ctx.n, ctx.conductor, i, g)


def test_v2_v1_rewrites_with_a_t_term(diagonal_ctx, zeta3):
    g = diagonal_ctx.group.generator_index("g")
    product = parse_element("v2*v1", diagonal_ctx)
    assert product.terms == {
        (Monomial((1, 1, 0)), 0, 0): zeta3,
        (Monomial((0, 0, 0)), g, 1): -zeta3,
    }


def test_mu_extraction(diagonal_ctx, zeta3):
    G, q, kappa = diagonal_ctx.group, diagonal_ctx.q, diagonal_ctx.kappa
    g = G.generator_index("g")
    v1, v2 = variable(diagonal_ctx, 0), variable(diagonal_ctx, 1)
    assert extract_mu(1, v2, v1, kappa, G, q).group_part() == {g: -zeta3}
    assert extract_mu(1, v1, v2, kappa, G, q).is_zero()
    assert extract_mu(0, v2, v1, kappa, G, q) == skew_multiply(v2, v1, q, G)


def test_product_is_the_sum_of_its_t_coefficients(diagonal_ctx):
    algebra = diagonal_ctx.algebra()
    x = parse_element("v3*v2 + 2*g*v1", diagonal_ctx)
    y = parse_element("v2*v1*g - v3", diagonal_ctx)
    product = algebra.multiply(x, y)
    rebuilt = FilteredElement.zero(3, 3)
    for power in range((product.t_degree() or 0) + 1):
        rebuilt = rebuilt + FilteredElement.from_skew(product.coefficient_of_t(power), power)
    assert rebuilt == product


def test_associativity_on_a_sample(diagonal_ctx):
    algebra = diagonal_ctx.algebra()
    x = parse_element("v2*v2 + g", diagonal_ctx)
    y = parse_element("v3*v1", diagonal_ctx)
    z = parse_element("v2*g^2 + t*v1", diagonal_ctx)
    assert algebra.multiply(algebra.multiply(x, y), z) == algebra.multiply(x, algebra.multiply(y, z))


def test_zero_kappa_multiplies_like_the_skew_group_algebra(diagonal_ctx):
    G, q = diagonal_ctx.group, diagonal_ctx.q
    g = G.generator_index("g")
    x = variable(diagonal_ctx, 2, g) + variable(diagonal_ctx, 1)
    y = variable(diagonal_ctx, 0) + SkewElement.group_element(3, 3, g)
    product = h_multiply(FilteredElement.from_skew(x), FilteredElement.from_skew(y), KappaMap.zero(q), G, q)
    assert product.is_t_free()
    assert product.coefficient_of_t(0) == skew_multiply(x, y, q, G)


def test_mu1_recovers_kappa(diagonal_ctx):
    q, kappa = diagonal_ctx.q, diagonal_ctx.kappa
    assert kappa_from_mu1(mu1_table(diagonal_ctx.algebra()), q) == kappa


def test_averaged_mu1_is_cohomologous(diagonal_ctx):
    G, q, kappa = diagonal_ctx.group, diagonal_ctx.q, diagonal_ctx.kappa
    g = G.generator_index("g")
    table = mu1_on_generators(kappa_to_cochain(kappa), G, q)
    assert table[(0, 1)] == {g: CycScalar.one(3)}
    assert table[(1, 0)] == {}
    assert kappa_from_mu1(table, q) == kappa


def test_deformation_laws_hold_for_the_diagonal_example(diagonal_ctx):
    report = check_deformation_laws(diagonal_ctx.kappa, diagonal_ctx.group, diagonal_ctx.q, degree_cap=3)
    assert report.passed
    assert report.triples_checked > 0
    assert report.failure is None


def test_deformation_laws_for_zero_kappa(s3):
    G, q = s3
    report = deform_service.laws(KappaMap.zero(q), G, q, degree_cap=2)
    assert report.passed
    # 5 group elements, 18 decorated variables and 36 decorated quadratics
    assert report.triples_checked == 125 + 1350 + 4860 + 2700


def test_generator_scope_leaves_the_third_factor_undecorated(s3):
    G, q = s3
    report = check_deformation_laws(KappaMap.zero(q), G, q, degree_cap=1, scope=CheckScope.GENERATORS)
    assert report.passed
    assert report.scope == CheckScope.GENERATORS
    # r, s in {s1, s2}, u one of v1, v2, v3
    assert report.triples_checked == 12


def test_failing_kappa_cannot_be_multiplied(diagonal_ctx):
    G, q = diagonal_ctx.group, diagonal_ctx.q
    g = G.generator_index("g")
    kappa = KappaMap(q, {(0, 2): {g: CycScalar.one(3)}})
    with pytest.raises(PbwPreconditionFailed):
        DeformedAlgebra(kappa, G, q)
    with pytest.raises(PbwPreconditionFailed):
        check_deformation_laws(kappa, G, q)


def test_graded_dimensions_for_the_diagonal_example(diagonal_ctx):
    report = graded_dimension_check(diagonal_ctx.kappa, diagonal_ctx.group, diagonal_ctx.q, d=3)
    assert report.passed
    assert [d.expected for d in report.dimensions] == [3, 9, 18, 30]
    assert all(d.actual == d.expected for d in report.dimensions)


def test_graded_dimensions_detect_a_failed_overlap():
    z = root_of_unity(3)
    G = close([GroupElement.identity(3, 3)], ["id"])
    q = QTuple.from_pairs(3, 3, {(0, 2): z})
    kappa = KappaMap(q, {(0, 1): {G.identity: CycScalar.one(3)}})
    report = graded_dimension_check(kappa, G, q, d=3)
    assert not report.passed
    assert report.first_deficient == 3
    assert report.dimensions[-1].actual < report.dimensions[-1].expected


def test_graded_dimensions_detect_a_non_equivariant_kappa(s3):
    G, q = s3
    kappa = KappaMap(q, {(0, 1): {G.identity: CycScalar.one(1)}})
    report = graded_dimension_check(kappa, G, q, d=2)
    assert not report.passed
    assert report.first_deficient == 2


def test_multiply_report_lists_t_powers(diagonal_ctx):
    x = parse_element("v2", diagonal_ctx)
    y = parse_element("v1", diagonal_ctx)
    report = deform_service.multiply(x, y, diagonal_ctx.kappa, diagonal_ctx.group, diagonal_ctx.q)
    assert report.product == "(z^1)*v1*v2 + (-1*z^1)*t*g"
    assert [term.t_power for term in report.expansion] == [0, 1]
    assert report.expansion[1].element == "(-1*z^1)*g"
    capped = deform_service.multiply(x, y, diagonal_ctx.kappa, diagonal_ctx.group, diagonal_ctx.q, t_cap=0)
    assert len(capped.expansion) == 1
