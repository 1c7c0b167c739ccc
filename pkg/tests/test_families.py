import pytest

from app.schemas.families import BazlovBerensteinSpec, ReflectionGroupSpec, Representation
from app.services.cyclotomic import CycScalar, root_of_unity
from app.services.families import (
    ReflectionFamily,
    bazlov_berenstein,
    build_family,
    diagonal_classify,
    diagonal_hh_dim,
    expected_dimension,
    families_service,
    natural_constant_cocycles,
    natural_reference_maps,
    spans_contain,
    symplectic_constant_cocycles,
    symplectic_reference_maps,
)
from app.services.group.group import close
from app.services.group.matrix import GroupElement
from app.services.koszul import d3_star_constant
from app.services.pbw import diamond_check, ls_check
from app.services.pbw.kappa import KappaMap
from app.services.qalgebra.qtuple import QTuple
from app.utils.error_handling import InvalidFamilySpec, NotDiagonal

SYMPLECTIC = Representation.SYMPLECTIC


def test_symmetric_group_family():
    G, q = build_family(ReflectionGroupSpec(m=1, p=1, n=3))
    assert G.order == 6
    assert G.conductor == 2
    assert all(q(i, j) == -CycScalar.one(2) for i in range(3) for j in range(3) if i != j)


@pytest.mark.parametrize("m, conductor", [(1, 2), (2, 2), (3, 6), (4, 4), (5, 10), (6, 6)])
def test_family_conductor_contains_minus_one(m, conductor):
    assert ReflectionGroupSpec(m=m, p=1, n=2).conductor == conductor


def test_hyperoctahedral_order():
    G, _ = build_family(ReflectionGroupSpec(m=2, p=1, n=4))
    assert G.order == 384


def test_index_p_subgroup_order():
    G, _ = build_family(ReflectionGroupSpec(m=3, p=3, n=3))
    assert G.order == 54


def test_symplectic_family():
    G, q = build_family(ReflectionGroupSpec(m=2, p=1, n=3, representation=SYMPLECTIC))
    assert G.order == 48
    assert q.n == 6
    assert q(0, 3).is_one()
    assert q(1, 4).is_one()
    assert q(0, 4) == -CycScalar.one(2)


@pytest.mark.parametrize(
    "kwargs",
    [
        {"m": 4, "p": 3, "n": 2},
        {"m": 0, "p": 1, "n": 2},
        {"m": 3, "p": 1, "n": 2, "representation": SYMPLECTIC},
        {"m": 4, "p": 2, "n": 2, "representation": SYMPLECTIC},
    ],
)
def test_invalid_family_specs(kwargs):
    with pytest.raises(InvalidFamilySpec):
        ReflectionGroupSpec(**kwargs)


def test_expected_dimensions():
    assert expected_dimension(ReflectionGroupSpec(m=1, p=1, n=4)) == 5
    assert expected_dimension(ReflectionGroupSpec(m=2, p=2, n=5)) == 2
    assert expected_dimension(ReflectionGroupSpec(m=4, p=2, n=4)) == 0
    assert expected_dimension(ReflectionGroupSpec(m=1, p=1, n=3)) is None
    assert expected_dimension(ReflectionGroupSpec(m=4, p=1, n=3, representation=SYMPLECTIC)) == 5


def test_symmetric_group_reference_maps_pass(s4_family):
    maps = natural_reference_maps(s4_family.spec, s4_family)
    assert len(maps) == 5
    G, q = s4_family.group, s4_family.q
    for kappa in maps:
        assert ls_check(kappa, G, q).passed
        assert diamond_check(kappa, G, q).passed


@pytest.mark.parametrize("m,p,n", [(1, 1, 4), (2, 1, 3), (2, 2, 4), (3, 1, 3)])
def test_natural_cocycle_shapes_are_closed(m, p, n):
    family = ReflectionFamily(ReflectionGroupSpec(m=m, p=p, n=n))
    cochains = natural_constant_cocycles(family.spec, family)
    assert cochains
    for c in cochains:
        assert d3_star_constant(c, family.group, family.q) == {}


@pytest.mark.parametrize("m", [2, 4])
def test_symplectic_cocycle_shapes_are_closed(m):
    family = ReflectionFamily(ReflectionGroupSpec(m=m, p=1, n=3, representation=SYMPLECTIC))
    for c in symplectic_constant_cocycles(m, 3, family):
        assert d3_star_constant(c, family.group, family.q) == {}


def test_symplectic_reference_maps_pass():
    family = ReflectionFamily(ReflectionGroupSpec(m=2, p=1, n=3, representation=SYMPLECTIC))
    maps = symplectic_reference_maps(2, 3, family)
    assert len(maps) == 3
    for kappa in maps:
        assert ls_check(kappa, family.group, family.q).passed


def test_diagonal_example_classification(diagonal_ctx):
    G, q = diagonal_ctx.group, diagonal_ctx.q
    basis = diagonal_classify(G, q)
    assert len(basis) == 3
    assert all(set(kappa.values) == {(0, 1)} for kappa in basis)
    assert spans_contain(basis, [diagonal_ctx.kappa])
    for kappa in basis:
        assert ls_check(kappa, G, q).passed


def test_trivial_group_has_one_map():
    G = close([GroupElement.identity(2, 1)], ["id"])
    q = QTuple.uniform(2, 1, value=1)
    basis = diagonal_classify(G, q)
    assert basis == [KappaMap(q, {(0, 1): {G.identity: CycScalar.one(1)}})]


def test_pair_without_support_is_skipped(diagonal_ctx):
    basis = diagonal_classify(diagonal_ctx.group, diagonal_ctx.q)
    assert not any((1, 2) in kappa.values for kappa in basis)


def test_diagonal_report_agrees_with_solver(diagonal_ctx):
    report = families_service.diagonal_report(diagonal_ctx.group, diagonal_ctx.q, threads=1)
    assert report.cocycle_dimension == report.expected_dimension == 3
    assert report.reference_in_span is True
    assert len(report.kappas) == 3


def test_diagonal_routines_reject_permutation_groups(s3):
    G, q = s3
    with pytest.raises(NotDiagonal):
        diagonal_classify(G, q)
    with pytest.raises(NotDiagonal):
        diagonal_hh_dim(G, q, 2, 0)


def test_diagonal_hochschild_counts(diagonal_ctx):
    G, q = diagonal_ctx.group, diagonal_ctx.q
    # constant part of HH^2 matches the classification
    assert diagonal_hh_dim(G, q, 2, 0) == 3
    trivial = close([GroupElement.identity(2, 5)], ["id"])
    generic = QTuple.from_pairs(2, 5, {(0, 1): root_of_unity(5)})
    assert diagonal_hh_dim(trivial, generic, 0, 0) == 1


def test_braided_cherednik_without_deformation():
    spec = BazlovBerensteinSpec(m=2, n=3)
    family = ReflectionFamily(ReflectionGroupSpec(m=2, p=1, n=3, representation=SYMPLECTIC))
    kappa = bazlov_berenstein(spec, family)
    identity = family.group.identity
    assert set(kappa.values) == {(0, 3), (1, 4), (2, 5)}
    for i in range(3):
        assert kappa.value(i, 3 + i) == {identity: CycScalar.one(2)}
    assert ls_check(kappa, family.group, family.q).passed


def test_braided_cherednik_cross_terms():
    spec = BazlovBerensteinSpec(m=2, n=3, c_one="1")
    family = ReflectionFamily(ReflectionGroupSpec(m=2, p=1, n=3, representation=SYMPLECTIC))
    kappa = bazlov_berenstein(spec, family)
    one = CycScalar.one(2)
    assert kappa.value(0, 4) == {family.sigma(0, 1, 0): one, family.sigma(0, 1, 1): -one}
    assert ls_check(kappa, family.group, family.q).passed


def test_braided_cherednik_with_subgroup_parameters():
    spec = BazlovBerensteinSpec(m=4, n=3, subgroup_order=2, c_one="1/2", c={2: "z^1"})
    report = families_service.braided_cherednik(spec)
    assert report.pbw.passed
    assert report.pbw.ls.passed and report.pbw.diamond.passed


@pytest.mark.parametrize(
    "kwargs",
    [
        {"m": 3, "n": 3},
        {"m": 4, "n": 3, "subgroup_order": 3},
        {"m": 4, "n": 3, "subgroup_order": 2, "c": {1: "1"}},
    ],
)
def test_invalid_braided_cherednik_specs(kwargs):
    with pytest.raises(InvalidFamilySpec):
        BazlovBerensteinSpec(**kwargs)
