import random
from itertools import product

import pytest

from app.schemas.families import ReflectionGroupSpec, Representation
from app.schemas.reports import CheckScope
from app.services.cyclotomic import CycScalar, root_of_unity
from app.services.families.reflection import build_family
from app.services.group import (
    GroupElement,
    check_exterior_extension,
    check_q_action,
    close,
    group_service,
    require_action_checks,
    shortest_words,
)
from app.services.qalgebra.qtuple import QTuple
from app.utils.error_handling import ClosureCapExceeded, NonInvertibleGenerator, PreconditionFailed
from tests.conftest import permutation_matrix, random_group


def test_entry_convention_puts_images_in_columns():
    g = permutation_matrix([1, 2, 0])
    # v_1 -> v_2, so the coefficient of v_2 in g(v_1) sits at row 2, column 1
    assert g.entry(1, 0).is_one()
    assert g.image(0) == ((1, CycScalar.one(1)),)
    assert (g @ g @ g).is_identity()
    assert (g @ g.inverse()).is_identity()


def test_determinant_and_singular_generators():
    one, zero = CycScalar.one(1), CycScalar.zero(1)
    singular = GroupElement([[one, one], [one, one]])
    assert singular.determinant().is_zero()
    with pytest.raises(NonInvertibleGenerator):
        close([singular], ["bad"])
    assert permutation_matrix([1, 0]).determinant() == -1
    assert GroupElement.identity(2, 1) == GroupElement([[one, zero], [zero, one]])


def test_symmetric_group_closure(s3):
    G, _ = s3
    assert G.order == 6
    assert G.identity == 0
    assert G[0].is_identity()
    assert G.word(0) == "e"
    assert sorted(len(c) for c in G.classes()) == [1, 2, 3]


def test_multiplication_and_inverses_are_consistent(s3):
    G, _ = s3
    for a in range(G.order):
        assert G.mul(a, G.inv(a)) == G.identity
        for b in range(G.order):
            assert G[G.mul(a, b)] == G[a] @ G[b]


def test_words_multiply_back_to_their_elements(s3):
    G, _ = s3
    for index, word in enumerate(shortest_words(G)):
        element = G.identity
        if word != "e":
            for name in word.split("*"):
                element = G.mul(element, G.generator_index(name))
        assert element == index


def test_conjugacy_data_on_s4(s4_family):
    G = s4_family.group
    data = G.conjugacy_data()
    assert G.order == 24
    assert len(data.classes) == 5
    assert sorted(len(c) for c in data.classes) == [1, 3, 6, 6, 8]
    for c, members in enumerate(data.classes):
        rep = data.representatives[c]
        assert len(members) * len(data.centralizers[c]) == G.order
        for x in data.centralizers[c]:
            assert G.conjugate(x, rep) == rep
        for t, member in zip(data.cosets[c], members):
            assert G.conjugate(t, rep) == member


def test_closure_cap():
    with pytest.raises(ClosureCapExceeded):
        close([permutation_matrix([1, 0, 2]), permutation_matrix([0, 2, 1])], ["s1", "s2"], cap=4)


def test_cyclic_diagonal_group(diagonal_ctx):
    G = diagonal_ctx.group
    assert G.order == 3
    assert G.is_diagonal()
    g = G.generator_index("g")
    assert G[g].entry(0, 0) == root_of_unity(3, 1)
    assert G.word(G.mul(g, g)) == "g*g"


def test_permutations_respect_uniform_q(s3):
    G, q = s3
    report = group_service.check_actions(G, q, CheckScope.ALL)
    assert report.passed
    assert report.q_action.elements_checked == 6
    require_action_checks(G, QTuple.uniform(3, 1, value=-1))


def test_non_uniform_q_breaks_the_permutation_action(s3):
    G, _ = s3
    one = CycScalar.one(1)
    q = QTuple.from_pairs(3, 1, {(0, 1): -one})
    report = check_q_action(G, q)
    assert not report.passed
    assert report.violations
    assert all(len(v.indices) == 4 for v in report.violations)
    with pytest.raises(PreconditionFailed):
        require_action_checks(G, q)


def test_exterior_extension_for_symmetric_q(s3):
    G, q = s3
    assert check_exterior_extension(G, q).passed


def residual_products(G, q):
    """Nonzero g^i_k g^j_l (1 - q_ij q_lk) or g^i_l g^j_k (q_ij - q_lk), with g^i_k = entry (k, i)."""
    out = []
    for g in range(G.order):
        element = G[g]
        for i, j, k, l in product(range(q.n), repeat=4):
            first = element.entry(k, i) * element.entry(l, j) * (1 - q(i, j) * q(l, k))
            second = element.entry(l, i) * element.entry(k, j) * (q(i, j) - q(l, k))
            if not (first.is_zero() and second.is_zero()):
                out.append((g, i, j, k, l))
    return out


@pytest.mark.parametrize(
    "spec",
    [
        ReflectionGroupSpec(m=1, p=1, n=3),
        ReflectionGroupSpec(m=3, p=1, n=2),
        ReflectionGroupSpec(m=4, p=2, n=2),
        ReflectionGroupSpec(m=2, p=1, n=2, representation=Representation.SYMPLECTIC),
    ],
)
def test_residual_products_vanish_on_reflection_families(spec):
    G, q = build_family(spec)
    assert group_service.check_actions(G, q, CheckScope.ALL).passed
    assert residual_products(G, q) == []


@pytest.mark.parametrize("seed", range(15))
def test_residual_products_vanish_when_both_checks_pass(seed):
    G, q = random_group(random.Random(seed))
    assert group_service.check_actions(G, q, CheckScope.ALL).passed
    assert residual_products(G, q) == []


def test_residual_products_detect_a_broken_action(s3):
    G, _ = s3
    q = QTuple.from_pairs(3, 1, {(0, 1): -CycScalar.one(1)})
    assert not group_service.check_actions(G, q, CheckScope.ALL).passed
    assert residual_products(G, q)
