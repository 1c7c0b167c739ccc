import random

import pytest

from app.services.cyclotomic import CycScalar, root_of_unity
from app.services.families.families_service import spans_contain
from app.services.koszul import (
    ConstantCochain,
    cochain_to_kappa,
    d3_star_constant,
    d_squared,
    invariance_residual,
    kappa_to_cochain,
    koszul_d_star,
    koszul_service,
    reynolds,
    solve_constant_cocycles,
)
from app.services.pbw.kappa import KappaMap
from app.services.qalgebra.qtuple import QTuple
from app.utils.error_handling import PreconditionFailed


def random_qtuple(rng, n, conductor=12):
    pairs = {(i, j): root_of_unity(conductor, rng.randrange(conductor)) for i in range(n) for j in range(i + 1, n)}
    return QTuple.from_pairs(n, conductor, pairs)


@pytest.mark.parametrize("seed", range(10))
def test_koszul_differential_squares_to_zero(seed):
    rng = random.Random(seed)
    n = rng.randint(2, 4)
    q = random_qtuple(rng, n)
    for m in range(2, n + 1):
        assert d_squared(m, q) == {}


def test_dual_differential_shape(diagonal_ctx):
    q = diagonal_ctx.q
    table = koszul_d_star(2, q)
    assert len(table) == 3
    for gamma, terms in table.items():
        # each 2-wedge in three variables extends by the single missing index
        assert len(terms) == 1
        assert terms[0].target == tuple(1 for _ in range(3))


def test_diagonal_example_has_three_cocycles(diagonal_ctx):
    G, q = diagonal_ctx.group, diagonal_ctx.q
    space = solve_constant_cocycles(G, q, threads=1)
    assert space.dimension == 3
    g = G.generator_index("g")
    f12g = KappaMap(q, {(0, 1): {g: CycScalar.one(3)}})
    solved = [cochain_to_kappa(c, q) for c in space.basis]
    assert spans_contain(solved, [f12g])
    assert koszul_service.verify(space, G, q) == []


def test_basis_is_closed_and_invariant(b2_family):
    G, q = b2_family.group, b2_family.q
    space = solve_constant_cocycles(G, q)
    for c in space.basis:
        assert d3_star_constant(c, G, q) == {}
        assert invariance_residual(c, G, q) == []
        assert reynolds(c, G, q) == c


def test_thread_count_does_not_change_the_answer(s3):
    G, q = s3
    serial = solve_constant_cocycles(G, q, threads=1)
    parallel = solve_constant_cocycles(G, q, threads=3)
    assert serial.dimension == parallel.dimension
    assert serial.class_dimensions == parallel.class_dimensions
    assert [c.as_vector() for c in serial.basis] == [c.as_vector() for c in parallel.basis]


def test_non_invariant_cochain_is_detected(s3):
    G, q = s3
    s1 = G.generator_index("s1")
    c = ConstantCochain(3, 1, {(s1, 0, 1): CycScalar.one(1)})
    assert invariance_residual(c, G, q)
    averaged = reynolds(c, G, q)
    assert invariance_residual(averaged, G, q) == []


def test_kappa_and_cochain_views_agree(diagonal_ctx):
    q = diagonal_ctx.q
    c = kappa_to_cochain(diagonal_ctx.kappa)
    assert cochain_to_kappa(c, q) == diagonal_ctx.kappa
    assert c.get(diagonal_ctx.group.generator_index("g"), 0, 1).is_one()


def test_solver_requires_a_compatible_action(s3):
    G, _ = s3
    q = QTuple.from_pairs(3, 1, {(0, 1): -CycScalar.one(1)})
    with pytest.raises(PreconditionFailed):
        solve_constant_cocycles(G, q)


def test_report_carries_cochains_and_kappas(diagonal_ctx):
    report = koszul_service.report(diagonal_ctx.group, diagonal_ctx.q, threads=1)
    assert report.cocycle_dimension == 3
    assert len(report.basis) == len(report.kappas) == 3
    assert report.classes == 3
    assert all(entry.i == 1 and entry.j == 2 for kappa in report.kappas for entry in kappa.entries)
