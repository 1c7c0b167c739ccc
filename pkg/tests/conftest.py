import pytest

from app.schemas.families import ReflectionGroupSpec
from app.services.cyclotomic import CycScalar, root_of_unity
from app.services.families.reflection import ReflectionFamily
from app.services.group.group import close
from app.services.group.matrix import GroupElement
from app.services.koszul import cochain_to_kappa, solve_constant_cocycles
from app.services.pbw.kappa import KappaMap
from app.services.problem import build_context, parse_problem
from app.services.qalgebra.qtuple import QTuple
from app.utils.cache import clear_caches

DIAGONAL_EXAMPLE = """\
# cyclic group of order 3 acting diagonally
field 3
dim 3
q 2 1 z^1
q 3 2 z^1
q 1 3 z^1
gen g [[z^1,0,0],[0,z^2,0],[0,0,1]]
kappa 1 2 := 1*g
"""

SYMMETRIC_3 = """\
field 1
dim 3
gen s1 [[0,1,0],[1,0,0],[0,0,1]]
gen s2 [[1,0,0],[0,0,1],[0,1,0]]
"""


def permutation_matrix(perm, conductor=1):
    """Matrix sending v_j to v_perm[j]."""
    one = CycScalar.one(conductor)
    return GroupElement.monomial([(perm[j], one) for j in range(len(perm))])


def random_group(rng):
    """A cyclic diagonal group with random q, or S3 with q = +-1, on three variables."""
    if rng.random() < 0.5:
        conductor = rng.choice([2, 3, 4, 6])
        exponents = [rng.randrange(conductor) for _ in range(3)]
        generator = GroupElement.diagonal([root_of_unity(conductor, k) for k in exponents])
        G = close([generator], ["g"])
        q = QTuple.from_pairs(3, conductor, {
            (i, j): root_of_unity(conductor, rng.randrange(conductor)) for i in range(3) for j in range(i + 1, 3)
        })
        return G, q
    G = close([permutation_matrix([1, 0, 2]), permutation_matrix([0, 2, 1])], ["s1", "s2"])
    return G, QTuple.uniform(3, 1, value=rng.choice([1, -1]))


def _random_scalar(rng, conductor):
    return CycScalar.from_rational(conductor, rng.choice([-2, -1, 1, 2, 3])) * root_of_unity(
        conductor, rng.randrange(conductor)
    )


def random_instance(rng):
    """
    A random (kappa, G, q) on three variables.

    Half the draws are random combinations of the solved PBW parameters; the
    other half add one to three stray group-algebra entries to such a
    combination.
    """
    G, q = random_group(rng)
    conductor = q.conductor
    kappa = KappaMap.zero(q)
    for cochain in solve_constant_cocycles(G, q, threads=1).basis:
        kappa = kappa + cochain_to_kappa(cochain, q).scale(_random_scalar(rng, conductor))
    if rng.random() < 0.5:
        return kappa, G, q
    values = {}
    for _ in range(rng.randint(1, 3)):
        pair = rng.choice([(0, 1), (0, 2), (1, 2)])
        values.setdefault(pair, {})[rng.randrange(G.order)] = _random_scalar(rng, conductor)
    return kappa + KappaMap(q, values), G, q


@pytest.fixture(autouse=True)
def fresh_caches():
    yield
    clear_caches()


@pytest.fixture
def diagonal_text():
    return DIAGONAL_EXAMPLE


@pytest.fixture
def diagonal_ctx():
    return build_context(parse_problem(DIAGONAL_EXAMPLE))


@pytest.fixture
def diagonal_file(tmp_path):
    path = tmp_path / "diagonal.qdh"
    path.write_text(DIAGONAL_EXAMPLE)
    return path


@pytest.fixture
def s3_file(tmp_path):
    path = tmp_path / "s3.qdh"
    path.write_text(SYMMETRIC_3)
    return path


@pytest.fixture
def s3():
    G = close([permutation_matrix([1, 0, 2]), permutation_matrix([0, 2, 1])], ["s1", "s2"])
    return G, QTuple.uniform(3, 1, value=1)


@pytest.fixture
def s4_family():
    return ReflectionFamily(ReflectionGroupSpec(m=1, p=1, n=4))


@pytest.fixture
def b2_family():
    return ReflectionFamily(ReflectionGroupSpec(m=2, p=1, n=2))


@pytest.fixture
def zeta3():
    return root_of_unity(3, 1)


@pytest.fixture
def write_problem(tmp_path):
    def write(text, name="problem.qdh"):
        path = tmp_path / name
        path.write_text(text)
        return path
    return write
