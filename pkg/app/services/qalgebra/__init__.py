from app.services.qalgebra.qtuple import QTuple
from app.services.qalgebra.monomial import (
    Monomial,
    mono_mul,
    monomials_of_degree,
    poly_mul,
    sq_normalize,
    wedge_normalize,
    wedges_of_degree,
)
from app.services.qalgebra.skew import (
    SkewElement,
    act_on_monomial,
    from_group_algebra,
    group_act,
    linear_combination,
    polynomial_times,
    skew_multiply,
)
from app.services.qalgebra.render import render_filtered, render_group_algebra, render_linear, render_skew

__all__ = [
    "Monomial",
    "QTuple",
    "SkewElement",
    "act_on_monomial",
    "from_group_algebra",
    "group_act",
    "linear_combination",
    "mono_mul",
    "monomials_of_degree",
    "poly_mul",
    "polynomial_times",
    "render_filtered",
    "render_group_algebra",
    "render_linear",
    "render_skew",
    "skew_multiply",
    "sq_normalize",
    "wedge_normalize",
    "wedges_of_degree",
]
