"""Generalized inverses, matrix partial orders, and diamond-order
preserver analysis, backed by a C++ core."""

from ._core import (
    LinearMap,
    OrderReport,
    Tol,
    apply_map,
    check_order,
    decompose_preserver,
    gen_diamond_pair,
    gen_star_pair,
    group_inverse,
    inner_inverse,
    invertibility_probe,
    is_maximal_diamond,
    is_minimal_diamond,
    make_canonical,
    matrix_rank,
    minimal_below,
    minus_witness,
    orthogonal,
    pinv,
    preserves_diamond,
    projection_characterization,
    run_suites,
    sample,
)

__all__ = [
    "LinearMap",
    "OrderReport",
    "Tol",
    "apply_map",
    "check_order",
    "decompose_preserver",
    "gen_diamond_pair",
    "gen_star_pair",
    "group_inverse",
    "inner_inverse",
    "invertibility_probe",
    "is_maximal_diamond",
    "is_minimal_diamond",
    "make_canonical",
    "matrix_rank",
    "minimal_below",
    "minus_witness",
    "orthogonal",
    "pinv",
    "preserves_diamond",
    "projection_characterization",
    "run_suites",
    "sample",
]
