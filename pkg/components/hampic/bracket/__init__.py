from hampic.bracket.fields import (
    MagneticField,
    constant_field,
    field_divergence,
    get_field,
    named_fields,
)
from hampic.bracket.hat import hat_matrix
from hampic.bracket.jacobi import jacobi_residual, jacobi_residuals, matrix_derivatives
from hampic.bracket.poisson_map import fd_jacobian, poisson_map_defect
from hampic.bracket.poisson_matrix import (
    PoissonMatrix,
    build_poisson_matrix,
    discrete_bracket,
    pack_phase,
    unpack_phase,
)
from hampic.bracket.report import (
    classify,
    div_driven,
    print_residuals,
    residual_table,
    summarize,
    zero_expected,
)

__all__ = [
    "MagneticField",
    "PoissonMatrix",
    "build_poisson_matrix",
    "classify",
    "constant_field",
    "discrete_bracket",
    "div_driven",
    "fd_jacobian",
    "field_divergence",
    "get_field",
    "hat_matrix",
    "jacobi_residual",
    "jacobi_residuals",
    "matrix_derivatives",
    "named_fields",
    "pack_phase",
    "poisson_map_defect",
    "print_residuals",
    "residual_table",
    "summarize",
    "unpack_phase",
    "zero_expected",
]
