from hampic.fem.assembly import (
    StiffnessMatrix,
    assemble_axis,
    assemble_stiffness,
    basis_integrals,
    gauss_rule,
)
from hampic.fem.basis import (
    AxisStencil,
    axis_stencil,
    gather,
    locate,
    point_stencils,
    reference_basis,
    scatter,
    tensor_indices,
    tensor_values,
)
from hampic.fem.dump import read_triplets, read_vector, write_triplets, write_vector
from hampic.fem.errors import IncompatibleRHS, NonConvergence, OutOfDomain
from hampic.fem.field import eval_field_at, eval_potential_at
from hampic.fem.solver import FieldCoefficients, SolverConfig, solve_poisson
from hampic.fem.space import (
    BoundaryCondition,
    FemSpace,
    as_points,
    build_space,
    inside_points,
    wrap,
)

__all__ = [
    "AxisStencil",
    "BoundaryCondition",
    "FemSpace",
    "FieldCoefficients",
    "IncompatibleRHS",
    "NonConvergence",
    "OutOfDomain",
    "SolverConfig",
    "StiffnessMatrix",
    "as_points",
    "assemble_axis",
    "assemble_stiffness",
    "axis_stencil",
    "basis_integrals",
    "build_space",
    "eval_field_at",
    "eval_potential_at",
    "gather",
    "gauss_rule",
    "inside_points",
    "locate",
    "point_stencils",
    "read_triplets",
    "read_vector",
    "reference_basis",
    "scatter",
    "solve_poisson",
    "tensor_indices",
    "tensor_values",
    "wrap",
    "write_triplets",
    "write_vector",
]
