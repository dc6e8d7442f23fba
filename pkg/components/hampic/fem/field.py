import numpy as np
from hampic.fem.basis import gather, point_stencils
from hampic.fem.space import FemSpace, inside_points


def eval_potential_at(space: FemSpace, phi: np.ndarray, x) -> np.ndarray:
    points = inside_points(space, x)

    return gather(space, point_stencils(space, points), phi)


def eval_field_at(space: FemSpace, phi: np.ndarray, x) -> np.ndarray:
    """Electric field E = -grad(sum_j phi_j W_j) at the given points, shape (n, dim)."""
    points = inside_points(space, x)
    stencils = point_stencils(space, points)

    return -np.stack(
        [
            gather(space, stencils, phi, derivative_axis=axis)
            for axis in range(space.dim)
        ],
        axis=1,
    )
