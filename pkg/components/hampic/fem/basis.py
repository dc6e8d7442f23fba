from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import numpy as np
from hampic.fem.space import FemSpace


@dataclass(frozen=True, eq=False)
class AxisStencil:
    """Per-point basis weights along one axis.

    Point ``p`` touches the global nodes ``first_node[p] + arange(width)``
    with basis values ``values[p]`` and physical derivatives ``derivatives[p]``.
    """

    first_node: np.ndarray
    values: np.ndarray
    derivatives: np.ndarray

    @property
    def width(self) -> int:
        return self.values.shape[1]


def reference_basis(order: int, xi) -> Tuple[np.ndarray, np.ndarray]:
    """Lagrange basis on [0, 1] and its derivative with respect to xi."""
    xi = np.asarray(xi, dtype=float)

    if order == 1:
        values = np.stack([1.0 - xi, xi], axis=-1)
        derivatives = np.stack([-np.ones_like(xi), np.ones_like(xi)], axis=-1)
    elif order == 2:
        values = np.stack(
            [
                2.0 * (xi - 0.5) * (xi - 1.0),
                -4.0 * xi * (xi - 1.0),
                2.0 * xi * (xi - 0.5),
            ],
            axis=-1,
        )
        derivatives = np.stack(
            [4.0 * xi - 3.0, -8.0 * xi + 4.0, 4.0 * xi - 1.0], axis=-1
        )
    else:
        raise ValueError(f"Unsupported element order {order}")

    return values, derivatives


def locate(
    space: FemSpace, axis: int, coords: np.ndarray, clip: bool = True
) -> Tuple[np.ndarray, np.ndarray]:
    h = space.h[axis]
    u = (np.asarray(coords, dtype=float) - space.lower[axis]) / h
    cells = np.floor(u).astype(np.int64)

    if clip:
        cells = np.clip(cells, 0, space.n_cells[axis] - 1)

    return cells, u - cells


def axis_stencil(space: FemSpace, axis: int, coords: np.ndarray) -> AxisStencil:
    cells, xi = locate(space, axis, coords)
    values, derivatives = reference_basis(space.order, xi)

    return AxisStencil(
        first_node=space.order * cells,
        values=values,
        derivatives=derivatives / space.h[axis],
    )


def point_stencils(space: FemSpace, points: np.ndarray) -> List[AxisStencil]:
    return [axis_stencil(space, axis, points[:, axis]) for axis in range(space.dim)]


def _axis_dofs(space: FemSpace, axis: int, stencil: AxisStencil) -> np.ndarray:
    nodes = stencil.first_node[:, None] + np.arange(stencil.width)

    return space.node_to_dof(axis, nodes)


def tensor_indices(
    space: FemSpace, stencils: Sequence[AxisStencil]
) -> Tuple[np.ndarray, np.ndarray]:
    """Flattened DOF indices per point plus the mask of entries that are real DOFs."""
    dofs = _axis_dofs(space, 0, stencils[0])
    valid = dofs >= 0

    for axis in range(1, space.dim):
        other = _axis_dofs(space, axis, stencils[axis])
        n_points = dofs.shape[0]
        dofs = (dofs[:, :, None] * space.shape[axis] + other[:, None, :]).reshape(
            n_points, -1
        )
        valid = (valid[:, :, None] & (other >= 0)[:, None, :]).reshape(n_points, -1)

    return dofs, valid


def tensor_values(
    stencils: Sequence[AxisStencil], derivative_axis: Optional[int] = None
) -> np.ndarray:
    def pick(axis: int) -> np.ndarray:
        stencil = stencils[axis]

        return stencil.derivatives if axis == derivative_axis else stencil.values

    result = pick(0)

    for axis in range(1, len(stencils)):
        factor = pick(axis)
        result = (result[:, :, None] * factor[:, None, :]).reshape(result.shape[0], -1)

    return result


def scatter(
    space: FemSpace, stencils: Sequence[AxisStencil], weights: np.ndarray
) -> np.ndarray:
    """Sum weight * basis value of every point onto the DOF vector."""
    dofs, valid = tensor_indices(space, stencils)
    contributions = np.asarray(weights, dtype=float)[:, None] * tensor_values(stencils)

    return np.bincount(
        dofs[valid], weights=contributions[valid], minlength=space.n_dofs
    ).astype(float)


def gather(
    space: FemSpace,
    stencils: Sequence[AxisStencil],
    phi: np.ndarray,
    derivative_axis: Optional[int] = None,
) -> np.ndarray:
    """Evaluate sum_j phi_j * (basis or basis derivative) at every point."""
    dofs, valid = tensor_indices(space, stencils)
    local = np.where(valid, np.asarray(phi)[np.where(valid, dofs, 0)], 0.0)

    return np.sum(local * tensor_values(stencils, derivative_axis), axis=1)
