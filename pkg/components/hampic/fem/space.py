from dataclasses import dataclass
from enum import Enum
from functools import reduce
from typing import Sequence, Tuple, Type, Union

import numpy as np
from hampic.fem.errors import OutOfDomain


class BoundaryCondition(str, Enum):
    PERIODIC = "periodic"
    DIRICHLET_ZERO = "dirichlet"


@dataclass(frozen=True)
class FemSpace:
    """Tensor-product Lagrange space on a rectangle, one entry per axis."""

    dim: int
    lower: Tuple[float, ...]
    upper: Tuple[float, ...]
    n_cells: Tuple[int, ...]
    order: int
    bc: BoundaryCondition

    @property
    def lengths(self) -> Tuple[float, ...]:
        return tuple(b - a for a, b in zip(self.lower, self.upper))

    @property
    def h(self) -> Tuple[float, ...]:
        return tuple(size / n for size, n in zip(self.lengths, self.n_cells))

    @property
    def volume(self) -> float:
        return float(reduce(lambda acc, size: acc * size, self.lengths, 1.0))

    @property
    def is_periodic(self) -> bool:
        return self.bc == BoundaryCondition.PERIODIC

    def n_nodes(self, axis: int) -> int:
        return self.order * self.n_cells[axis] + 1

    def n_dofs_axis(self, axis: int) -> int:
        last = self.order * self.n_cells[axis]

        return last if self.is_periodic else last - 1

    @property
    def shape(self) -> Tuple[int, ...]:
        return tuple(self.n_dofs_axis(axis) for axis in range(self.dim))

    @property
    def n_dofs(self) -> int:
        return int(np.prod(self.shape))

    def node_coordinates(self, axis: int) -> np.ndarray:
        step = self.h[axis] / self.order

        return self.lower[axis] + step * np.arange(self.n_nodes(axis))

    def dof_coordinates(self, axis: int) -> np.ndarray:
        nodes = self.node_coordinates(axis)

        return nodes[:-1] if self.is_periodic else nodes[1:-1]

    def dof_points(self) -> np.ndarray:
        """Coordinates of every DOF, row-major so that index = i_x * N_y + i_y."""
        axes = [self.dof_coordinates(axis) for axis in range(self.dim)]
        grids = np.meshgrid(*axes, indexing="ij")

        return np.stack([g.ravel() for g in grids], axis=1)

    def node_to_dof(self, axis: int, nodes: np.ndarray) -> np.ndarray:
        """Map global node indices to DOF indices, -1 for Dirichlet boundary nodes."""
        last = self.order * self.n_cells[axis]

        if self.is_periodic:
            return np.mod(nodes, last)

        return np.where((nodes <= 0) | (nodes >= last), -1, nodes - 1)


def _as_pairs(domain, dim: int) -> Tuple[Tuple[float, float], ...]:
    pairs = np.asarray(domain, dtype=float).reshape(-1, 2)

    if pairs.shape[0] != dim:
        raise ValueError(f"Expected {dim} domain interval(s), got {pairs.shape[0]}")

    return tuple((float(a), float(b)) for a, b in pairs)


def build_space(
    dim: int,
    domain,
    n_cells: Union[int, Sequence[int]],
    order: int,
    bc: Union[str, BoundaryCondition],
) -> FemSpace:
    if dim not in (1, 2):
        raise ValueError(f"Unsupported dimension {dim}, expected 1 or 2")

    if order not in (1, 2):
        raise ValueError(f"Unsupported element order {order}, expected 1 or 2")

    condition = BoundaryCondition(bc)
    pairs = _as_pairs(domain, dim)
    cells = (n_cells,) * dim if isinstance(n_cells, (int, np.integer)) else n_cells
    cells = tuple(int(n) for n in cells)

    if len(cells) != dim:
        raise ValueError(f"Expected {dim} cell count(s), got {len(cells)}")

    if any(n < 2 for n in cells):
        raise ValueError(f"Cell counts must be at least 2, got {cells}")

    if any(b <= a for a, b in pairs):
        raise ValueError(f"Empty domain {pairs}")

    return FemSpace(
        dim=dim,
        lower=tuple(a for a, _ in pairs),
        upper=tuple(b for _, b in pairs),
        n_cells=cells,
        order=order,
        bc=condition,
    )


def as_points(space: FemSpace, x) -> np.ndarray:
    points = np.asarray(x, dtype=float)

    if points.ndim == 1 and space.dim == 1:
        points = points.reshape(-1, 1)

    if points.ndim != 2 or points.shape[1] < space.dim:
        raise ValueError(
            f"Expected points of shape (n, {space.dim}), got {points.shape}"
        )

    return points[:, : space.dim]


def wrap(space: FemSpace, x) -> np.ndarray:
    """Periodic wrap into [lower, upper); points already inside stay untouched."""
    points = np.array(as_points(space, x), dtype=float)

    for axis in range(space.dim):
        a, b = space.lower[axis], space.upper[axis]
        column = points[:, axis]
        outside = (column < a) | (column >= b)

        if not outside.any():
            continue

        wrapped = a + np.mod(column[outside] - a, b - a)
        column[outside] = np.where(wrapped >= b, a, wrapped)

    return points


def inside_points(
    space: FemSpace, x, error: Type[OutOfDomain] = OutOfDomain
) -> np.ndarray:
    """Wrap periodic points, reject points outside a Dirichlet domain."""
    if space.is_periodic:
        return wrap(space, x)

    points = as_points(space, x)
    lower = np.asarray(space.lower)
    upper = np.asarray(space.upper)
    bad = np.flatnonzero(np.any((points < lower) | (points > upper), axis=1))

    if bad.size:
        raise error(int(bad.size), int(bad[0]))

    return points
