from dataclasses import dataclass
from functools import lru_cache
from typing import Tuple

import numpy as np
from hampic.fem.basis import reference_basis
from hampic.fem.space import FemSpace
from scipy import sparse


@dataclass(frozen=True, eq=False)
class StiffnessMatrix:
    matrix: sparse.csr_matrix
    space: FemSpace

    def apply(self, phi: np.ndarray) -> np.ndarray:
        return self.matrix @ phi


@lru_cache(maxsize=None)
def gauss_rule(n_points: int) -> Tuple[np.ndarray, np.ndarray]:
    """Gauss-Legendre points and weights mapped to [0, 1]."""
    points, weights = np.polynomial.legendre.leggauss(n_points)

    return 0.5 * (points + 1.0), 0.5 * weights


def local_matrices(order: int, h: float) -> Tuple[np.ndarray, np.ndarray]:
    xi, w = gauss_rule(order + 1)
    values, derivatives = reference_basis(order, xi)

    stiffness = (derivatives.T * w) @ derivatives / h
    mass = (values.T * w) @ values * h

    return stiffness, mass


def _local_dofs(space: FemSpace, axis: int) -> np.ndarray:
    cells = np.arange(space.n_cells[axis])
    nodes = space.order * cells[:, None] + np.arange(space.order + 1)

    return space.node_to_dof(axis, nodes)


def _assemble_local(space: FemSpace, axis: int, local: np.ndarray) -> sparse.csr_matrix:
    dofs = _local_dofs(space, axis)
    rows = np.repeat(dofs, dofs.shape[1], axis=1)
    cols = np.tile(dofs, (1, dofs.shape[1]))
    data = np.broadcast_to(local.ravel(), rows.shape)
    valid = (rows >= 0) & (cols >= 0)
    size = space.n_dofs_axis(axis)

    matrix = sparse.coo_matrix(
        (data[valid], (rows[valid], cols[valid])), shape=(size, size)
    )

    return matrix.tocsr()


def assemble_axis(
    space: FemSpace, axis: int
) -> Tuple[sparse.csr_matrix, sparse.csr_matrix]:
    stiffness, mass = local_matrices(space.order, space.h[axis])

    return _assemble_local(space, axis, stiffness), _assemble_local(space, axis, mass)


def symmetrized(matrix: sparse.spmatrix) -> sparse.csr_matrix:
    """Mirror the strict upper triangle so the result is bit-exactly symmetric."""
    upper = sparse.triu(matrix, k=1)
    diagonal = sparse.diags(matrix.diagonal())
    result = (upper + upper.T + diagonal).tocsr()
    result.sort_indices()

    return result


def assemble_stiffness(space: FemSpace) -> StiffnessMatrix:
    """Global matrix of the bilinear form a(u, v) = integral of grad u . grad v."""
    if space.dim == 1:
        stiffness, _ = assemble_axis(space, 0)
        matrix = stiffness
    else:
        kx, mx = assemble_axis(space, 0)
        ky, my = assemble_axis(space, 1)
        matrix = sparse.kron(kx, my) + sparse.kron(mx, ky)

    result = symmetrized(matrix)
    result.data.flags.writeable = False

    return StiffnessMatrix(matrix=result, space=space)


def axis_basis_integrals(space: FemSpace, axis: int) -> np.ndarray:
    xi, w = gauss_rule(space.order + 1)
    values, _ = reference_basis(space.order, xi)
    local = (w @ values) * space.h[axis]
    dofs = _local_dofs(space, axis)
    data = np.broadcast_to(local, dofs.shape)
    valid = dofs >= 0

    return np.bincount(
        dofs[valid], weights=data[valid], minlength=space.n_dofs_axis(axis)
    ).astype(float)


def basis_integrals(space: FemSpace) -> np.ndarray:
    """Integral of every global basis function over the domain."""
    result = axis_basis_integrals(space, 0)

    for axis in range(1, space.dim):
        result = np.outer(result, axis_basis_integrals(space, axis)).ravel()

    return result
