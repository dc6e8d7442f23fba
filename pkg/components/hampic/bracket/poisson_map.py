from typing import Callable, Optional

import numpy as np

StepMap = Callable[[np.ndarray], np.ndarray]


def fd_jacobian(step_map: StepMap, z: np.ndarray, delta: float = 1e-6) -> np.ndarray:
    """Central-difference Jacobian of a phase-space map, columns scaled per entry."""
    z = np.asarray(z, dtype=float)
    columns = []

    for l in range(z.size):
        step = delta * max(1.0, abs(z[l]))
        forward = z.copy()
        backward = z.copy()
        forward[l] += step
        backward[l] -= step
        columns.append((step_map(forward) - step_map(backward)) / (2.0 * step))

    return np.stack(columns, axis=1)


def poisson_map_defect(
    step_map: StepMap,
    z: np.ndarray,
    K: np.ndarray,
    K_after: Optional[np.ndarray] = None,
    delta: float = 1e-6,
) -> float:
    """max |J K J^T - K(after)| for the Jacobian J of step_map at z."""
    J = fd_jacobian(step_map, z, delta)
    target = K if K_after is None else K_after

    return float(np.max(np.abs(J @ K @ J.T - target)))
