from dataclasses import dataclass, replace
from typing import Optional

import numpy as np
from hampic.fem import FemSpace, wrap


@dataclass(frozen=True, eq=False)
class ParticleEnsemble:
    """Marker positions (n, d), velocities (n, 3) and fixed positive weights."""

    X: np.ndarray
    V: np.ndarray
    weights: np.ndarray

    @property
    def n_particles(self) -> int:
        return self.X.shape[0]

    @property
    def dim(self) -> int:
        return self.X.shape[1]


def _positions(X) -> np.ndarray:
    arr = np.array(X, dtype=float)

    if arr.ndim == 1:
        arr = arr.reshape(-1, 1)

    if arr.ndim != 2 or arr.shape[1] not in (1, 2, 3):
        raise ValueError(
            f"Positions must have shape (n, d) with d <= 3, got {arr.shape}"
        )

    return arr


def _velocities(V, n: int) -> np.ndarray:
    arr = np.array(V, dtype=float)

    if arr.ndim == 1:
        arr = arr.reshape(-1, 1)

    if arr.ndim != 2 or arr.shape[0] != n or arr.shape[1] > 3:
        raise ValueError(
            f"Velocities must have shape ({n}, k) with k <= 3, got {arr.shape}"
        )

    full = np.zeros((n, 3))
    full[:, : arr.shape[1]] = arr

    return full


def create_ensemble(X, V, weights) -> ParticleEnsemble:
    positions = _positions(X)
    n = positions.shape[0]

    if n < 1:
        raise ValueError("An ensemble needs at least one particle")

    w = np.array(weights, dtype=float).reshape(-1)

    if w.shape != (n,):
        raise ValueError(f"Expected {n} weights, got {w.shape[0]}")

    if not np.all(w > 0):
        raise ValueError("Particle weights must be positive")

    w.flags.writeable = False

    return ParticleEnsemble(X=positions, V=_velocities(V, n), weights=w)


def with_phase(
    ensemble: ParticleEnsemble,
    X: Optional[np.ndarray] = None,
    V: Optional[np.ndarray] = None,
) -> ParticleEnsemble:
    changes = {}

    if X is not None:
        changes["X"] = X

    if V is not None:
        changes["V"] = V

    return replace(ensemble, **changes)


def wrap_positions(space: FemSpace, X: np.ndarray) -> np.ndarray:
    """Positions folded back into a periodic domain; Dirichlet positions are copied."""
    if not space.is_periodic:
        return np.array(X, dtype=float)

    return wrap(space, X)


def concatenate(first: ParticleEnsemble, second: ParticleEnsemble) -> ParticleEnsemble:
    if first.dim != second.dim:
        raise ValueError(
            f"Cannot join ensembles of dimension {first.dim} and {second.dim}"
        )

    return create_ensemble(
        np.concatenate([first.X, second.X]),
        np.concatenate([first.V, second.V]),
        np.concatenate([first.weights, second.weights]),
    )
