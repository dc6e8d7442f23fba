from dataclasses import dataclass
from typing import Tuple

import numpy as np
from hampic.bracket.fields import MagneticField
from hampic.bracket.hat import hat_matrix
from hampic.particles import ParticleEnsemble


@dataclass(frozen=True, eq=False)
class PoissonMatrix:
    """Dense K over Z = (X, V), each block ordered particle-major then component."""

    K: np.ndarray
    n_particles: int
    dim: int

    @property
    def size(self) -> int:
        return self.K.shape[0]


def padded_positions(X: np.ndarray) -> np.ndarray:
    points = np.zeros((X.shape[0], 3))
    points[:, : X.shape[1]] = X

    return points


def block_matrix(
    positions: np.ndarray, weights: np.ndarray, B0_field: MagneticField, dim: int
) -> np.ndarray:
    n = weights.size
    inverse = np.kron(np.diag(1.0 / weights), np.eye(dim))
    rotation = np.zeros((n * dim, n * dim))

    for s in range(n):
        block = hat_matrix(B0_field(positions[s]))[:dim, :dim] / weights[s]
        rotation[s * dim : (s + 1) * dim, s * dim : (s + 1) * dim] = block

    zero = np.zeros((n * dim, n * dim))

    return np.block([[zero, inverse], [-inverse, rotation]])


def build_poisson_matrix(
    ensemble: ParticleEnsemble, B0_field: MagneticField, dim: int = 3
) -> PoissonMatrix:
    if dim not in (1, 2, 3):
        raise ValueError(f"dim must be 1, 2 or 3, got {dim}")

    positions = padded_positions(ensemble.X)
    K = block_matrix(positions, ensemble.weights, B0_field, dim)

    return PoissonMatrix(K=K, n_particles=ensemble.n_particles, dim=dim)


def discrete_bracket(gradF, gradG, K) -> float:
    matrix = K.K if isinstance(K, PoissonMatrix) else np.asarray(K)
    f = np.asarray(gradF, dtype=float)
    g = np.asarray(gradG, dtype=float)

    if f.shape != (matrix.shape[0],) or g.shape != (matrix.shape[0],):
        raise ValueError(
            f"Gradients must have length {matrix.shape[0]}, got {f.shape} and {g.shape}"
        )

    return float(f @ matrix @ g)


def pack_phase(ensemble: ParticleEnsemble, dim: int = 3) -> np.ndarray:
    positions = padded_positions(ensemble.X)[:, :dim]

    return np.concatenate([positions.ravel(), ensemble.V[:, :dim].ravel()])


def unpack_phase(
    z: np.ndarray, n_particles: int, dim: int = 3
) -> Tuple[np.ndarray, np.ndarray]:
    half = n_particles * dim

    return z[:half].reshape(n_particles, dim), z[half:].reshape(n_particles, dim)
