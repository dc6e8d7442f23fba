import math

import numpy as np
from hampic.particles import ParticleEnsemble, kinetic_energy

psd_tolerance = 1e-12


def _matrix(M):
    return getattr(M, "matrix", M)


def electric_energy(phi: np.ndarray, M) -> float:
    """E_d = sqrt(phi^T M phi)."""
    phi = np.asarray(phi, dtype=float)
    matrix = _matrix(M)

    if matrix.shape != (phi.size, phi.size):
        raise ValueError(
            f"Matrix of shape {matrix.shape} does not match phi of size {phi.size}"
        )

    value = float(phi @ (matrix @ phi))

    if value < -psd_tolerance * max(1.0, float(phi @ phi)):
        raise ArithmeticError(
            f"Negative field energy {value:.3e}: matrix is not positive semidefinite"
        )

    return math.sqrt(max(value, 0.0))


def field_energy(phi: np.ndarray, M) -> float:
    return 0.5 * electric_energy(phi, M) ** 2


def total_energy(ensemble: ParticleEnsemble, phi: np.ndarray, M) -> float:
    """H = 1/2 sum w V^2 + 1/2 phi^T M phi."""
    return kinetic_energy(ensemble) + field_energy(phi, M)
