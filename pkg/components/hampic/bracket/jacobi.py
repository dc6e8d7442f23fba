import numpy as np
from hampic.bracket.fields import MagneticField
from hampic.bracket.poisson_matrix import block_matrix, padded_positions
from hampic.particles import ParticleEnsemble

default_delta = 1e-5


def _matrix_at(
    positions: np.ndarray, weights: np.ndarray, B0_field: MagneticField
) -> np.ndarray:
    return block_matrix(positions, weights, B0_field, 3)


def _central_difference(
    positions: np.ndarray,
    weights: np.ndarray,
    B0_field: MagneticField,
    s: int,
    c: int,
    step: float,
) -> np.ndarray:
    forward = positions.copy()
    backward = positions.copy()
    forward[s, c] += step
    backward[s, c] -= step

    return (
        _matrix_at(forward, weights, B0_field) - _matrix_at(backward, weights, B0_field)
    ) / (2.0 * step)


def matrix_derivatives(
    ensemble: ParticleEnsemble,
    B0_field: MagneticField,
    delta: float = default_delta,
    richardson: bool = False,
) -> np.ndarray:
    """dK[l] = dK/dZ^l by central differences; velocity derivatives vanish."""
    positions = padded_positions(ensemble.X)
    n = ensemble.n_particles
    size = 6 * n
    dK = np.zeros((size, size, size))

    for s in range(n):
        for c in range(3):
            step = delta * max(1.0, abs(positions[s, c]))
            coarse = _central_difference(
                positions, ensemble.weights, B0_field, s, c, step
            )

            if richardson:
                fine = _central_difference(
                    positions, ensemble.weights, B0_field, s, c, step / 2
                )
                coarse = (4.0 * fine - coarse) / 3.0

            dK[3 * s + c] = coarse

    return dK


def jacobi_residuals(
    ensemble: ParticleEnsemble,
    B0_field: MagneticField,
    delta: float = default_delta,
    richardson: bool = False,
) -> np.ndarray:
    """R[i, j, k] = sum_l dK_ij/dZ^l K_lk + dK_jk/dZ^l K_li + dK_ki/dZ^l K_lj."""
    K = _matrix_at(padded_positions(ensemble.X), ensemble.weights, B0_field)
    dK = matrix_derivatives(ensemble, B0_field, delta, richardson)

    return (
        np.einsum("lij,lk->ijk", dK, K)
        + np.einsum("ljk,li->ijk", dK, K)
        + np.einsum("lki,lj->ijk", dK, K)
    )


def jacobi_residual(
    ensemble: ParticleEnsemble,
    B0_field: MagneticField,
    i: int,
    j: int,
    k: int,
    delta: float = default_delta,
    richardson: bool = False,
) -> float:
    size = 6 * ensemble.n_particles

    if not all(0 <= index < size for index in (i, j, k)):
        raise ValueError(f"Indices must lie in [0, {size}), got {(i, j, k)}")

    K = _matrix_at(padded_positions(ensemble.X), ensemble.weights, B0_field)
    dK = matrix_derivatives(ensemble, B0_field, delta, richardson)

    return float(
        dK[:, i, j] @ K[:, k] + dK[:, j, k] @ K[:, i] + dK[:, k, i] @ K[:, j]
    )
