from typing import List, Sequence, Tuple

import numpy as np
from hampic.fem import FemSpace
from hampic.particles import ParticleEnsemble


def convergence_orders(dts: Sequence[float], errors: Sequence[float]) -> List[float]:
    """log(e_j / e_j+1) / log(dt_j / dt_j+1) for consecutive refinements."""
    if len(dts) != len(errors):
        raise ValueError(f"Got {len(dts)} time steps and {len(errors)} errors")

    return [
        float(np.log(errors[j] / errors[j + 1]) / np.log(dts[j] / dts[j + 1]))
        for j in range(len(dts) - 1)
    ]


def fitted_order(dts: Sequence[float], errors: Sequence[float]) -> float:
    slope, _ = np.polyfit(np.log(dts), np.log(errors), 1)

    return float(slope)


def _minimal_image(delta: np.ndarray, space: FemSpace) -> np.ndarray:
    if not space.is_periodic:
        return delta

    lengths = np.asarray(space.lengths)

    return delta - lengths * np.round(delta / lengths)


def phase_space_rms_error(
    a: ParticleEnsemble, b: ParticleEnsemble, space: FemSpace
) -> Tuple[float, float]:
    """RMS over markers of position (periodic aware) and velocity differences."""
    if a.n_particles != b.n_particles:
        raise ValueError(
            f"Ensembles differ in size: {a.n_particles} and {b.n_particles}"
        )

    dx = _minimal_image(a.X - b.X, space)
    dv = a.V - b.V

    position = float(np.sqrt(np.mean(np.sum(dx**2, axis=1))))
    velocity = float(np.sqrt(np.mean(np.sum(dv**2, axis=1))))

    return position, velocity
