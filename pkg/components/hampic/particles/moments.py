from typing import Optional

import numpy as np
from hampic.parallel import ParallelConfig, pairwise_sum
from hampic.particles.ensemble import ParticleEnsemble


def total_charge(
    ensemble: ParticleEnsemble, parallel: Optional[ParallelConfig] = None
) -> float:
    return float(pairwise_sum(ensemble.weights, parallel))


def total_momentum(
    ensemble: ParticleEnsemble, parallel: Optional[ParallelConfig] = None
) -> np.ndarray:
    return np.asarray(pairwise_sum(ensemble.weights[:, None] * ensemble.V, parallel))


def kinetic_energy(
    ensemble: ParticleEnsemble, parallel: Optional[ParallelConfig] = None
) -> float:
    speed2 = np.sum(ensemble.V**2, axis=1)

    return 0.5 * float(pairwise_sum(ensemble.weights * speed2, parallel))
