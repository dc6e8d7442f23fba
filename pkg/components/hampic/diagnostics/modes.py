from typing import Sequence, Tuple, Union

import numpy as np
from hampic.diagnostics.density import GridSpec
from hampic.particles import ParticleEnsemble

GridSource = Tuple[np.ndarray, GridSpec]
Source = Union[ParticleEnsemble, GridSource]


def _angles_and_weights(source: Source, center: Tuple[float, float]):
    if isinstance(source, ParticleEnsemble):
        x = source.X[:, 0] - center[0]
        y = source.X[:, 1] - center[1]

        return np.arctan2(y, x), source.weights

    values, grid = source
    gx, gy = np.meshgrid(
        grid.centers(0) - center[0], grid.centers(1) - center[1], indexing="ij"
    )

    return np.arctan2(gy, gx).ravel(), np.ravel(values)


def azimuthal_coefficient(
    source: Source, l: int, center: Tuple[float, float] = (0.0, 0.0)
) -> complex:
    """Normalized coefficient sum w exp(-i l theta) / sum w."""
    theta, weights = _angles_and_weights(source, center)
    total = float(np.sum(weights))

    return complex(np.sum(weights * np.exp(-1j * l * theta)) / total)


def mode_amplitude(
    source: Source, l: int, center: Tuple[float, float] = (0.0, 0.0)
) -> float:
    """Cosine amplitude relative to mode 0: density 1 + a cos(l theta) gives a."""
    if l == 0:
        return 1.0

    return 2.0 * abs(azimuthal_coefficient(source, l, center))


def mode_phase(
    source: Source, l: int, center: Tuple[float, float] = (0.0, 0.0)
) -> float:
    return float(np.angle(azimuthal_coefficient(source, l, center)))


def phase_drift(times: Sequence[float], phases: Sequence[float]) -> float:
    """Slope of the unwrapped phase; its sign gives the rotation direction."""
    unwrapped = np.unwrap(np.asarray(phases, dtype=float))
    slope, _ = np.polyfit(np.asarray(times, dtype=float), unwrapped, 1)

    return float(slope)
