from dataclasses import dataclass
from typing import List, Optional

import numpy as np
from hampic.bracket import (
    div_driven,
    field_divergence,
    get_field,
    jacobi_residuals,
    residual_table,
    summarize,
    zero_expected,
)
from hampic.particles import ParticleEnsemble, create_ensemble

zero_tolerance = 1e-8
div_tolerance = 0.1
max_particles = 4


@dataclass(frozen=True)
class BracketCheck:
    field: str
    n_particles: int
    rows: List[dict]
    max_zero_expected: float
    max_div_error: Optional[float]
    passed: bool


def random_ensemble(n_particles: int, seed: int = 0) -> ParticleEnsemble:
    """Positions in [-1, 1]^3, standard normal velocities, weights in [0.5, 1.5]."""
    rng = np.random.default_rng(seed)
    X = rng.uniform(-1.0, 1.0, size=(n_particles, 3))
    V = rng.standard_normal((n_particles, 3))
    weights = rng.uniform(0.5, 1.5, size=n_particles)

    return create_ensemble(X, V, weights)


def expected_div_residual(row: dict, ensemble: ParticleEnsemble, div: float) -> float:
    s = (row["i"] - 3 * ensemble.n_particles) // 3

    return div / ensemble.weights[s] ** 2


def div_errors(rows: List[dict], ensemble: ParticleEnsemble, div: float) -> List[float]:
    """Relative mismatch of |R| against div B / w_s^2 on the div-driven triples."""
    errors = []

    for row in rows:
        if row["class"] != div_driven:
            continue

        expected = expected_div_residual(row, ensemble, div)
        errors.append(abs(abs(row["residual"]) - abs(expected)) / abs(expected))

    return errors


def verify_bracket(
    n_particles: int = 2,
    field: str = "constant",
    seed: int = 0,
    delta: float = 1e-5,
    richardson: bool = False,
) -> BracketCheck:
    """Jacobi residuals for a random ensemble under one named field.

    Triples that must vanish pass at 1e-8; when the field has nonzero
    divergence the same-particle velocity triples must match div B / w_s^2
    to within 10%.
    """
    if not 1 <= n_particles <= max_particles:
        raise ValueError(
            f"n_particles must lie in [1, {max_particles}], got {n_particles}"
        )

    ensemble = random_ensemble(n_particles, seed)
    R = jacobi_residuals(ensemble, get_field(field), delta, richardson)
    rows = residual_table(R, n_particles)
    summary = summarize(rows)
    div = field_divergence[field]

    if div == 0.0:
        worst = max(summary[zero_expected], summary[div_driven])
        max_div_error = None
        passed = worst <= zero_tolerance
    else:
        worst = summary[zero_expected]
        max_div_error = max(div_errors(rows, ensemble, div))
        passed = worst <= zero_tolerance and max_div_error <= div_tolerance

    return BracketCheck(
        field=field,
        n_particles=n_particles,
        rows=rows,
        max_zero_expected=worst,
        max_div_error=max_div_error,
        passed=passed,
    )

