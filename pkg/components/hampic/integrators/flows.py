import logging
import math
from typing import Optional, Tuple

import numpy as np
from hampic.bracket import hat_matrix
from hampic.fem import FemSpace, FieldCoefficients, solve_poisson
from hampic.integrators.magnetic import MagneticFieldSpec
from hampic.integrators.model import FieldModel
from hampic.parallel import ParallelConfig, chunk_bounds, map_chunks
from hampic.particles import (
    ParticleEnsemble,
    deposit,
    field_at_particles,
    with_phase,
    wrap_positions,
)

logger = logging.getLogger(__name__)

taylor_threshold = 1e-6
remainder_threshold = 1e-2


def rotation_coefficients(b: float, dt: float) -> Tuple[float, float, float]:
    """sin(b dt)/b, (1 - cos b dt)/b**2 and (b dt - sin b dt)/b**3."""
    theta = b * dt

    if abs(theta) < taylor_threshold:
        t2 = theta * theta
        sine = dt * (1.0 - t2 / 6.0 + t2 * t2 / 120.0)
        versine = dt * dt * (0.5 - t2 / 24.0 + t2 * t2 / 720.0)
        remainder = dt**3 * (1.0 / 6.0 - t2 / 120.0 + t2 * t2 / 5040.0)

        return sine, versine, remainder

    half = math.sin(0.5 * theta)
    sine = math.sin(theta)

    if abs(theta) < remainder_threshold:
        t2 = theta * theta
        remainder = dt**3 * (1.0 / 6.0 - t2 / 120.0 + t2 * t2 / 5040.0)
    else:
        remainder = (theta - sine) / b**3

    return sine / b, 2.0 * half * half / b**2, remainder


def velocity_maps(
    bspec: MagneticFieldSpec, dt: float
) -> Tuple[np.ndarray, np.ndarray]:
    """Rotation R with V' = R V and drift D with X' = X + D V over one substep."""
    scaled = bspec.scale_B * hat_matrix(bspec.B)
    squared = scaled @ scaled
    sine, versine, remainder = rotation_coefficients(bspec.magnitude, dt)
    identity = np.eye(3)

    rotation = identity + sine * scaled + versine * squared
    drift = bspec.scale_x * (dt * identity + versine * scaled + remainder * squared)

    return rotation, drift


def flow_Hv(
    ensemble: ParticleEnsemble,
    bspec: MagneticFieldSpec,
    dt: float,
    space: Optional[FemSpace] = None,
    parallel: Optional[ParallelConfig] = None,
) -> ParticleEnsemble:
    """Exact H_v substep: free drift combined with the rotation about B."""
    config = parallel or ParallelConfig()
    dim = ensemble.dim
    chunks = chunk_bounds(ensemble.n_particles, config)

    if bspec.magnitude == 0.0:

        def drift_only(chunk: slice) -> np.ndarray:
            return ensemble.X[chunk] + bspec.scale_x * dt * ensemble.V[chunk, :dim]

        X = np.concatenate(map_chunks(drift_only, chunks, config.threads))
        V = ensemble.V
    else:
        rotation, drift = velocity_maps(bspec, dt)

        def rotate(chunk: slice) -> Tuple[np.ndarray, np.ndarray]:
            v = ensemble.V[chunk]

            return ensemble.X[chunk] + (v @ drift.T)[:, :dim], v @ rotation.T

        parts = map_chunks(rotate, chunks, config.threads)
        X = np.concatenate([x for x, _ in parts])
        V = np.concatenate([v for _, v in parts])

    if space is not None:
        X = wrap_positions(space, X)

    return with_phase(ensemble, X=X, V=V)


def solve_field(ensemble: ParticleEnsemble, model: FieldModel) -> FieldCoefficients:
    load = deposit(ensemble, model.kernel, model.space, model.rho0, model.parallel)

    return solve_poisson(model.stiffness, load.F, model.solver, scale=load.scale)


def kick(
    ensemble: ParticleEnsemble,
    model: FieldModel,
    phi: np.ndarray,
    dt: float,
    scale_E: float = 1.0,
) -> ParticleEnsemble:
    E = field_at_particles(model.space, model.kernel, phi, ensemble.X, model.parallel)
    V = ensemble.V.copy()
    V[:, : model.space.dim] += scale_E * dt * E

    return with_phase(ensemble, V=V)


def flow_He(
    ensemble: ParticleEnsemble,
    model: FieldModel,
    dt: float,
    scale_E: float = 1.0,
    field: Optional[FieldCoefficients] = None,
) -> Tuple[ParticleEnsemble, FieldCoefficients]:
    """Exact H_e substep: positions frozen, V -= scale_E dt sum_j phi_j grad W_j(X).

    A precomputed ``field`` skips the deposit and solve.
    """
    if field is None:
        field = solve_field(ensemble, model)

    return kick(ensemble, model, field.phi, dt, scale_E), field
