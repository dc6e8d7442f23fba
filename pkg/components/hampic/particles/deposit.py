import logging
from dataclasses import dataclass
from typing import List, Optional

import numpy as np
from hampic.fem import FemSpace, basis_integrals, gather, inside_points, scatter
from hampic.parallel import (
    ParallelConfig,
    chunk_bounds,
    map_chunks,
    pairwise_sum,
    sum_in_order,
)
from hampic.particles.ensemble import ParticleEnsemble
from hampic.particles.errors import ParticleOutOfDomain
from hampic.particles.kernel import SmoothingKernel, kernel_stencils

logger = logging.getLogger(__name__)

deterministic_regions = 16


@dataclass(frozen=True, eq=False)
class LoadVector:
    """Right-hand side F_i = sum_s w_s (S * W_i)(X_s) - rho0 * integral(W_i).

    ``scale`` is the l1 size of the particle and background parts.
    """

    F: np.ndarray
    scale: float


def check_support(space: FemSpace, kernel: SmoothingKernel) -> None:
    if kernel.support > min(space.lengths):
        raise ValueError(
            f"Kernel support {kernel.support} exceeds "
            f"the domain size {min(space.lengths)}"
        )


def particle_load(
    space: FemSpace, kernel: SmoothingKernel, points: np.ndarray, weights: np.ndarray
) -> np.ndarray:
    return scatter(space, kernel_stencils(space, kernel, points), weights)


def _region_chunks(space: FemSpace, points: np.ndarray, config: ParallelConfig):
    n_regions = deterministic_regions if config.deterministic else config.threads
    n_regions = max(1, min(n_regions, space.n_cells[0]))
    cells = np.floor((points[:, 0] - space.lower[0]) / space.h[0]).astype(np.int64)
    cells = np.clip(cells, 0, space.n_cells[0] - 1)
    regions = cells * n_regions // space.n_cells[0]

    order = np.argsort(regions, kind="stable")
    counts = np.bincount(regions, minlength=n_regions)
    edges = np.concatenate([[0], np.cumsum(counts)])
    chunks = [slice(a, b) for a, b in zip(edges[:-1], edges[1:]) if b > a]

    return order, chunks


def _chunked(n_particles: int, config: ParallelConfig):
    return np.arange(n_particles), chunk_bounds(n_particles, config)


def deposit(
    ensemble: ParticleEnsemble,
    kernel: SmoothingKernel,
    space: FemSpace,
    rho0: float,
    parallel: Optional[ParallelConfig] = None,
) -> LoadVector:
    config = parallel or ParallelConfig()

    if rho0 < 0:
        raise ValueError(f"Background density must be non-negative, got {rho0}")

    check_support(space, kernel)
    points = inside_points(space, ensemble.X, ParticleOutOfDomain)
    weights = ensemble.weights

    if config.strategy == "regions":
        order, chunks = _region_chunks(space, points, config)
    else:
        order, chunks = _chunked(ensemble.n_particles, config)

    sorted_points = points[order]
    sorted_weights = weights[order]

    def load(chunk: slice) -> np.ndarray:
        return particle_load(space, kernel, sorted_points[chunk], sorted_weights[chunk])

    parts: List[np.ndarray] = map_chunks(load, chunks, config.threads)
    particle_part = sum_in_order(parts, space.n_dofs)
    background = rho0 * basis_integrals(space)

    scale = pairwise_sum(weights) + rho0 * space.volume
    logger.debug(
        "Deposited %d particles in %d chunk(s)", ensemble.n_particles, len(chunks)
    )

    return LoadVector(F=particle_part - background, scale=float(scale))


def field_at_particles(
    space: FemSpace,
    kernel: SmoothingKernel,
    phi: np.ndarray,
    X: np.ndarray,
    parallel: Optional[ParallelConfig] = None,
) -> np.ndarray:
    """E at the markers: -sum_j phi_j grad (S * W_j)(X), shape (n, dim).

    This is the adjoint of ``deposit``, so the force is the exact gradient
    of the discrete field energy.
    """
    config = parallel or ParallelConfig()
    points = inside_points(space, X, ParticleOutOfDomain)

    def evaluate(chunk: slice) -> np.ndarray:
        stencils = kernel_stencils(space, kernel, points[chunk])

        return -np.stack(
            [gather(space, stencils, phi, derivative_axis=a) for a in range(space.dim)],
            axis=1,
        )

    chunks = chunk_bounds(points.shape[0], config)
    parts = map_chunks(evaluate, chunks, config.threads)

    return np.concatenate(parts) if parts else np.zeros((0, space.dim))
