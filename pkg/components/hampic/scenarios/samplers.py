import logging
import math
from typing import Callable, Dict

import numpy as np
from hampic.integrators import MagneticFieldSpec, strong_field_spec
from hampic.particles import ParticleEnsemble, create_ensemble
from hampic.scenarios.rng import sample_blocks
from hampic.scenarios.sampling import (
    bump_mixture,
    inverse_cosine_cdf,
    jittered_square,
    maxwell_signed,
    quantile_function,
    radical_inverse,
    standard_normal,
    truncated,
    uniform_fractions,
)
from hampic.scenarios.spec import ScenarioSpec
from scipy import integrate

logger = logging.getLogger(__name__)

ring_radius = 6.5
ring_sharpness = 4.0

quad_options = {"epsabs": 1e-13, "epsrel": 1e-12, "limit": 200}


def landau_velocity_density(v: float) -> float:
    return math.exp(-0.5 * v * v) / math.sqrt(2 * math.pi)


def two_stream_velocity_density(v: float) -> float:
    return v * v * math.exp(-0.5 * v * v) / math.sqrt(2 * math.pi)


def bump_velocity_density(v: float) -> float:
    bulk = 0.9 * math.exp(-0.5 * v * v)
    bump = 0.2 * math.exp(-2.0 * (v - 4.5) ** 2)

    return (bulk + bump) / math.sqrt(2 * math.pi)


velocity_densities: Dict[str, Callable[[float], float]] = {
    "landau": landau_velocity_density,
    "two_stream": two_stream_velocity_density,
    "bump_on_tail": bump_velocity_density,
}

velocity_draws = {
    "landau": standard_normal,
    "two_stream": maxwell_signed,
    "bump_on_tail": bump_mixture,
}


def ring_profile(r):
    return np.exp(-ring_sharpness * (r - ring_radius) ** 2)


def ring_density(x: np.ndarray, spec: ScenarioSpec) -> np.ndarray:
    r = np.hypot(x[:, 0], x[:, 1])
    theta = np.arctan2(x[:, 1], x[:, 0])
    inside = (r >= spec.r_minus) & (r <= spec.r_plus)

    modulation = 1 + spec.alpha * np.cos(spec.l * theta)

    return np.where(inside, modulation * ring_profile(r), 0.0)


def total_mass(spec: ScenarioSpec) -> float:
    """Integral of f0 over the computational domain."""
    if spec.name == "diocotron":
        value, _ = integrate.dblquad(
            lambda r, theta: (1 + spec.alpha * math.cos(spec.l * theta))
            * math.exp(-ring_sharpness * (r - ring_radius) ** 2)
            * r,
            0.0,
            2 * math.pi,
            spec.r_minus,
            spec.r_plus,
            epsabs=1e-13,
            epsrel=1e-12,
        )

        return float(value)

    low, high = spec.domain_v
    mass_v, _ = integrate.quad(velocity_densities[spec.name], low, high, **quad_options)

    return spec.volume * float(mass_v)


def background_density(spec: ScenarioSpec, total_charge: float) -> float:
    """Neutralizing rho0 = C / |Omega| in 1D; the diocotron column is non-neutral."""
    if spec.name == "diocotron":
        return 0.0

    return total_charge / spec.volume


def magnetic_field(spec: ScenarioSpec) -> MagneticFieldSpec:
    if spec.name == "diocotron":
        return strong_field_spec(spec.b_ext, spec.eps)

    return MagneticFieldSpec()


def _weights(spec: ScenarioSpec) -> np.ndarray:
    return np.full(spec.n_particles, total_mass(spec) / spec.n_particles)


def _sample_line(spec: ScenarioSpec, threads: int) -> ParticleEnsemble:
    a, b = spec.domain_x[0]
    length = b - a
    low, high = spec.domain_v
    draw_v = velocity_draws[spec.name]

    if spec.stratified:
        quantiles = quantile_function(velocity_densities[spec.name], low, high)

    def draw(rng: np.random.Generator, chunk: slice):
        n = chunk.stop - chunk.start
        u = uniform_fractions(rng, chunk.start, n, spec.n_particles, spec.stratified)
        x = a + inverse_cosine_cdf(u, spec.alpha, spec.k, length)

        if spec.stratified:
            indices = np.arange(chunk.start, chunk.stop)
            v = quantiles(radical_inverse(indices, spec.n_particles))
        else:
            v = truncated(rng, n, draw_v, low, high)

        return x, v

    X, V = sample_blocks(spec.n_particles, spec.seed, draw, threads)

    return create_ensemble(X, V, _weights(spec))


def sample_landau(spec: ScenarioSpec, threads: int = 1) -> ParticleEnsemble:
    return _sample_line(spec, threads)


def sample_two_stream(spec: ScenarioSpec, threads: int = 1) -> ParticleEnsemble:
    return _sample_line(spec, threads)


def sample_bump_on_tail(spec: ScenarioSpec, threads: int = 1) -> ParticleEnsemble:
    return _sample_line(spec, threads)


def _ring_positions(rng: np.random.Generator, n: int, spec: ScenarioSpec) -> np.ndarray:
    peak_r = min(max(ring_radius, spec.r_minus), spec.r_plus)
    ceiling = (1 + spec.alpha) * float(ring_profile(peak_r))
    size = spec.r_plus
    kept = []
    count = 0

    while count < n:
        batch = 2 * (n - count) + 16
        if spec.stratified:
            unit = jittered_square(rng, batch)
        else:
            unit = rng.random((batch, 2))
        proposal = size * (2 * unit - 1)
        accept = rng.random(batch) * ceiling < ring_density(proposal, spec)
        kept.append(proposal[accept])
        count += int(accept.sum())

    return np.concatenate(kept)[:n]


def sample_diocotron(spec: ScenarioSpec, threads: int = 1) -> ParticleEnsemble:
    def draw(rng: np.random.Generator, chunk: slice):
        n = chunk.stop - chunk.start
        x = _ring_positions(rng, n, spec)
        v = rng.standard_normal((n, 2))

        return x, v

    X, V = sample_blocks(spec.n_particles, spec.seed, draw, threads)

    return create_ensemble(X, V, _weights(spec))


samplers = {
    "landau": sample_landau,
    "two_stream": sample_two_stream,
    "bump_on_tail": sample_bump_on_tail,
    "diocotron": sample_diocotron,
}


def sample(spec: ScenarioSpec, threads: int = 1) -> ParticleEnsemble:
    logger.debug(
        "Sampling %d markers for %s (seed %d)", spec.n_particles, spec.name, spec.seed
    )

    return samplers[spec.name](spec, threads)
