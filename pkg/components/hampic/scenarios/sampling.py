import math
from typing import Callable

import numpy as np
from scipy import integrate

newton_iterations = 50


def inverse_cosine_cdf(
    u: np.ndarray, alpha: float, k: float, length: float
) -> np.ndarray:
    """Newton solve of x + (alpha / k) sin(k x) = u * length on [0, length]."""
    target = u * length
    x = target.copy()

    if alpha == 0.0:
        return x

    for _ in range(newton_iterations):
        residual = x + (alpha / k) * np.sin(k * x) - target
        x = x - residual / (1.0 + alpha * np.cos(k * x))

        if np.max(np.abs(residual), initial=0.0) <= 1e-14 * length:
            break

    return np.clip(x, 0.0, np.nextafter(length, 0.0))


def uniform_fractions(
    rng: np.random.Generator, start: int, n: int, total: int, stratified: bool
) -> np.ndarray:
    """Uniform draws in [0, 1); stratified marker i lands in [i, i + 1) / total."""
    jitter = rng.random(n)

    if not stratified:
        return jitter

    return (start + np.arange(n) + jitter) / total


def truncated(
    rng: np.random.Generator,
    n: int,
    draw: Callable[[np.random.Generator, int], np.ndarray],
    low: float,
    high: float,
) -> np.ndarray:
    """Rejection to [low, high); redraws in batches until n values are kept."""
    kept = []
    count = 0

    while count < n:
        values = draw(rng, n - count)
        values = values[(values >= low) & (values < high)]
        kept.append(values)
        count += values.size

    return np.concatenate(kept)[:n]


def standard_normal(rng: np.random.Generator, n: int) -> np.ndarray:
    return rng.standard_normal(n)


def maxwell_signed(rng: np.random.Generator, n: int) -> np.ndarray:
    """Density proportional to v**2 exp(-v**2 / 2); |v| is chi with 3 dof."""
    speed = np.sqrt(rng.chisquare(3, n))
    sign = np.where(rng.random(n) < 0.5, -1.0, 1.0)

    return sign * speed


bump_fraction = 0.1
bump_center = 4.5
bump_width = 0.5


def bump_mixture(rng: np.random.Generator, n: int) -> np.ndarray:
    in_bump = rng.random(n) < bump_fraction
    bulk = rng.standard_normal(n)

    return np.where(in_bump, bump_center + bump_width * bulk, bulk)


def jittered_square(rng: np.random.Generator, n: int) -> np.ndarray:
    """n points of a jittered lattice on the unit square, in random lattice order."""
    side = int(math.ceil(math.sqrt(n)))
    cells = rng.permutation(side * side)[:n]
    jitter = rng.random((n, 2))

    return (np.stack([cells // side, cells % side], axis=1) + jitter) / side


def radical_inverse(indices: np.ndarray, total: int) -> np.ndarray:
    """Base 2 van der Corput points, centred in their dyadic cells of [0, 1)."""
    bits = max(1, int(total - 1).bit_length())
    indices = np.asarray(indices, dtype=np.uint64)
    reversed_bits = np.zeros(indices.shape, dtype=np.uint64)

    for bit in range(bits):
        digit = (indices >> np.uint64(bit)) & np.uint64(1)
        reversed_bits |= digit << np.uint64(bits - 1 - bit)

    return (reversed_bits.astype(float) + 0.5) / 2.0**bits


quantile_table_size = 20001


def quantile_function(
    density: Callable[[float], float], low: float, high: float
) -> Callable[[np.ndarray], np.ndarray]:
    """Inverse CDF of ``density`` restricted to [low, high], by a tabulated CDF."""
    grid = np.linspace(low, high, quantile_table_size)
    values = np.array([density(v) for v in grid])
    cdf = integrate.cumulative_trapezoid(values, grid, initial=0.0)
    cdf /= cdf[-1]

    def quantiles(u: np.ndarray) -> np.ndarray:
        return np.interp(u, cdf, grid)

    return quantiles
