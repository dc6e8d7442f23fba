from dataclasses import dataclass
from pathlib import Path
from typing import Tuple, Union

import numpy as np
from hampic.fem import FemSpace
from hampic.output import write_text_atomic
from hampic.particles import ParticleEnsemble

modes = ("histogram", "cic")

magic = "# hampic-grid 1"

default_cells = 256


@dataclass(frozen=True)
class GridSpec:
    lower: Tuple[float, ...]
    upper: Tuple[float, ...]
    shape: Tuple[int, ...]

    @property
    def spacing(self) -> Tuple[float, ...]:
        return tuple((b - a) / n for a, b, n in zip(self.lower, self.upper, self.shape))

    @property
    def cell_volume(self) -> float:
        return float(np.prod(self.spacing))

    def centers(self, axis: int) -> np.ndarray:
        offsets = np.arange(self.shape[axis]) + 0.5

        return self.lower[axis] + offsets * self.spacing[axis]


def default_grid(space: FemSpace, cells: int = default_cells) -> GridSpec:
    return GridSpec(lower=space.lower, upper=space.upper, shape=(cells,) * space.dim)


def grid_filename(step: int) -> str:
    return f"density_{step:06d}.txt"


def _histogram(points: np.ndarray, weights: np.ndarray, grid: GridSpec) -> np.ndarray:
    ranges = list(zip(grid.lower, grid.upper))
    counts, _ = np.histogramdd(points, bins=grid.shape, range=ranges, weights=weights)

    return counts


def _cloud_in_cell(
    points: np.ndarray, weights: np.ndarray, grid: GridSpec
) -> np.ndarray:
    flat = np.zeros(int(np.prod(grid.shape)))
    indices = []
    fractions = []

    for axis, n in enumerate(grid.shape):
        u = (points[:, axis] - grid.lower[axis]) / grid.spacing[axis] - 0.5
        first = np.floor(u).astype(np.int64)
        indices.append(np.stack([first, first + 1], axis=1))
        frac = u - first
        fractions.append(np.stack([1.0 - frac, frac], axis=1))

    for corner in np.ndindex(*(2,) * len(grid.shape)):
        share = np.asarray(weights, dtype=float).copy()
        position = np.zeros(points.shape[0], dtype=np.int64)

        for axis, offset in enumerate(corner):
            index = np.clip(indices[axis][:, offset], 0, grid.shape[axis] - 1)
            share = share * fractions[axis][:, offset]
            position = position * grid.shape[axis] + index

        flat += np.bincount(position, weights=share, minlength=flat.size)

    return flat.reshape(grid.shape)


def density_grid(
    ensemble: ParticleEnsemble, grid: GridSpec, mode: str = "histogram"
) -> np.ndarray:
    """Weighted marker density per cell, normalized by the cell area."""
    if mode not in modes:
        raise ValueError(f"Unknown density mode {mode!r}, expected one of {modes}")

    dim = len(grid.shape)
    points = ensemble.X[:, :dim]

    if mode == "histogram":
        values = _histogram(points, ensemble.weights, grid)
    else:
        values = _cloud_in_cell(points, ensemble.weights, grid)

    return values / grid.cell_volume


def phase_space_grid(
    ensemble: ParticleEnsemble,
    x_range: Tuple[float, float],
    v_range: Tuple[float, float],
    shape: Tuple[int, int] = (default_cells, default_cells),
) -> Tuple[np.ndarray, GridSpec]:
    """f(x, v_x) on a (n_x, n_v) histogram for 1D runs."""
    grid = GridSpec(
        lower=(x_range[0], v_range[0]), upper=(x_range[1], v_range[1]), shape=shape
    )
    points = np.column_stack([ensemble.X[:, 0], ensemble.V[:, 0]])

    return _histogram(points, ensemble.weights, grid) / grid.cell_volume, grid


def grid_text(values: np.ndarray, grid: GridSpec, t: float) -> str:
    nx = grid.shape[0]
    ny = grid.shape[1] if len(grid.shape) > 1 else 1
    bounds = ",".join(f"{a:.17g},{b:.17g}" for a, b in zip(grid.lower, grid.upper))
    header = f"{magic}\n# nx={nx} ny={ny} bounds={bounds} t={t:.17g}\n"

    return header + "".join(f"{v:.17g}\n" for v in np.ravel(values))


def write_grid(
    path: Union[str, Path], values: np.ndarray, grid: GridSpec, t: float
) -> Path:
    return write_text_atomic(path, grid_text(values, grid, t))


def read_grid(path: Union[str, Path]) -> Tuple[np.ndarray, GridSpec, float]:
    lines = Path(path).read_text().splitlines()

    if not lines or lines[0] != magic:
        raise ValueError(f"{path}: not a version 1 density grid")

    fields = dict(item.split("=", 1) for item in lines[1].lstrip("#").split())
    nx, ny = int(fields["nx"]), int(fields["ny"])
    bounds = [float(v) for v in fields["bounds"].split(",")]
    lower, upper = tuple(bounds[0::2]), tuple(bounds[1::2])
    shape = (nx, ny) if len(lower) == 2 else (nx,)
    values = np.array([float(v) for v in lines[2:]]).reshape(shape)

    return values, GridSpec(lower=lower, upper=upper, shape=shape), float(fields["t"])
