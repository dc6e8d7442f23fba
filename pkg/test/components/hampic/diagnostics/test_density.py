import numpy as np
import pytest
from hampic.diagnostics import (
    GridSpec,
    default_grid,
    density_grid,
    grid_filename,
    phase_space_grid,
    read_grid,
    write_grid,
)
from hampic.particles import create_ensemble, total_charge


@pytest.mark.parametrize("mode", ["histogram", "cic"])
def test_density_keeps_the_charge(square_ensemble, mode):
    grid = GridSpec(lower=(-1.0, -1.0), upper=(1.0, 1.0), shape=(20, 16))

    values = density_grid(square_ensemble, grid, mode)

    assert values.shape == (20, 16)
    assert np.all(values >= 0)
    assert np.sum(values) * grid.cell_volume == pytest.approx(
        total_charge(square_ensemble)
    )


def test_unknown_mode(square_ensemble):
    grid = GridSpec(lower=(-1.0, -1.0), upper=(1.0, 1.0), shape=(4, 4))

    with pytest.raises(ValueError):
        density_grid(square_ensemble, grid, "ngp")


def test_default_grid_covers_the_space(dirichlet_square):
    grid = default_grid(dirichlet_square, cells=8)

    assert grid.shape == (8, 8)
    assert grid.spacing == (0.25, 0.25)
    assert list(grid.centers(0)) == pytest.approx(np.linspace(-0.875, 0.875, 8))


def test_phase_space_grid(periodic_line, line_ensemble):
    values, grid = phase_space_grid(
        line_ensemble, (0.0, periodic_line.upper[0]), (-6.0, 6.0), (16, 24)
    )

    assert values.shape == (16, 24)
    assert grid.lower == (0.0, -6.0)
    assert np.sum(values) * grid.cell_volume == pytest.approx(
        total_charge(line_ensemble), rel=1e-6
    )


def test_grid_file(tmp_path, square_ensemble):
    grid = GridSpec(lower=(-1.0, -1.0), upper=(1.0, 1.0), shape=(6, 5))
    values = density_grid(square_ensemble, grid)
    path = tmp_path / grid_filename(12)

    write_grid(path, values, grid, 0.25)
    loaded, loaded_grid, t = read_grid(path)

    assert path.name == "density_000012.txt"
    assert path.read_text().startswith("# hampic-grid 1\n# nx=6 ny=5 ")
    assert np.array_equal(loaded, values)
    assert loaded_grid == grid
    assert t == 0.25


def test_foreign_files_are_rejected(tmp_path):
    path = tmp_path / "other.txt"
    path.write_text("1\n2\n")

    with pytest.raises(ValueError):
        read_grid(path)


def test_single_marker_fills_a_single_cell():
    ensemble = create_ensemble(np.array([[0.3, -0.2]]), np.zeros((1, 2)), [0.5])
    grid = GridSpec(lower=(-1.0, -1.0), upper=(1.0, 1.0), shape=(4, 4))

    values = density_grid(ensemble, grid)

    assert np.count_nonzero(values) == 1
    assert values[2, 1] == pytest.approx(0.5 / 0.25)


def test_uniform_markers_give_a_flat_density():
    n, cells = 100000, 50
    rng = np.random.default_rng(7)
    ensemble = create_ensemble(
        rng.random((n, 1)), np.zeros((n, 1)), np.full(n, 1.0 / n)
    )
    grid = GridSpec(lower=(0.0,), upper=(1.0,), shape=(cells,))

    values = density_grid(ensemble, grid)
    sigma = np.sqrt(n / cells) / (n / cells)

    assert np.max(np.abs(values - 1.0)) <= 4.0 * sigma
