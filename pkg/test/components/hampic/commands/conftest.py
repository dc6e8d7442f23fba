import pytest
from hampic.configuration import parse_config

tiny_landau = """
seed = 5

[scenario]
name = "landau"
alpha = 0.01
n_particles = 2000

[time]
dt = 0.01
t_final = 0.02

[space]
n_cells = 16

[output]
interval = 0.01
snapshot_interval = 0.02
density_grid = 16
write_density = true
"""


@pytest.fixture
def tiny_config_file(tmp_path):
    path = tmp_path / "tiny.toml"
    path.write_text(tiny_landau)

    return path


@pytest.fixture
def tiny_config(tiny_config_file, tmp_path):
    """Two Strang steps of a small Landau run writing below tmp_path/out."""
    return parse_config(tiny_config_file, out=str(tmp_path / "out"))
