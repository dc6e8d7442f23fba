import math

import pytest
from hampic.configuration import (
    ConfigError,
    apply_override,
    echo_file,
    echo_text,
    list_presets,
    parse_config,
    parse_config_text,
    parse_value,
    write_echo,
)

minimal_landau = """
[scenario]
name = "landau"
"""


def test_minimal_landau_gets_the_defaults():
    config = parse_config_text(minimal_landau)

    assert config.seed == 0
    assert config.scenario.alpha == 0.001
    assert config.scenario.n_particles == 200_000
    assert config.scenario.domain_x == ((0.0, 4.0 * math.pi),)
    assert (config.time.scheme, config.time.dt, config.time.t_final) == (
        "strang",
        0.01,
        30.0,
    )
    assert config.space.n_cells == (128,)
    assert config.space.bc == "periodic"
    assert config.kernel.shape == "delta"
    assert config.solver.tol == 1e-10
    assert config.solver.max_iter == 1280
    assert config.output.interval == 0.01
    assert config.output.directory == "output"
    assert config.parallel.threads == 1


def test_diocotron_defaults_to_a_square_dirichlet_mesh():
    config = parse_config_text(
        minimal_landau.replace("landau", "diocotron")
        + "[space]\nn_cells = 64\n[time]\ndt = 0.2\n"
    )

    assert config.space.n_cells == (64, 64)
    assert config.space.bc == "dirichlet"
    assert config.output.write_density
    assert config.build_space().dim == 2


@pytest.mark.parametrize(
    "extra, key",
    [
        ("[time]\ndt = 0.0\n", "time.dt"),
        ("[time]\nt_final = -1.0\n", "time.t_final"),
        ("[time]\nscheme = \"yoshida\"\n", "time.scheme"),
        ("[scenario.extra]\n", "scenario.extra"),
        ("[output]\ninterval = 0.001\n", "output.interval"),
        ("[output]\ninterval = 0.015\n", "output.interval"),
        ("[colour]\nred = 1\n", "colour"),
        ("[kernel]\nshape = \"bspline\"\nwidth = -1.0\n", "kernel"),
        ("[parallel]\nthreads = 0\n", "parallel"),
        ("[solver]\npreconditioner = \"ilu\"\n", "solver"),
    ],
)
def test_invalid_values_name_their_key(extra, key):
    with pytest.raises(ConfigError) as error:
        parse_config_text(minimal_landau + extra)

    assert error.value.key == key
    assert str(error.value).startswith(key)


def test_unknown_top_level_key():
    with pytest.raises(ConfigError) as error:
        parse_config_text("verbose = true\n" + minimal_landau)

    assert error.value.key == "verbose"
    assert str(error.value).startswith("verbose")


def test_wrong_types_are_reported():
    with pytest.raises(ConfigError) as error:
        parse_config_text(minimal_landau + 'alpha = "large"\n')

    assert error.value.key == "scenario.alpha"


def test_scenario_errors_are_config_errors():
    with pytest.raises(ConfigError) as error:
        parse_config_text(minimal_landau + "alpha = 1.5\n")

    assert error.value.key == "scenario"


def test_missing_scenario_name():
    with pytest.raises(ConfigError) as error:
        parse_config_text("[scenario]\nalpha = 0.1\n")

    assert error.value.key == "scenario.name"


def test_broken_toml():
    with pytest.raises(ConfigError):
        parse_config_text("[scenario\nname = 1")


def test_missing_file(tmp_path):
    with pytest.raises(ConfigError):
        parse_config(tmp_path / "absent.toml")


def test_parse_value():
    assert parse_value("0.5") == 0.5
    assert parse_value("[64, 32]") == [64, 32]
    assert parse_value("true") is True
    assert parse_value("landau") == "landau"


def test_overrides_merge_into_sections():
    data = apply_override({"scenario": {"name": "landau"}}, "scenario.alpha=0.05")

    assert data == {"scenario": {"name": "landau", "alpha": 0.05}}

    with pytest.raises(ConfigError):
        apply_override(data, "scenario.alpha")


def test_flags_win_over_the_file(tmp_path):
    path = tmp_path / "run.toml"
    path.write_text(minimal_landau + "n_particles = 100\n[time]\nt_final = 1.0\n")

    config = parse_config(
        path,
        overrides=["time.dt=0.05", "output.interval=0.1", "seed=3"],
        threads=4,
        out=str(tmp_path / "out"),
        seed=9,
    )

    assert config.time.dt == 0.05
    assert config.time.t_final == 1.0
    assert config.parallel.threads == 4
    assert config.output.directory == str(tmp_path / "out")
    assert config.seed == 9
    assert config.scenario.seed == 9


@pytest.mark.parametrize("name", list_presets())
def test_presets_resolve(name):
    config = parse_config_text(f'preset = "{name}"\n')

    assert config.scenario.name in name


@pytest.mark.parametrize(
    "name, l, eps",
    [
        ("diocotron_eps1", 7, 1.0),
        ("diocotron_eps01", 5, 0.1),
        ("diocotron_eps01_reversed", 5, 0.1),
        ("diocotron_eps001", 7, 0.01),
    ],
)
def test_diocotron_presets(name, l, eps):
    scenario = parse_config_text(f'preset = "{name}"\n').scenario

    assert scenario.l == l
    assert scenario.eps == eps


@pytest.mark.parametrize("name", ["landau_k03", "landau_k05"])
def test_landau_presets_use_a_quiet_start(name):
    config = parse_config_text(f'preset = "{name}"\n')

    assert config.scenario.stratified
    assert config.kernel.shape == "bspline"
    assert config.kernel.width == pytest.approx(min(config.build_space().h))


def test_file_values_override_the_preset():
    config = parse_config_text('preset = "landau_k03"\n[time]\nt_final = 2.0\n')

    assert config.scenario.k == 0.3
    assert config.time.t_final == 2.0


def test_echo_resolves_to_the_same_config(tmp_path):
    for text in (minimal_landau, 'preset = "diocotron_eps01"\n'):
        config = parse_config_text(text)

        path = write_echo(config, tmp_path)

        assert path.name == echo_file
        assert path.read_text() == echo_text(config)
        assert parse_config(path) == config
