from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

import tomlkit
from hampic.configuration.errors import ConfigError
from hampic.configuration.schema import coerce
from hampic.fem import FemSpace, SolverConfig, build_space
from hampic.integrators import SplittingScheme, steps_per_output
from hampic.output import write_text_atomic
from hampic.parallel import ParallelConfig
from hampic.particles import SmoothingKernel
from hampic.scenarios import ScenarioSpec, scenario_spec
from tomlkit.exceptions import ParseError
from tomlkit.items import Table

presets_dir = Path(__file__).parent / "presets"
echo_file = "config.resolved.toml"


@dataclass(frozen=True)
class TimeConfig:
    scheme: str
    dt: float
    t_final: float


@dataclass(frozen=True)
class SpaceConfig:
    n_cells: Tuple[int, ...]
    order: int
    bc: str


@dataclass(frozen=True)
class OutputConfig:
    directory: str
    interval: float
    snapshot_interval: float
    density_grid: Tuple[int, ...]
    write_density: bool


@dataclass(frozen=True)
class RunConfig:
    seed: int
    scenario: ScenarioSpec
    time: TimeConfig
    space: SpaceConfig
    kernel: SmoothingKernel
    solver: SolverConfig
    output: OutputConfig
    parallel: ParallelConfig

    @property
    def scheme(self) -> SplittingScheme:
        return SplittingScheme(kind=self.time.scheme, dt=self.time.dt)

    def build_space(self) -> FemSpace:
        return build_space(
            self.scenario.dim,
            self.scenario.domain_x,
            self.space.n_cells,
            self.space.order,
            self.space.bc,
        )


def scenario_defaults(name: str, eps: float) -> Dict[str, Dict[str, Any]]:
    if name == "diocotron":
        dt = 0.1 if eps >= 0.1 else 0.01

        return {
            "time": {"dt": dt, "t_final": 30.0},
            "space": {"n_cells": (256, 256), "bc": "dirichlet"},
            "output": {
                "interval": 1.0,
                "density_grid": (256, 256),
                "write_density": True,
            },
        }

    t_final = {"landau": 30.0, "two_stream": 20.0, "bump_on_tail": 20.0}[name]
    cells = 256 if name == "bump_on_tail" else 128

    return {
        "time": {"dt": 0.01, "t_final": t_final},
        "space": {"n_cells": (cells,), "bc": "periodic"},
        "output": {"interval": 0.01, "density_grid": (256,), "write_density": False},
    }


def _merge(base: Dict[str, Any], extra: Dict[str, Any]) -> Dict[str, Any]:
    merged = dict(base)

    for key, value in extra.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _merge(merged[key], value)
        else:
            merged[key] = value

    return merged


def list_presets() -> List[str]:
    return sorted(path.stem for path in presets_dir.glob("*.toml"))


def load_preset(name: str) -> Dict[str, Any]:
    path = presets_dir / f"{name}.toml"

    if not path.exists():
        raise ConfigError(
            "preset", f"unknown preset {name!r}, expected one of {list_presets()}"
        )

    return load_toml_text(path.read_text(), str(path))


def load_toml_text(text: str, origin: str = "<string>") -> Dict[str, Any]:
    try:
        return tomlkit.loads(text).unwrap()
    except ParseError as e:
        raise ConfigError("", f"Failed parsing {origin}: {e}") from e


def parse_value(raw: str) -> Any:
    """A TOML literal when it parses as one, the raw text otherwise."""
    try:
        return tomlkit.loads(f"value = {raw}").unwrap()["value"]
    except ParseError:
        return raw


def apply_override(data: Dict[str, Any], assignment: str) -> Dict[str, Any]:
    key, sep, raw = assignment.partition("=")

    if not sep:
        raise ConfigError(assignment, "expected section.key=value")

    section, dot, name = key.strip().partition(".")
    value = parse_value(raw.strip())
    update = {section: {name: value}} if dot else {section: value}

    return _merge(data, update)


def _build(key: str, factory, **kwargs):
    try:
        return factory(**kwargs)
    except ConfigError:
        raise
    except (TypeError, ValueError) as e:
        raise ConfigError(key, str(e)) from e


def resolve(data: Dict[str, Any]) -> RunConfig:
    """Fill every default and validate; raises ConfigError naming the key at fault."""
    preset = data.get("preset")
    merged = _merge(load_preset(preset), data) if preset else dict(data)
    merged.pop("preset", None)
    values = coerce(merged)

    top = values[""]
    seed = top.get("seed", 0)
    scenario_values = dict(values["scenario"])

    if "name" not in scenario_values:
        raise ConfigError("scenario.name", "missing scenario name")

    name = scenario_values.pop("name")
    scenario = _build(
        "scenario", scenario_spec, name=name, seed=seed, **scenario_values
    )
    defaults = scenario_defaults(scenario.name, scenario.eps)

    time_values = {"scheme": "strang", **defaults["time"], **values["time"]}

    if not time_values["dt"] > 0:
        raise ConfigError("time.dt", f"must be positive, got {time_values['dt']}")

    if time_values["t_final"] < 0:
        raise ConfigError(
            "time.t_final", f"must be non-negative, got {time_values['t_final']}"
        )

    _build(
        "time.scheme", SplittingScheme, kind=time_values["scheme"], dt=time_values["dt"]
    )
    time = TimeConfig(**time_values)

    space_values = {"order": 1, **defaults["space"], **values["space"]}

    if len(space_values["n_cells"]) == 1 and scenario.dim == 2:
        space_values["n_cells"] = space_values["n_cells"] * 2

    space = SpaceConfig(**space_values)
    fem_space = _build(
        "space",
        build_space,
        dim=scenario.dim,
        domain=scenario.domain_x,
        n_cells=space.n_cells,
        order=space.order,
        bc=space.bc,
    )

    kernel_values = {
        "shape": "delta",
        "order": space.order,
        "width": min(fem_space.h),
        **values["kernel"],
    }

    if kernel_values["shape"] == "delta":
        kernel_values["width"] = 0.0

    kernel = _build("kernel", SmoothingKernel, **kernel_values)

    solver_values = {
        "tol": 1e-10,
        "max_iter": 10 * fem_space.n_dofs,
        "preconditioner": "none",
        **values["solver"],
    }
    solver = _build("solver", SolverConfig, **solver_values)

    output_values = {
        "directory": "output",
        "snapshot_interval": 0.0,
        **defaults["output"],
        **values["output"],
    }

    if output_values["interval"] < time.dt:
        raise ConfigError("output.interval", f"must be at least dt = {time.dt}")

    _build(
        "output.interval",
        steps_per_output,
        interval=output_values["interval"],
        dt=time.dt,
    )

    if output_values["snapshot_interval"] > 0:
        _build(
            "output.snapshot_interval",
            steps_per_output,
            interval=output_values["snapshot_interval"],
            dt=time.dt,
        )

    output = OutputConfig(**output_values)
    parallel = _build("parallel", ParallelConfig, **values["parallel"])

    return RunConfig(
        seed=seed,
        scenario=scenario,
        time=time,
        space=space,
        kernel=kernel,
        solver=solver,
        output=output,
        parallel=parallel,
    )


def parse_config(
    path: Optional[Union[str, Path]] = None,
    overrides: Sequence[str] = (),
    threads: Optional[int] = None,
    out: Optional[str] = None,
    seed: Optional[int] = None,
) -> RunConfig:
    """Preset, then file, then ``--set`` overrides, then the dedicated flags."""
    data: Dict[str, Any] = {}

    if path is not None:
        fullpath = Path(path)

        try:
            text = fullpath.read_text()
        except OSError as e:
            raise ConfigError("", f"Failed reading {fullpath}: {e}") from e

        data = load_toml_text(text, str(fullpath))

    for assignment in overrides:
        data = apply_override(data, assignment)

    if threads is not None:
        data = _merge(data, {"parallel": {"threads": threads}})

    if out is not None:
        data = _merge(data, {"output": {"directory": out}})

    if seed is not None:
        data["seed"] = seed

    return resolve(data)


def parse_config_text(text: str) -> RunConfig:
    return resolve(load_toml_text(text))


def _plain(value: Any) -> Any:
    if isinstance(value, tuple):
        return [_plain(item) for item in value]

    return value


def _table(values: Dict[str, Any]) -> Table:
    table = tomlkit.table()

    for key, value in values.items():
        if value is not None:
            table[key] = _plain(value)

    return table


def to_document(config: RunConfig) -> tomlkit.TOMLDocument:
    scenario = config.scenario
    doc = tomlkit.document()
    doc["seed"] = config.seed
    doc["scenario"] = _table(
        {
            "name": scenario.name,
            "n_particles": scenario.n_particles,
            "alpha": scenario.alpha,
            "k": scenario.k,
            "l": scenario.l,
            "r_minus": scenario.r_minus,
            "r_plus": scenario.r_plus,
            "eps": scenario.eps,
            "b_ext": scenario.b_ext,
            "domain_x": scenario.domain_x,
            "domain_v": scenario.domain_v,
            "stratified": scenario.stratified,
        }
    )
    doc["time"] = _table(vars(config.time))
    doc["space"] = _table(vars(config.space))
    doc["kernel"] = _table(
        {
            "shape": config.kernel.shape,
            "order": config.kernel.order,
            "width": config.kernel.width,
        }
    )
    doc["solver"] = _table(vars(config.solver))
    doc["output"] = _table(vars(config.output))
    doc["parallel"] = _table(vars(config.parallel))

    return doc


def echo_text(config: RunConfig) -> str:
    return tomlkit.dumps(to_document(config))


def write_echo(
    config: RunConfig, directory: Optional[Union[str, Path]] = None
) -> Path:
    target = Path(directory or config.output.directory) / echo_file

    return write_text_atomic(target, echo_text(config))

