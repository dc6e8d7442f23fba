from typing import Any, Callable, Dict, Tuple

from hampic.configuration.errors import ConfigError

Coercer = Callable[[str, Any], Any]


def as_int(key: str, value: Any) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigError(key, f"expected an integer, got {value!r}")

    return int(value)


def as_float(key: str, value: Any) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(key, f"expected a number, got {value!r}")

    return float(value)


def as_bool(key: str, value: Any) -> bool:
    if not isinstance(value, bool):
        raise ConfigError(key, f"expected true or false, got {value!r}")

    return value


def as_str(key: str, value: Any) -> str:
    if not isinstance(value, str):
        raise ConfigError(key, f"expected a string, got {value!r}")

    return value


def as_interval(key: str, value: Any) -> Tuple[float, float]:
    if not isinstance(value, (list, tuple)) or len(value) != 2:
        raise ConfigError(key, f"expected [low, high], got {value!r}")

    return (as_float(key, value[0]), as_float(key, value[1]))


def as_intervals(key: str, value: Any) -> Tuple[Tuple[float, float], ...]:
    if not isinstance(value, (list, tuple)) or not value:
        raise ConfigError(
            key, f"expected a list of [low, high] pairs, got {value!r}"
        )

    return tuple(as_interval(key, pair) for pair in value)


def as_vector(key: str, value: Any) -> Tuple[float, float, float]:
    if not isinstance(value, (list, tuple)) or len(value) != 3:
        raise ConfigError(key, f"expected three components, got {value!r}")

    x, y, z = (as_float(key, item) for item in value)

    return (x, y, z)


def as_counts(key: str, value: Any) -> Tuple[int, ...]:
    items = value if isinstance(value, (list, tuple)) else [value]

    return tuple(as_int(key, item) for item in items)


schema: Dict[str, Dict[str, Coercer]] = {
    "": {"seed": as_int, "preset": as_str},
    "scenario": {
        "name": as_str,
        "n_particles": as_int,
        "alpha": as_float,
        "k": as_float,
        "l": as_int,
        "r_minus": as_float,
        "r_plus": as_float,
        "eps": as_float,
        "b_ext": as_vector,
        "domain_x": as_intervals,
        "domain_v": as_interval,
        "stratified": as_bool,
    },
    "time": {"scheme": as_str, "dt": as_float, "t_final": as_float},
    "space": {"n_cells": as_counts, "order": as_int, "bc": as_str},
    "kernel": {"shape": as_str, "order": as_int, "width": as_float},
    "solver": {"tol": as_float, "max_iter": as_int, "preconditioner": as_str},
    "output": {
        "directory": as_str,
        "interval": as_float,
        "snapshot_interval": as_float,
        "density_grid": as_counts,
        "write_density": as_bool,
    },
    "parallel": {
        "threads": as_int,
        "deterministic": as_bool,
        "strategy": as_str,
        "chunk_size": as_int,
    },
}


def coerce(data: Dict[str, Any]) -> Dict[str, Dict[str, Any]]:
    """Check every key against the schema and convert values to plain types."""
    result: Dict[str, Dict[str, Any]] = {section: {} for section in schema}

    for name, value in data.items():
        if isinstance(value, dict):
            if name not in schema or not name:
                raise ConfigError(name, "unknown section")

            for key, item in value.items():
                if key not in schema[name]:
                    raise ConfigError(f"{name}.{key}", "unknown key")

                result[name][key] = schema[name][key](f"{name}.{key}", item)
        elif name in schema[""]:
            result[""][name] = schema[""][name](name, value)
        else:
            raise ConfigError(name, "unknown key")

    return result
