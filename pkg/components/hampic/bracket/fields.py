from typing import Callable, Dict

import numpy as np

MagneticField = Callable[[np.ndarray], np.ndarray]


def constant_field(B=(0.0, 0.0, 1.0)) -> MagneticField:
    value = np.asarray(B, dtype=float).reshape(3)

    return lambda x: value.copy()


def rotational_field(x: np.ndarray) -> np.ndarray:
    """(y, -x, 0): divergence free."""
    return np.array([x[1], -x[0], 0.0])


def linear_field(x: np.ndarray) -> np.ndarray:
    """(x, 0, 0): unit divergence."""
    return np.array([x[0], 0.0, 0.0])


named_fields: Dict[str, MagneticField] = {
    "constant": constant_field(),
    "divfree": rotational_field,
    "divful": linear_field,
}

field_divergence: Dict[str, float] = {"constant": 0.0, "divfree": 0.0, "divful": 1.0}


def get_field(name: str) -> MagneticField:
    if name not in named_fields:
        raise ValueError(
            f"Unknown field {name!r}, expected one of {sorted(named_fields)}"
        )

    return named_fields[name]
