from dataclasses import dataclass
from typing import Tuple

import numpy as np


@dataclass(frozen=True)
class MagneticFieldSpec:
    """Constant field B with the drift, kick and rotation factors."""

    B: Tuple[float, float, float] = (0.0, 0.0, 0.0)
    scale_x: float = 1.0
    scale_E: float = 1.0
    scale_B: float = 1.0

    def __post_init__(self) -> None:
        if len(self.B) != 3:
            raise ValueError(f"B must have three components, got {self.B}")

        for name in ("scale_x", "scale_E", "scale_B"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be positive, got {getattr(self, name)}")

    @property
    def magnitude(self) -> float:
        return self.scale_B * float(np.linalg.norm(self.B))


def strong_field_spec(B, eps: float) -> MagneticFieldSpec:
    """Scaled characteristics dX/dt = V/eps, dV/dt = E/eps + V x B/eps**2."""
    if not eps > 0:
        raise ValueError(f"eps must be positive, got {eps}")

    field = tuple(float(c) for c in B)

    return MagneticFieldSpec(
        B=field, scale_x=1 / eps, scale_E=1 / eps, scale_B=1 / eps**2
    )
