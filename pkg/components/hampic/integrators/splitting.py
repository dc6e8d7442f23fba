from dataclasses import dataclass, replace

from hampic.integrators.flows import flow_He, flow_Hv
from hampic.integrators.magnetic import MagneticFieldSpec
from hampic.integrators.model import FieldModel, SimulationState

schemes = ("lie", "strang")


@dataclass(frozen=True)
class SplittingScheme:
    kind: str = "strang"
    dt: float = 0.01

    def __post_init__(self) -> None:
        if self.kind not in schemes:
            raise ValueError(f"Unknown scheme {self.kind!r}, expected one of {schemes}")

        if not self.dt > 0:
            raise ValueError(f"Time step must be positive, got {self.dt}")


def step(
    state: SimulationState,
    scheme: SplittingScheme,
    model: FieldModel,
    bspec: MagneticFieldSpec,
    backward: bool = False,
) -> SimulationState:
    """One splitting step; the rightmost factor of the composition acts first.

    Lie: He(dt) after Hv(dt). Strang: Hv(dt/2), He(dt), Hv(dt/2).
    ``backward`` runs the same composition with -dt.
    """
    dt = -scheme.dt if backward else scheme.dt
    space = model.space
    ensemble = state.ensemble

    if scheme.kind == "lie":
        ensemble = flow_Hv(ensemble, bspec, dt, space, model.parallel)
        ensemble, field = flow_He(ensemble, model, dt, bspec.scale_E)
    else:
        ensemble = flow_Hv(ensemble, bspec, 0.5 * dt, space, model.parallel)
        ensemble, field = flow_He(ensemble, model, dt, bspec.scale_E)
        ensemble = flow_Hv(ensemble, bspec, 0.5 * dt, space, model.parallel)

    return replace(
        state,
        ensemble=ensemble,
        time=state.time + dt,
        field=field,
        steps=state.steps + (-1 if backward else 1),
    )
