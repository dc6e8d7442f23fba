from hampic.integrators.flows import (
    flow_He,
    flow_Hv,
    kick,
    rotation_coefficients,
    solve_field,
    velocity_maps,
)
from hampic.integrators.magnetic import MagneticFieldSpec, strong_field_spec
from hampic.integrators.model import FieldModel, SimulationState, field_model
from hampic.integrators.simulation import (
    Schedule,
    count_steps,
    initial_state,
    run,
    steps_per_output,
)
from hampic.integrators.splitting import SplittingScheme, schemes, step

__all__ = [
    "FieldModel",
    "MagneticFieldSpec",
    "Schedule",
    "SimulationState",
    "SplittingScheme",
    "count_steps",
    "field_model",
    "flow_He",
    "flow_Hv",
    "initial_state",
    "kick",
    "rotation_coefficients",
    "run",
    "schemes",
    "solve_field",
    "step",
    "steps_per_output",
    "strong_field_spec",
    "velocity_maps",
]
