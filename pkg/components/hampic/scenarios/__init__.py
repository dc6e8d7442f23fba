from hampic.scenarios.samplers import (
    background_density,
    magnetic_field,
    ring_density,
    sample,
    sample_bump_on_tail,
    sample_diocotron,
    sample_landau,
    sample_two_stream,
    total_mass,
    velocity_densities,
)
from hampic.scenarios.spec import (
    ScenarioSpec,
    defaults,
    scenario_spec,
    validate,
    variants,
)

__all__ = [
    "ScenarioSpec",
    "background_density",
    "defaults",
    "magnetic_field",
    "ring_density",
    "sample",
    "sample_bump_on_tail",
    "sample_diocotron",
    "sample_landau",
    "sample_two_stream",
    "scenario_spec",
    "total_mass",
    "validate",
    "variants",
    "velocity_densities",
]
