from dataclasses import dataclass, replace
from typing import Optional

from hampic.configuration import RunConfig
from hampic.fem import FemSpace
from hampic.integrators import (
    FieldModel,
    MagneticFieldSpec,
    SimulationState,
    SplittingScheme,
    field_model,
)
from hampic.parallel import ParallelConfig
from hampic.particles import ParticleEnsemble, total_charge, with_phase, wrap_positions
from hampic.scenarios import background_density, magnetic_field, sample


@dataclass(frozen=True, eq=False)
class Simulation:
    space: FemSpace
    model: FieldModel
    bspec: MagneticFieldSpec
    scheme: SplittingScheme
    state: SimulationState


def initial_ensemble(config: RunConfig, space: FemSpace) -> ParticleEnsemble:
    ensemble = sample(config.scenario, config.parallel.threads)

    return with_phase(ensemble, X=wrap_positions(space, ensemble.X))


def prepare(
    config: RunConfig,
    ensemble: Optional[ParticleEnsemble] = None,
    parallel: Optional[ParallelConfig] = None,
) -> Simulation:
    """Sample markers and assemble the field model described by ``config``."""
    space = config.build_space()
    markers = ensemble if ensemble is not None else initial_ensemble(config, space)
    rho0 = background_density(config.scenario, total_charge(markers))
    model = field_model(
        space,
        kernel=config.kernel,
        rho0=rho0,
        solver=config.solver,
        parallel=parallel or config.parallel,
    )

    return Simulation(
        space=space,
        model=model,
        bspec=magnetic_field(config.scenario),
        scheme=config.scheme,
        state=SimulationState(ensemble=markers),
    )


def with_parallel(simulation: Simulation, parallel: ParallelConfig) -> Simulation:
    return replace(simulation, model=replace(simulation.model, parallel=parallel))
