import logging
from pathlib import Path
from typing import Dict, List

from hampic.commands.setup import Simulation, prepare
from hampic.configuration import RunConfig, write_echo
from hampic.diagnostics import (
    CsvWriter,
    GridSpec,
    density_grid,
    diagnostics_row,
    grid_filename,
    phase_space_grid,
    write_grid,
)
from hampic.fem import IncompatibleRHS, NonConvergence, OutOfDomain
from hampic.integrators import (
    Schedule,
    SimulationState,
    count_steps,
    run,
    steps_per_output,
)
from hampic.particles import write_snapshot

logger = logging.getLogger(__name__)

diagnostics_file = "diagnostics.csv"
final_snapshot_file = "snapshot_final.txt"

solver_failure = 3


def snapshot_filename(step: int) -> str:
    return f"snapshot_{step:06d}.txt"


def phase_filename(step: int) -> str:
    return f"phase_{step:06d}.txt"


def metadata(config: RunConfig) -> Dict[str, str]:
    return {
        "scenario": config.scenario.name,
        "scheme": config.time.scheme,
        "dt": repr(config.time.dt),
        "n_particles": str(config.scenario.n_particles),
        "n_cells": "x".join(str(n) for n in config.space.n_cells),
        "seed": str(config.seed),
        "threads": str(config.parallel.threads),
    }


def write_density_files(
    config: RunConfig, simulation: Simulation, state: SimulationState
) -> None:
    directory = Path(config.output.directory)
    space = simulation.space
    grid = GridSpec(
        lower=space.lower, upper=space.upper, shape=config.output.density_grid
    )
    values = density_grid(state.ensemble, grid)
    write_grid(directory / grid_filename(state.steps), values, grid, state.time)

    if space.dim == 1 and config.scenario.domain_v is not None:
        n_cells = config.output.density_grid[0]
        phase, phase_grid = phase_space_grid(
            state.ensemble,
            (space.lower[0], space.upper[0]),
            config.scenario.domain_v,
            (n_cells, n_cells),
        )
        target = directory / phase_filename(state.steps)
        write_grid(target, phase, phase_grid, state.time)


def snapshot_schedule(config: RunConfig, simulation: Simulation) -> List[Schedule]:
    if config.output.snapshot_interval <= 0:
        return []

    directory = Path(config.output.directory)

    def take_snapshot(state: SimulationState) -> None:
        target = directory / snapshot_filename(state.steps)
        write_snapshot(target, state.ensemble, state.time)

        if config.output.write_density:
            write_density_files(config, simulation, state)

    every = steps_per_output(config.output.snapshot_interval, config.time.dt)

    return [Schedule(every=every, observer=take_snapshot)]


def main_loop(config: RunConfig) -> int:
    """Sample, then step to t_final writing diagnostics and snapshots.

    Returns 0 on success and 3 when a field solve fails; rows written before
    the failure stay in the CSV.
    """
    directory = Path(config.output.directory)
    write_echo(config, directory)
    simulation = prepare(config)
    stiffness = simulation.model.stiffness

    logger.info(
        "Running %s: %d markers, %d steps of %s",
        config.scenario.name,
        config.scenario.n_particles,
        count_steps(config.time.t_final, config.time.dt),
        config.time.scheme,
    )

    with CsvWriter(directory / diagnostics_file, metadata(config)) as writer:

        def record(state: SimulationState) -> None:
            phi = state.field.phi if state.field is not None else None
            row = diagnostics_row(state.time, state.ensemble, phi, stiffness)
            writer.write_row(row)

        every = steps_per_output(config.output.interval, config.time.dt)
        schedules = [Schedule(every=every, observer=record)]
        schedules += snapshot_schedule(config, simulation)

        try:
            final = run(
                simulation.state,
                simulation.scheme,
                simulation.model,
                simulation.bspec,
                config.time.t_final,
                schedules,
            )
        except (NonConvergence, IncompatibleRHS, OutOfDomain) as e:
            logger.error("Run aborted at %s: %s", writer.path, e)
            return solver_failure

    write_snapshot(directory / final_snapshot_file, final.ensemble, final.time)

    if config.output.write_density:
        write_density_files(config, simulation, final)

    logger.info("Finished at t = %.6g after %d steps", final.time, final.steps)

    return 0
