import logging
import math
from dataclasses import dataclass, replace
from typing import Callable, Sequence

from hampic.fem import IncompatibleRHS, NonConvergence, OutOfDomain
from hampic.integrators.flows import solve_field
from hampic.integrators.magnetic import MagneticFieldSpec
from hampic.integrators.model import FieldModel, SimulationState
from hampic.integrators.splitting import SplittingScheme, step

logger = logging.getLogger(__name__)

Observer = Callable[[SimulationState], None]

step_tolerance = 1e-9


@dataclass(frozen=True)
class Schedule:
    """Call ``observer`` at step 0 and after every ``every`` steps."""

    every: int
    observer: Observer


def count_steps(duration: float, dt: float) -> int:
    """floor(duration / dt), robust against the rounding of e.g. 0.3 / 0.1."""
    if duration < 0:
        raise ValueError(f"Duration must be non-negative, got {duration}")

    return int(math.floor(duration / dt + step_tolerance))


def steps_per_output(interval: float, dt: float) -> int:
    ratio = interval / dt
    steps = int(round(ratio))

    if steps < 1 or abs(ratio - steps) > step_tolerance * max(1.0, ratio):
        raise ValueError(f"Output interval {interval} is not a multiple of dt = {dt}")

    return steps


def initial_state(state: SimulationState, model: FieldModel) -> SimulationState:
    if state.field is not None:
        return state

    return replace(state, field=solve_field(state.ensemble, model))


def _notify(schedules: Sequence[Schedule], state: SimulationState, index: int) -> None:
    for schedule in schedules:
        if index % schedule.every == 0:
            schedule.observer(state)


def run(
    state: SimulationState,
    scheme: SplittingScheme,
    model: FieldModel,
    bspec: MagneticFieldSpec,
    t_final: float,
    schedules: Sequence[Schedule] = (),
) -> SimulationState:
    """Fixed-step loop from ``state.time`` to ``t_final``.

    Observers receive the field solved inside the step that produced the
    state; at step 0 a solve at the initial positions provides it.
    """
    n_steps = count_steps(t_final - state.time, scheme.dt)
    current = initial_state(state, model)
    start = state.time

    _notify(schedules, current, 0)

    for index in range(1, n_steps + 1):
        try:
            current = step(current, scheme, model, bspec)
        except (NonConvergence, IncompatibleRHS, OutOfDomain) as e:
            logger.error("Step %d (t = %.6g) failed: %s", index, current.time, e)
            raise

        current = replace(current, time=start + index * scheme.dt)
        logger.debug("Step %d done, t = %.6g", index, current.time)
        _notify(schedules, current, index)

    return current
