import logging
import math
from dataclasses import dataclass, replace
from typing import Dict, List, Sequence

from hampic.commands.setup import Simulation, prepare
from hampic.configuration import RunConfig
from hampic.diagnostics import convergence_orders, fitted_order, phase_space_rms_error
from hampic.integrators import SimulationState, SplittingScheme, run, schemes
from hampic.particles import default_kernel
from hampic.reporting import theme
from rich.console import Console
from rich.table import Table

logger = logging.getLogger(__name__)

default_dts = tuple(2.0 ** -(i + 1) for i in range(5))
default_t_final = 1.0
default_reference_factor = 64


@dataclass(frozen=True)
class ConvergenceResult:
    scheme: str
    dts: List[float]
    errors: List[float]
    orders: List[float]
    slope: float


def final_state(
    simulation: Simulation, kind: str, dt: float, t_final: float
) -> SimulationState:
    scheme = SplittingScheme(kind=kind, dt=dt)

    return run(simulation.state, scheme, simulation.model, simulation.bspec, t_final)


def phase_error(
    simulation: Simulation, state: SimulationState, reference: SimulationState
) -> float:
    position, velocity = phase_space_rms_error(
        state.ensemble, reference.ensemble, simulation.space
    )

    return math.hypot(position, velocity)


def smooth_force(config: RunConfig) -> RunConfig:
    """Swap a delta kernel for the B-spline of the element order and width h.

    A delta deposit on continuous elements gives a force that jumps at cell
    faces, which caps every splitting at first order.
    """
    if config.kernel.shape != "delta":
        return config

    kernel = default_kernel(config.build_space(), shape="bspline")
    logger.info(
        "Using a degree %d B-spline kernel of width %g for the study",
        kernel.order,
        kernel.width,
    )

    return replace(config, kernel=kernel)


def convergence_study(
    config: RunConfig,
    dts: Sequence[float] = default_dts,
    t_final: float = default_t_final,
    reference_factor: int = default_reference_factor,
) -> Dict[str, ConvergenceResult]:
    """Errors at t_final against a Strang run with min(dts) / reference_factor.

    Every run starts from the same sampled markers.
    """
    simulation = prepare(smooth_force(config))
    reference_dt = min(dts) / reference_factor
    reference = final_state(simulation, "strang", reference_dt, t_final)
    results = {}

    for kind in schemes:
        errors = []

        for dt in dts:
            state = final_state(simulation, kind, dt, t_final)
            errors.append(phase_error(simulation, state, reference))
            logger.debug("%s dt=%g error=%.3e", kind, dt, errors[-1])

        results[kind] = ConvergenceResult(
            scheme=kind,
            dts=list(dts),
            errors=errors,
            orders=convergence_orders(dts, errors),
            slope=fitted_order(dts, errors),
        )

    return results


def print_convergence(results: Dict[str, ConvergenceResult]) -> Table:
    console = Console(theme=theme.hampic_theme)
    table = Table(box=None, title="Time step convergence")
    table.add_column("[data]scheme[/]")
    table.add_column("[time]dt[/]", justify="right")
    table.add_column("[particle]error[/]", justify="right")
    table.add_column("[data]order[/]", justify="right")

    for result in results.values():
        orders = ["", *(f"{order:.3f}" for order in result.orders)]

        for dt, error, order in zip(result.dts, result.errors, orders):
            table.add_row(result.scheme, f"{dt:g}", f"{error:.3e}", order)

        table.add_row(result.scheme, "fit", "", f"{result.slope:.3f}", style="bold")

    console.print(table, overflow="ellipsis")

    return table
