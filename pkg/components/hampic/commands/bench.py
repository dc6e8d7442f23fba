import logging
import statistics
import time
from dataclasses import replace
from pathlib import Path
from typing import Callable, List, Sequence

from hampic import output
from hampic.commands.setup import Simulation, prepare, with_parallel
from hampic.configuration import RunConfig
from hampic.integrators import flow_Hv, kick, solve_field
from hampic.particles import deposit
from hampic.reporting import theme
from rich.console import Console
from rich.table import Table

logger = logging.getLogger(__name__)

bench_file = "bench.csv"
bench_columns = (
    "threads",
    "deposit_seconds",
    "push_seconds",
    "deposit_speedup",
    "push_speedup",
)


def wall_time(fn: Callable[[], object], repeats: int) -> float:
    """Median wall time of ``repeats`` calls."""
    timings = []

    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        timings.append(time.perf_counter() - start)

    return statistics.median(timings)


def time_phases(simulation: Simulation, repeats: int) -> dict:
    model = simulation.model
    ensemble = simulation.state.ensemble
    dt = simulation.scheme.dt
    phi = solve_field(ensemble, model).phi

    def deposit_phase() -> None:
        deposit(ensemble, model.kernel, model.space, model.rho0, model.parallel)

    def push_phase() -> None:
        pushed = flow_Hv(ensemble, simulation.bspec, dt, model.space, model.parallel)
        kick(pushed, model, phi, dt, simulation.bspec.scale_E)

    return {
        "deposit_seconds": wall_time(deposit_phase, repeats),
        "push_seconds": wall_time(push_phase, repeats),
    }


def thread_list(thread_counts: Sequence[int]) -> List[int]:
    if any(count < 1 for count in thread_counts):
        raise ValueError(f"Thread counts must be positive, got {list(thread_counts)}")

    return sorted({1, *thread_counts})


def bench_speedup(
    config: RunConfig, thread_counts: Sequence[int], repeats: int = 3
) -> List[dict]:
    """Per-step deposit and push times for every thread count.

    Speedups are relative to the single-thread timings, so the first row
    always reports 1.0.
    """
    simulation = prepare(config)
    rows = []

    for threads in thread_list(thread_counts):
        parallel = replace(config.parallel, threads=threads)
        timed = time_phases(with_parallel(simulation, parallel), repeats)
        logger.debug("threads=%d %s", threads, timed)
        rows.append({"threads": threads, **timed})

    base = rows[0]

    for row in rows:
        row["deposit_speedup"] = base["deposit_seconds"] / row["deposit_seconds"]
        row["push_speedup"] = base["push_seconds"] / row["push_seconds"]

    return rows


def bench_table(rows: List[dict]) -> Table:
    table = Table(box=None, title="Wall time per step")
    table.add_column("[data]threads[/]", justify="right")
    table.add_column("[field]deposit (s)[/]", justify="right")
    table.add_column("[particle]push (s)[/]", justify="right")
    table.add_column("[field]deposit speedup[/]", justify="right")
    table.add_column("[particle]push speedup[/]", justify="right")

    for row in rows:
        table.add_row(
            str(row["threads"]),
            f"{row['deposit_seconds']:.4g}",
            f"{row['push_seconds']:.4g}",
            f"{row['deposit_speedup']:.2f}",
            f"{row['push_speedup']:.2f}",
        )

    return table


def bench_csv(rows: List[dict]) -> str:
    lines = [",".join(bench_columns)]
    lines += [",".join(f"{row[key]:.17g}" for key in bench_columns) for row in rows]

    return "\n".join(lines) + "\n"


def print_bench(rows: List[dict], directory: Path) -> Path:
    table = bench_table(rows)
    console = Console(theme=theme.hampic_theme)
    console.print(table, overflow="ellipsis")
    output.save(table, directory, "bench")

    return output.write_text_atomic(directory / bench_file, bench_csv(rows))
