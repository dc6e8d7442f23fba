import logging
from pathlib import Path
from typing import Callable, List, Optional, TypeVar

from hampic import commands, configuration, output, reporting
from hampic.bracket import named_fields, print_residuals
from hampic.cli import options
from hampic.configuration import ConfigError, RunConfig
from hampic.diagnostics import InsufficientPeaks, MalformedRecord
from hampic.fem import IncompatibleRHS, NonConvergence, OutOfDomain
from hampic.reporting import theme
from rich.console import Console
from typer import Exit, Typer
from typing_extensions import Annotated

T = TypeVar("T")

logger = logging.getLogger("hampic.cli")

app = Typer(no_args_is_help=True)

config_error = 2
solver_failure = 3
io_failure = 4


def guarded(fn: Callable[[], T]) -> T:
    """Run fn, turning domain errors into exit codes."""
    try:
        return fn()
    except ConfigError as e:
        logger.error("Invalid configuration: %s", e)
        raise Exit(code=config_error)
    except MalformedRecord as e:
        logger.error("Malformed diagnostics file: %s", e)
        raise Exit(code=config_error)
    except InsufficientPeaks as e:
        logger.error("%s", e)
        raise Exit(code=solver_failure)
    except (NonConvergence, IncompatibleRHS, OutOfDomain) as e:
        logger.error("Solver failure: %s", e)
        raise Exit(code=solver_failure)
    except OSError as e:
        logger.error("I/O failure: %s", e)
        raise Exit(code=io_failure)


def load(
    config_file: Optional[Path],
    overrides: Optional[List[str]] = None,
    threads: Optional[int] = None,
    out: Optional[str] = None,
    seed: Optional[int] = None,
) -> RunConfig:
    return guarded(
        lambda: configuration.parse_config(
            config_file, overrides or [], threads=threads, out=out, seed=seed
        )
    )


def parse_thread_counts(raw: str) -> List[int]:
    try:
        return [int(item) for item in str.split(raw, ",") if item.strip()]
    except ValueError:
        logger.error("Expected comma separated integers, got %r", raw)
        raise Exit(code=config_error)


@app.command("run")
def run_command(
    config_file: Annotated[Path, options.config_file],
    threads: Annotated[Optional[int], options.threads] = None,
    out: Annotated[Optional[str], options.out] = None,
    seed: Annotated[Optional[int], options.seed] = None,
    overrides: Annotated[Optional[List[str]], options.overrides] = None,
    verbose: Annotated[bool, options.verbose] = False,
):
    """Runs one simulation, writing diagnostics, snapshots and the config echo."""
    reporting.configure(verbose)
    config = load(config_file, overrides, threads, out, seed)

    code = guarded(lambda: commands.run.main_loop(config))

    if code:
        raise Exit(code=code)


@app.command("bench")
def bench_command(
    config_file: Annotated[Path, options.config_file],
    threads: Annotated[str, options.thread_counts] = "1,2,4,8",
    repeats: Annotated[int, options.repeats] = 3,
    out: Annotated[Optional[str], options.out] = None,
    overrides: Annotated[Optional[List[str]], options.overrides] = None,
    verbose: Annotated[bool, options.verbose] = False,
):
    """Times the deposit and push phases for each thread count."""
    reporting.configure(verbose)
    config = load(config_file, overrides, out=out)
    counts = parse_thread_counts(threads)
    directory = Path(config.output.directory)

    rows = guarded(lambda: commands.bench.bench_speedup(config, counts, repeats))
    guarded(lambda: commands.bench.print_bench(rows, directory))


@app.command("verify-bracket")
def verify_bracket_command(
    n_particles: Annotated[int, options.n_particles] = 2,
    field: Annotated[str, options.field] = "constant",
    all_fields: Annotated[bool, options.all_fields] = False,
    seed: Annotated[int, options.seed] = 0,
    richardson: Annotated[bool, options.richardson] = False,
    show_all: Annotated[bool, options.show_all] = False,
    save: Annotated[bool, options.save] = False,
    verbose: Annotated[bool, options.verbose] = False,
):
    """Checks the Jacobi identity of the discrete Poisson matrix."""
    reporting.configure(verbose)
    console = Console(theme=theme.hampic_theme)
    fields = sorted(named_fields) if all_fields else [field]
    failed = False

    for name in fields:
        try:
            check = commands.verify.verify_bracket(
                n_particles, name, seed, richardson=richardson
            )
        except ValueError as e:
            logger.error("%s", e)
            raise Exit(code=config_error)

        table = print_residuals(check.rows, show_all, title=f"field = {name}")
        mark = theme.check_emoji if check.passed else theme.cross_emoji
        detail = f"max zero-expected residual {check.max_zero_expected:.3e}"

        if check.max_div_error is not None:
            detail += f", div B mismatch {check.max_div_error:.2%}"

        console.print(f"{mark} [field]{name}[/]: {detail}")

        if save:
            output.save(table, Path.cwd(), f"bracket_{name}")

        failed = failed or not check.passed

    if failed:
        raise Exit(code=1)


@app.command("fit-gamma")
def fit_gamma_command(
    csv_file: Annotated[Path, options.csv_file],
    t_min: Annotated[float, options.t_min] = 1.0,
    max_peaks: Annotated[int, options.max_peaks] = 8,
    fallback: Annotated[bool, options.fallback] = False,
):
    """Fits the damping rate of E_d from a diagnostics CSV."""
    reporting.configure(False)

    fit = guarded(lambda: commands.fit.fit_gamma(csv_file, t_min, max_peaks, fallback))

    commands.fit.print_fit(fit, csv_file)


@app.command("convergence")
def convergence_command(
    config_file: Annotated[Path, options.config_file],
    t_final: Annotated[float, options.t_final] = 1.0,
    overrides: Annotated[Optional[List[str]], options.overrides] = None,
    save: Annotated[bool, options.save] = False,
    verbose: Annotated[bool, options.verbose] = False,
):
    """Measures the time step convergence order of the Lie and Strang schemes."""
    reporting.configure(verbose)
    config = load(config_file, overrides)

    results = guarded(
        lambda: commands.convergence.convergence_study(config, t_final=t_final)
    )
    table = commands.convergence.print_convergence(results)

    if save:
        guarded(lambda: output.save(table, config.output.directory, "convergence"))


@app.command("presets")
def presets_command():
    """Lists the shipped run configurations."""
    console = Console(theme=theme.hampic_theme)

    for name in configuration.list_presets():
        console.print(f"[data]{name}[/]")
