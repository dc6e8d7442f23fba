from pathlib import Path
from typing import Union

from hampic.diagnostics import DampingFit, fit_damping_rate, read_csv
from hampic.reporting import theme
from rich.console import Console
from rich.table import Table


def fit_gamma(
    path: Union[str, Path],
    t_min: float = 1.0,
    max_peaks: int = 8,
    fallback: bool = False,
) -> DampingFit:
    record = read_csv(path)

    return fit_damping_rate(
        record.column("t"),
        record.column("E_d"),
        t_min=t_min,
        max_peaks=max_peaks,
        fallback=fallback,
    )


def print_fit(fit: DampingFit, path: Union[str, Path]) -> None:
    console = Console(theme=theme.hampic_theme)
    table = Table(box=None, title=f"Damping fit of {Path(path).name}")
    table.add_column("[data]gamma[/]", justify="right")
    table.add_column("[data]R^2[/]", justify="right")
    table.add_column("[time]peaks[/]", justify="right")
    table.add_column("[data]method[/]")

    method = "all samples" if fit.direct else "local maxima"
    table.add_row(f"{fit.gamma:.6g}", f"{fit.r_squared:.4f}", str(fit.n_peaks), method)

    console.print(table, overflow="ellipsis")
