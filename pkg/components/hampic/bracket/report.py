from typing import List, Optional

import numpy as np
from hampic.reporting import theme
from rich.console import Console
from rich.table import Table

zero_expected = "zero-expected"
div_driven = "div-driven"


def classify(i: int, j: int, k: int, n_particles: int) -> str:
    """Triples of the three distinct velocity components of one particle carry div B."""
    half = 3 * n_particles
    indices = (i, j, k)

    if not all(index >= half for index in indices):
        return zero_expected

    particles = {(index - half) // 3 for index in indices}
    components = {(index - half) % 3 for index in indices}

    if len(particles) == 1 and len(components) == 3:
        return div_driven

    return zero_expected


def residual_table(R: np.ndarray, n_particles: int) -> List[dict]:
    size = R.shape[0]

    return [
        {
            "i": i,
            "j": j,
            "k": k,
            "residual": float(R[i, j, k]),
            "class": classify(i, j, k, n_particles),
        }
        for i in range(size)
        for j in range(size)
        for k in range(size)
    ]


def summarize(rows: List[dict]) -> dict:
    summary = {}

    for label in (zero_expected, div_driven):
        values = [abs(row["residual"]) for row in rows if row["class"] == label]
        summary[label] = max(values) if values else 0.0

    return summary


def print_residuals(
    rows: List[dict], show_all: bool = False, title: Optional[str] = None
) -> Table:
    console = Console(theme=theme.hampic_theme)
    table = Table(box=None, title=title)
    table.add_column("[data]i[/]", justify="right")
    table.add_column("[data]j[/]", justify="right")
    table.add_column("[data]k[/]", justify="right")
    table.add_column("[field]residual[/]", justify="right")
    table.add_column("[data]class[/]")

    shown = rows if show_all else [row for row in rows if row["class"] == div_driven]

    for row in shown:
        table.add_row(
            str(row["i"]),
            str(row["j"]),
            str(row["k"]),
            f"{row['residual']:.3e}",
            row["class"],
        )

    console.print(table, overflow="ellipsis")

    return table
