import os
from functools import reduce
from io import StringIO
from pathlib import Path
from typing import Tuple, Union, cast

from hampic.reporting import theme
from rich.console import Console
from rich.table import Table

replacements = {"✔": "X", "❌": "-"}


def replace_char(data: str, pair: Tuple[str, str]) -> str:
    return str.replace(data, *pair)


def adjust(data: str) -> str:
    return reduce(replace_char, replacements.items(), data)


def write_text_atomic(path: Union[str, Path], data: str) -> Path:
    """Write to a sibling temporary file, then rename over the target."""
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    tmp = target.with_name(f".{target.name}.tmp")

    with open(tmp, "w", encoding="utf-8") as f:
        f.write(data)
        f.flush()
        os.fsync(f.fileno())

    os.replace(tmp, target)

    return target


def render(table: Table) -> str:
    console = Console(theme=theme.hampic_theme, width=1024, file=StringIO())

    console.print(table, overflow="ellipsis")

    f = cast(StringIO, console.file)

    return adjust(f.getvalue())


def save(table: Table, directory: Union[str, Path], name: str) -> Path:
    return write_text_atomic(Path(directory) / f"{name}.txt", render(table))
