from dataclasses import dataclass, field
from pathlib import Path
from typing import IO, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np
from hampic.diagnostics.energy import electric_energy
from hampic.diagnostics.errors import MalformedRecord
from hampic.particles import (
    ParticleEnsemble,
    kinetic_energy,
    total_charge,
    total_momentum,
)

columns = ("t", "E_d", "H", "Px", "Py", "C")

Row = Tuple[float, float, float, float, float, float]


@dataclass
class DiagnosticsRecord:
    metadata: Dict[str, str] = field(default_factory=dict)
    rows: List[Row] = field(default_factory=list)

    def append(self, row: Sequence[float]) -> None:
        values = tuple(float(v) for v in row)

        if len(values) != len(columns):
            raise ValueError(f"Expected {len(columns)} values, got {len(values)}")

        if self.rows and values[0] <= self.rows[-1][0]:
            raise ValueError(
                f"Time {values[0]} does not increase past {self.rows[-1][0]}"
            )

        self.rows.append(values)  # type: ignore[arg-type]

    def column(self, name: str) -> np.ndarray:
        index = columns.index(name)

        return np.array([row[index] for row in self.rows])


def diagnostics_row(t: float, ensemble: ParticleEnsemble, phi: np.ndarray, M) -> Row:
    e_d = electric_energy(phi, M)
    momentum = total_momentum(ensemble)
    energy = kinetic_energy(ensemble) + 0.5 * e_d**2

    charge = total_charge(ensemble)

    return (t, e_d, energy, float(momentum[0]), float(momentum[1]), charge)


def format_row(row: Sequence[float]) -> str:
    return ",".join(f"{v:.17g}" for v in row) + "\n"


def header_text(metadata: Dict[str, str]) -> str:
    lines = [f"# {key}={value}\n" for key, value in metadata.items()]

    return "".join(lines) + ",".join(columns) + "\n"


class CsvWriter:
    """Appends whole rows, flushing after each so a crash never leaves half a row."""

    def __init__(self, path: Union[str, Path], metadata: Dict[str, str]) -> None:
        self.path = Path(path)
        self.record = DiagnosticsRecord(metadata=dict(metadata))
        self._file: Optional[IO[str]] = None

    def __enter__(self) -> "CsvWriter":
        self.path.parent.mkdir(parents=True, exist_ok=True)
        self._file = open(self.path, "w", encoding="utf-8", buffering=1)
        self._file.write(header_text(self.record.metadata))
        self._file.flush()

        return self

    def write_row(self, row: Sequence[float]) -> None:
        self.record.append(row)

        if self._file is not None:
            self._file.write(format_row(row))
            self._file.flush()

    def __exit__(self, *_exc) -> None:
        if self._file is not None:
            self._file.close()
            self._file = None


def read_csv(path: Union[str, Path]) -> DiagnosticsRecord:
    record = DiagnosticsRecord()

    for number, line in enumerate(Path(path).read_text().splitlines(), start=1):
        if line.startswith("#"):
            key, _, value = line[1:].strip().partition("=")
            record.metadata[key] = value
        elif line.strip() and not line.startswith(columns[0] + ","):
            try:
                record.append([float(v) for v in line.split(",")])
            except ValueError as e:
                raise MalformedRecord(str(path), number, str(e)) from e

    return record
