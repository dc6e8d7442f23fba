from pathlib import Path
from typing import Tuple, Union

import numpy as np
from hampic.output import write_text_atomic
from hampic.particles.ensemble import ParticleEnsemble, create_ensemble

magic = "# hampic-snapshot 1"


def snapshot_text(ensemble: ParticleEnsemble, time: float) -> str:
    header = [
        magic,
        f"# dim={ensemble.dim} n_particles={ensemble.n_particles} time={time:.17g}",
    ]
    table = np.column_stack([ensemble.X, ensemble.V, ensemble.weights])
    rows = [" ".join(f"{v:.17g}" for v in row) for row in table]

    return "\n".join(header + rows) + "\n"


def write_snapshot(
    path: Union[str, Path], ensemble: ParticleEnsemble, time: float
) -> Path:
    return write_text_atomic(path, snapshot_text(ensemble, time))


def _header_fields(line: str) -> dict:
    pairs = (item.split("=", 1) for item in line.lstrip("#").split())

    return {key: value for key, value in pairs}


def read_snapshot(path: Union[str, Path]) -> Tuple[ParticleEnsemble, float]:
    lines = Path(path).read_text().splitlines()

    if not lines or lines[0].strip() != magic:
        raise ValueError(f"{path}: not a version 1 particle snapshot")

    fields = _header_fields(lines[1])
    dim = int(fields["dim"])
    n = int(fields["n_particles"])
    rows = [line.split() for line in lines[2:] if line.strip()]
    table = np.array([[float(v) for v in row] for row in rows])

    if table.shape != (n, dim + 4):
        raise ValueError(
            f"{path}: expected {n} rows of {dim + 4} values, got {table.shape}"
        )

    ensemble = create_ensemble(
        table[:, :dim], table[:, dim : dim + 3], table[:, dim + 3]
    )

    return ensemble, float(fields["time"])
