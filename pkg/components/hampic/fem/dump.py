from pathlib import Path
from typing import Union

import numpy as np
from hampic.fem.assembly import StiffnessMatrix
from hampic.output import write_text_atomic
from scipy import sparse


def write_triplets(stiffness: StiffnessMatrix, path: Union[str, Path]) -> Path:
    coo = stiffness.matrix.tocoo()
    header = f"# {coo.shape[0]} {coo.shape[1]} {coo.nnz}\n"
    rows = "".join(
        f"{row} {col} {value:.17g}\n"
        for row, col, value in zip(coo.row, coo.col, coo.data)
    )

    return write_text_atomic(path, header + rows)


def read_triplets(path: Union[str, Path]) -> sparse.csr_matrix:
    lines = Path(path).read_text().splitlines()
    n_rows, n_cols, nnz = (int(v) for v in lines[0].lstrip("#").split())
    entries = [line.split() for line in lines[1:] if line.strip()]

    if len(entries) != nnz:
        raise ValueError(f"{path}: expected {nnz} entries, found {len(entries)}")

    rows = np.array([int(e[0]) for e in entries], dtype=np.int64)
    cols = np.array([int(e[1]) for e in entries], dtype=np.int64)
    data = np.array([float(e[2]) for e in entries])

    return sparse.csr_matrix((data, (rows, cols)), shape=(n_rows, n_cols))


def write_vector(values: np.ndarray, path: Union[str, Path]) -> Path:
    text = "".join(f"{float(v):.17g}\n" for v in np.ravel(values))

    return write_text_atomic(path, text)


def read_vector(path: Union[str, Path]) -> np.ndarray:
    return np.array([float(line) for line in Path(path).read_text().split()])
