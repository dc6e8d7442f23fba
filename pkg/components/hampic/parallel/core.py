import math
from dataclasses import dataclass
from functools import reduce
from typing import Callable, List, Optional, Sequence, TypeVar

import numpy as np
from joblib import Parallel, delayed

T = TypeVar("T")

strategies = ("particles", "regions")

block_size = 4096


@dataclass(frozen=True)
class ParallelConfig:
    """Thread settings for particle loops.

    In deterministic mode chunk boundaries depend only on ``chunk_size``,
    so results are bit-identical for any thread count.
    """

    threads: int = 1
    deterministic: bool = False
    strategy: str = "particles"
    chunk_size: int = 65536

    def __post_init__(self) -> None:
        if self.threads < 1:
            raise ValueError(f"threads must be at least 1, got {self.threads}")

        if self.chunk_size < 1:
            raise ValueError(f"chunk_size must be at least 1, got {self.chunk_size}")

        if self.strategy not in strategies:
            raise ValueError(
                f"Unknown strategy {self.strategy!r}, expected one of {strategies}"
            )


def chunk_bounds(n_items: int, config: ParallelConfig) -> List[slice]:
    if n_items <= 0:
        return []

    if config.deterministic:
        size = config.chunk_size
    else:
        size = math.ceil(n_items / config.threads)

    starts = range(0, n_items, size)

    return [slice(start, min(start + size, n_items)) for start in starts]


def map_chunks(
    fn: Callable[[slice], T], chunks: Sequence[slice], threads: int
) -> List[T]:
    """Apply fn to every chunk, results in chunk order."""
    if threads == 1 or len(chunks) <= 1:
        return [fn(chunk) for chunk in chunks]

    runner = Parallel(n_jobs=min(threads, len(chunks)), backend="threading")

    return list(runner(delayed(fn)(chunk) for chunk in chunks))


def sum_in_order(parts: Sequence[np.ndarray], size: int) -> np.ndarray:
    return reduce(np.add, parts, np.zeros(size))


def _block_partials(values: np.ndarray) -> np.ndarray:
    n = values.shape[0]
    n_blocks = -(-n // block_size)
    padded = np.zeros((n_blocks * block_size,) + values.shape[1:])
    padded[:n] = values

    return padded.reshape((n_blocks, block_size) + values.shape[1:]).sum(axis=1)


def pairwise_sum(values, config: Optional[ParallelConfig] = None):
    """Sum along the first axis with a fixed block tree.

    Blocks of ``block_size`` rows are summed by numpy and the block sums are
    combined with ``math.fsum``, so the result does not depend on threading.
    """
    arr = np.asarray(values, dtype=float)

    if arr.shape[0] == 0:
        return 0.0 if arr.ndim == 1 else np.zeros(arr.shape[1:])

    if config is not None and config.threads > 1 and arr.shape[0] > block_size:
        n_blocks = -(-arr.shape[0] // block_size)
        per_thread = -(-n_blocks // config.threads) * block_size
        chunks = [
            slice(start, start + per_thread)
            for start in range(0, arr.shape[0], per_thread)
        ]
        partials = np.concatenate(
            map_chunks(
                lambda chunk: _block_partials(arr[chunk]), chunks, config.threads
            )
        )
    else:
        partials = _block_partials(arr)

    if arr.ndim == 1:
        return math.fsum(partials)

    flat = partials.reshape(partials.shape[0], -1)
    summed = np.array([math.fsum(column) for column in flat.T])

    return summed.reshape(arr.shape[1:])
