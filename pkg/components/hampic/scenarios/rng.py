from typing import Callable, List, Tuple

import numpy as np
from hampic.parallel import map_chunks

block_size = 2**16


def block_generator(seed: int, block: int) -> np.random.Generator:
    sequence = np.random.SeedSequence(seed, spawn_key=(block,))

    return np.random.Generator(np.random.PCG64(sequence))


def blocks(n: int) -> List[slice]:
    starts = range(0, n, block_size)

    return [slice(start, min(start + block_size, n)) for start in starts]


def sample_blocks(
    n: int,
    seed: int,
    draw: Callable[[np.random.Generator, slice], Tuple[np.ndarray, ...]],
    threads: int = 1,
) -> Tuple[np.ndarray, ...]:
    """Run ``draw`` once per fixed block of markers and concatenate the pieces.

    Block b always uses the stream seeded by (seed, b), whatever the thread count.
    """
    chunks = blocks(n)

    def run(chunk: slice) -> Tuple[np.ndarray, ...]:
        return draw(block_generator(seed, chunk.start // block_size), chunk)

    parts = map_chunks(run, chunks, threads)

    return tuple(np.concatenate(pieces) for pieces in zip(*parts))
