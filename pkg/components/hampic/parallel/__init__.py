from hampic.parallel.core import (
    ParallelConfig,
    chunk_bounds,
    map_chunks,
    pairwise_sum,
    strategies,
    sum_in_order,
)

__all__ = [
    "ParallelConfig",
    "chunk_bounds",
    "map_chunks",
    "pairwise_sum",
    "strategies",
    "sum_in_order",
]
