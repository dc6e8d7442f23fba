import math

import numpy as np
import pytest
from hampic.parallel import ParallelConfig, chunk_bounds, map_chunks, pairwise_sum


def test_deterministic_chunks_depend_only_on_the_chunk_size():
    a = chunk_bounds(10, ParallelConfig(threads=2, deterministic=True, chunk_size=4))
    b = chunk_bounds(10, ParallelConfig(threads=8, deterministic=True, chunk_size=4))

    assert a == b == [slice(0, 4), slice(4, 8), slice(8, 10)]


def test_default_chunks_split_per_thread():
    chunks = chunk_bounds(10, ParallelConfig(threads=3))

    assert chunks == [slice(0, 4), slice(4, 8), slice(8, 10)]
    assert chunk_bounds(0, ParallelConfig(threads=3)) == []


def test_map_chunks_keeps_chunk_order():
    chunks = [slice(i, i + 1) for i in range(20)]

    assert map_chunks(lambda c: c.start, chunks, threads=4) == list(range(20))


def test_pairwise_sum_matches_fsum_closely():
    values = np.random.default_rng(0).standard_normal(100_000) * 1e3

    assert pairwise_sum(values) == pytest.approx(math.fsum(values), rel=1e-14)


def test_pairwise_sum_is_thread_independent():
    values = np.random.default_rng(1).uniform(size=(70_000, 3))

    single = pairwise_sum(values)
    threaded = pairwise_sum(values, ParallelConfig(threads=5))

    assert np.array_equal(single, threaded)


def test_empty_sum_is_zero():
    assert pairwise_sum(np.zeros(0)) == 0.0


@pytest.mark.parametrize(
    "kwargs", [{"threads": 0}, {"chunk_size": 0}, {"strategy": "cells"}]
)
def test_invalid_parallel_settings_are_rejected(kwargs):
    with pytest.raises(ValueError):
        ParallelConfig(**kwargs)
