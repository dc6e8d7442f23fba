import numpy as np
import pytest
from hampic.parallel import ParallelConfig
from hampic.particles import (
    create_ensemble,
    kinetic_energy,
    read_snapshot,
    total_charge,
    total_momentum,
    write_snapshot,
)


def test_equal_weights_sum_to_one():
    n = 1000
    ensemble = create_ensemble(np.zeros((n, 1)), np.zeros((n, 1)), np.full(n, 1 / n))

    assert total_charge(ensemble) == pytest.approx(1.0, abs=1e-15)


def test_single_particle_momentum_and_energy():
    ensemble = create_ensemble([[0.0, 0.0]], [[3.0, 0.0]], [2.0])

    np.testing.assert_array_equal(total_momentum(ensemble), [6.0, 0.0, 0.0])
    assert kinetic_energy(create_ensemble([[0.0]], [[2.0, 0.0]], [1.0])) == 2.0


def test_mirrored_velocities_carry_no_momentum():
    V = np.random.default_rng(2).standard_normal((500, 3))
    ensemble = create_ensemble(
        np.zeros((1000, 1)), np.concatenate([V, -V]), np.full(1000, 0.3)
    )

    np.testing.assert_allclose(total_momentum(ensemble), 0.0, atol=1e-13)


def test_resting_markers_have_no_kinetic_energy():
    ensemble = create_ensemble(np.ones((3, 1)), np.zeros((3, 3)), [1.0, 2.0, 3.0])

    assert kinetic_energy(ensemble) == 0.0


def test_moments_are_identical_for_any_thread_count():
    rng = np.random.default_rng(4)
    n = 50_000
    ensemble = create_ensemble(
        rng.uniform(size=(n, 1)), rng.standard_normal((n, 3)), rng.uniform(size=n)
    )
    single = ParallelConfig(threads=1)
    many = ParallelConfig(threads=4)

    assert total_charge(ensemble, single) == total_charge(ensemble, many)
    assert kinetic_energy(ensemble, single) == kinetic_energy(ensemble, many)
    assert np.array_equal(
        total_momentum(ensemble, single), total_momentum(ensemble, many)
    )


def test_snapshot_restores_the_ensemble(tmp_path, square_ensemble):
    path = write_snapshot(tmp_path / "snapshot.txt", square_ensemble, 1.25)

    restored, time = read_snapshot(path)
    header = path.read_text().splitlines()[:2]

    assert header == ["# hampic-snapshot 1", "# dim=2 n_particles=500 time=1.25"]
    assert time == 1.25
    assert np.array_equal(restored.X, square_ensemble.X)
    assert np.array_equal(restored.V, square_ensemble.V)
    assert np.array_equal(restored.weights, square_ensemble.weights)
