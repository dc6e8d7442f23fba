import numpy as np
import pytest
from hampic.fem import build_space
from hampic.particles import concatenate, create_ensemble, wrap_positions


def test_velocities_are_padded_to_three_components():
    ensemble = create_ensemble([[0.5]], [[2.0]], [1.0])

    assert ensemble.V.shape == (1, 3)
    assert list(ensemble.V[0]) == [2.0, 0.0, 0.0]
    assert ensemble.dim == 1


def test_weights_are_read_only():
    ensemble = create_ensemble([[0.5], [0.2]], [[1.0], [2.0]], [1.0, 1.0])

    with pytest.raises(ValueError):
        ensemble.weights[0] = 3.0


@pytest.mark.parametrize("weights", [[1.0, 0.0], [1.0, -1.0], [1.0]])
def test_invalid_weights_are_rejected(weights):
    with pytest.raises(ValueError):
        create_ensemble([[0.1], [0.2]], [[0.0], [0.0]], weights)


def test_empty_ensemble_is_rejected():
    with pytest.raises(ValueError):
        create_ensemble(np.zeros((0, 1)), np.zeros((0, 3)), [])


def test_wrap_is_idempotent():
    space = build_space(1, [(0.0, 2.0 * np.pi)], 8, 1, "periodic")
    X = np.random.default_rng(1).uniform(-20.0, 20.0, size=(100, 1))

    once = wrap_positions(space, X)

    assert np.array_equal(wrap_positions(space, once), once)
    assert np.all((once >= 0.0) & (once < 2.0 * np.pi))


def test_concatenate_joins_markers():
    a = create_ensemble([[0.1]], [[1.0]], [1.0])
    b = create_ensemble([[0.2], [0.3]], [[2.0], [3.0]], [2.0, 3.0])

    joined = concatenate(a, b)

    assert joined.n_particles == 3
    assert list(joined.weights) == [1.0, 2.0, 3.0]
