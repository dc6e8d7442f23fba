import numpy as np
import pytest
from hampic.bracket import (
    build_poisson_matrix,
    constant_field,
    discrete_bracket,
    hat_matrix,
    pack_phase,
    unpack_phase,
)
from hampic.particles import create_ensemble


def two_particles(weights=(1.0, 3.0)):
    rng = np.random.default_rng(0)

    return create_ensemble(
        rng.uniform(size=(2, 3)), rng.standard_normal((2, 3)), list(weights)
    )


def test_hat_matrix_of_zero_and_of_z():
    assert np.array_equal(hat_matrix((0.0, 0.0, 0.0)), np.zeros((3, 3)))
    assert np.array_equal(
        hat_matrix((0.0, 0.0, 1.0)),
        np.array([[0.0, 1.0, 0.0], [-1.0, 0.0, 0.0], [0.0, 0.0, 0.0]]),
    )


def test_hat_matrix_is_the_cross_product():
    rng = np.random.default_rng(1)

    for _ in range(20):
        B = rng.standard_normal(3)
        v = rng.standard_normal(3)

        np.testing.assert_allclose(hat_matrix(B) @ v, np.cross(v, B), atol=1e-15)


def test_no_field_and_unit_weights_give_the_canonical_matrix():
    ensemble = two_particles(weights=(1.0, 1.0))

    K = build_poisson_matrix(ensemble, constant_field((0.0, 0.0, 0.0))).K

    eye = np.eye(6)
    zero = np.zeros((6, 6))
    assert np.array_equal(K, np.block([[zero, eye], [-eye, zero]]))


def test_single_particle_weight_scales_the_coupling():
    ensemble = create_ensemble([[0.1, 0.2, 0.3]], [[0.0, 0.0, 0.0]], [2.0])

    K = build_poisson_matrix(ensemble, constant_field()).K

    np.testing.assert_allclose(K[:3, 3:], np.eye(3) / 2.0)


def test_rotation_block_is_divided_by_each_weight():
    K = build_poisson_matrix(two_particles(), constant_field()).K
    hat = hat_matrix((0.0, 0.0, 1.0))

    np.testing.assert_allclose(K[6:9, 6:9], hat / 1.0)
    np.testing.assert_allclose(K[9:12, 9:12], hat / 3.0)
    np.testing.assert_allclose(K[6:9, 9:12], 0.0)


def test_matrix_is_antisymmetric():
    K = build_poisson_matrix(
        two_particles(), lambda x: np.array([x[1], -x[0], 0.3])
    ).K

    assert np.max(np.abs(K + K.T)) <= 1e-15


def test_bracket_pairs_position_with_velocity():
    ensemble = two_particles(weights=(0.25, 3.0))
    K = build_poisson_matrix(ensemble, constant_field())
    x_first = np.eye(12)[0]
    v_first = np.eye(12)[6]
    x_second = np.eye(12)[4]

    assert discrete_bracket(x_first, v_first, K) == pytest.approx(4.0)
    assert discrete_bracket(x_first, x_second, K) == 0.0


def test_bracket_is_antisymmetric_and_bilinear():
    K = build_poisson_matrix(two_particles(), constant_field())
    rng = np.random.default_rng(2)
    f, g, h = rng.standard_normal((3, 12))

    assert discrete_bracket(f, f, K) == pytest.approx(0.0, abs=1e-13)
    assert discrete_bracket(f, g, K) == pytest.approx(-discrete_bracket(g, f, K))
    assert discrete_bracket(2.0 * f + h, g, K) == pytest.approx(
        2.0 * discrete_bracket(f, g, K) + discrete_bracket(h, g, K), abs=1e-13
    )


def test_gradient_length_must_match():
    K = build_poisson_matrix(two_particles(), constant_field())

    with pytest.raises(ValueError):
        discrete_bracket(np.ones(6), np.ones(12), K)


def test_phase_vector_packs_positions_then_velocities():
    ensemble = two_particles()
    z = pack_phase(ensemble, dim=2)
    X, V = unpack_phase(z, 2, dim=2)

    assert z.shape == (8,)
    assert np.array_equal(X, ensemble.X[:, :2])
    assert np.array_equal(V, ensemble.V[:, :2])
