import numpy as np
from hampic.fem import assemble_stiffness, basis_integrals, build_space


def test_periodic_linear_stiffness_entries():
    space = build_space(1, [(0.0, 1.0)], 8, 1, "periodic")
    M = assemble_stiffness(space).matrix.toarray()
    h = space.h[0]

    np.testing.assert_allclose(np.diag(M), 2.0 / h)
    np.testing.assert_allclose(np.diag(M, 1), -1.0 / h)
    np.testing.assert_allclose([M[0, -1], M[-1, 0]], -1.0 / h)
    assert np.count_nonzero(M) == 3 * 8


def test_stiffness_is_bit_exactly_symmetric():
    for space in (
        build_space(1, [(0.0, 3.0)], 7, 2, "periodic"),
        build_space(2, [(-1.0, 1.0), (0.0, 3.0)], (5, 9), 1, "dirichlet"),
        build_space(2, [(0.0, 1.0), (0.0, 1.0)], 4, 2, "periodic"),
    ):
        M = assemble_stiffness(space).matrix

        assert (M != M.T).nnz == 0


def test_periodic_rows_sum_to_zero():
    space = build_space(2, [(0.0, 2.0), (0.0, 1.0)], (6, 10), 1, "periodic")
    M = assemble_stiffness(space).matrix

    assert np.max(np.abs(M @ np.ones(space.n_dofs))) <= 1e-12 / min(space.h)


def test_stiffness_is_positive_semidefinite():
    space = build_space(2, [(0.0, 1.0), (0.0, 1.0)], 6, 1, "periodic")
    M = assemble_stiffness(space).matrix
    rng = np.random.default_rng(3)

    for _ in range(100):
        v = rng.standard_normal(space.n_dofs)

        assert v @ (M @ v) >= -1e-12 * (v @ v)


def test_dirichlet_stiffness_is_positive_definite():
    space = build_space(1, [(0.0, 1.0)], 6, 2, "dirichlet")
    M = assemble_stiffness(space).matrix.toarray()

    assert np.min(np.linalg.eigvalsh(M)) > 0.0


def test_two_dimensional_matrix_is_the_tensor_product_formula():
    space = build_space(2, [(0.0, 1.0), (0.0, 2.0)], (3, 4), 1, "periodic")
    M = assemble_stiffness(space).matrix.toarray()
    hx, hy = space.h

    def line(n, h):
        eye = np.eye(n)
        neighbours = np.roll(eye, 1, axis=1) + np.roll(eye, -1, axis=1)

        return (2.0 * eye - neighbours) / h, (4.0 * eye + neighbours) * h / 6.0

    kx, mx = line(3, hx)
    ky, my = line(4, hy)

    np.testing.assert_allclose(M, np.kron(kx, my) + np.kron(mx, ky), atol=1e-14)


def test_basis_integrals_add_up_to_the_domain_volume():
    linear = build_space(2, [(0.0, 2.0), (0.0, 3.0)], (4, 5), 1, "periodic")
    quadratic = build_space(2, [(0.0, 2.0), (0.0, 3.0)], (4, 5), 2, "periodic")

    np.testing.assert_allclose(basis_integrals(linear), 0.5 * 0.6)
    np.testing.assert_allclose(basis_integrals(quadratic).sum(), 6.0)


def test_dirichlet_basis_integrals_skip_the_boundary():
    space = build_space(1, [(0.0, 1.0)], 4, 1, "dirichlet")

    np.testing.assert_allclose(basis_integrals(space), [0.25, 0.25, 0.25])
