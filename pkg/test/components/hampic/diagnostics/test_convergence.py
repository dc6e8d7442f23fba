import numpy as np
import pytest
from hampic.diagnostics import (
    convergence_orders,
    fitted_order,
    phase_space_rms_error,
)
from hampic.particles import create_ensemble, with_phase


def test_second_order_errors():
    dts = [0.1, 0.05, 0.025]
    errors = [3.0 * dt**2 for dt in dts]

    assert convergence_orders(dts, errors) == pytest.approx([2.0, 2.0])
    assert fitted_order(dts, errors) == pytest.approx(2.0)


def test_lengths_must_match():
    with pytest.raises(ValueError):
        convergence_orders([0.1, 0.05], [1.0])


def test_periodic_position_error_wraps(periodic_line):
    length = periodic_line.upper[0]
    a = create_ensemble([[0.05], [1.0]], np.zeros((2, 1)), [1.0, 1.0])
    b = with_phase(a, X=np.array([[length - 0.05], [1.1]]))

    position, velocity = phase_space_rms_error(a, b, periodic_line)

    assert position == pytest.approx(0.1)
    assert velocity == 0.0


def test_velocity_error(dirichlet_square, square_ensemble):
    shifted = with_phase(square_ensemble, V=square_ensemble.V + [0.0, 0.3, 0.4])

    position, velocity = phase_space_rms_error(
        square_ensemble, shifted, dirichlet_square
    )

    assert position == 0.0
    assert velocity == pytest.approx(0.5)
