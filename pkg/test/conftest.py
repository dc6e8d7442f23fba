import numpy as np
import pytest
from hampic.fem import build_space
from hampic.particles import create_ensemble


def pytest_addoption(parser):
    parser.addoption(
        "--run-slow",
        action="store_true",
        default=False,
        help="Run the long acceptance simulations.",
    )


def pytest_collection_modifyitems(config, items):
    if config.getoption("--run-slow"):
        return

    skip_slow = pytest.mark.skip(reason="needs --run-slow")

    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture
def periodic_line():
    """[0, 4 pi) with 32 linear elements."""
    return build_space(1, [(0.0, 4.0 * np.pi)], 32, 1, "periodic")


@pytest.fixture
def dirichlet_square():
    return build_space(2, [(-1.0, 1.0), (-1.0, 1.0)], 16, 1, "dirichlet")


@pytest.fixture
def line_ensemble(periodic_line):
    """Seeded markers with uniform weights inside the periodic line."""
    rng = np.random.default_rng(7)
    n = 1000
    X = rng.uniform(0.0, periodic_line.upper[0], size=(n, 1))
    V = rng.standard_normal((n, 3))

    return create_ensemble(X, V, np.full(n, periodic_line.volume / n))


@pytest.fixture
def square_ensemble():
    rng = np.random.default_rng(11)
    n = 500
    X = rng.uniform(-0.8, 0.8, size=(n, 2))
    V = rng.standard_normal((n, 3))

    return create_ensemble(X, V, rng.uniform(0.5, 1.5, size=n) / n)
