import pytest
from hampic.fem import build_space
from hampic.integrators import field_model
from hampic.particles import total_charge, with_phase, wrap_positions
from hampic.scenarios import background_density, sample, scenario_spec


@pytest.fixture
def landau_setup():
    """A 1000 marker Landau state on 32 linear elements."""
    spec = scenario_spec("landau", n_particles=1000, seed=3)
    space = build_space(1, spec.domain_x, 32, 1, "periodic")
    ensemble = sample(spec)
    ensemble = with_phase(ensemble, X=wrap_positions(space, ensemble.X))
    model = field_model(space, rho0=background_density(spec, total_charge(ensemble)))

    return ensemble, model
