import pytest
from hampic.commands import verify


@pytest.mark.parametrize("field", ["constant", "divfree", "divful"])
@pytest.mark.parametrize("n_particles", [1, 2])
def test_bracket_checks_pass(field, n_particles):
    check = verify.verify_bracket(n_particles=n_particles, field=field, seed=3)

    assert check.passed
    assert check.max_zero_expected <= verify.zero_tolerance
    assert len(check.rows) > 0


def test_divergence_is_only_checked_when_present():
    assert verify.verify_bracket(field="constant").max_div_error is None
    assert verify.verify_bracket(field="divful").max_div_error <= verify.div_tolerance


def test_particle_count_is_limited():
    with pytest.raises(ValueError):
        verify.verify_bracket(n_particles=verify.max_particles + 1)


def test_unknown_field():
    with pytest.raises(ValueError):
        verify.verify_bracket(field="dipole")


def test_random_ensemble_is_seeded():
    first = verify.random_ensemble(3, seed=1)
    second = verify.random_ensemble(3, seed=1)

    assert (first.X == second.X).all()
    assert first.X.shape == (3, 3)
    assert ((first.weights >= 0.5) & (first.weights <= 1.5)).all()
