import math

import numpy as np
import pytest
from hampic.diagnostics import mode_amplitude
from hampic.particles import total_charge, total_momentum
from hampic.scenarios import (
    background_density,
    magnetic_field,
    sample,
    scenario_spec,
    total_mass,
    velocity_densities,
)
from scipy import integrate, stats

n_markers = 20_000


def four_sigma(std, n):
    return 4.0 * std / math.sqrt(n)


def test_unperturbed_positions_are_uniform():
    spec = scenario_spec("landau", alpha=0.0, n_particles=n_markers, seed=1)
    ensemble = sample(spec)
    length = spec.domain_x[0][1]

    statistic = stats.kstest(ensemble.X[:, 0] / length, "uniform").statistic

    assert statistic < 1.63 / math.sqrt(n_markers)


@pytest.mark.parametrize("alpha", [0.001, 0.3])
def test_density_contrast_matches_alpha(alpha):
    n = 50_000
    spec = scenario_spec("landau", alpha=alpha, n_particles=n, seed=2)
    x = sample(spec).X[:, 0]

    contrast = 2.0 * np.cos(spec.k * x)

    assert abs(contrast.mean() - alpha) < four_sigma(contrast.std(), n)


def test_landau_velocity_moments():
    ensemble = sample(scenario_spec("landau", n_particles=n_markers, seed=3))
    v = ensemble.V[:, 0]

    assert abs(v.mean()) < four_sigma(1.0, n_markers)
    assert abs((v**2).mean() - 1.0) < four_sigma(math.sqrt(2.0), n_markers)
    assert np.all(np.abs(v) < 6.0)
    assert np.all(ensemble.V[:, 1:] == 0.0)


def test_landau_weights_carry_the_domain_length():
    spec = scenario_spec("landau", n_particles=n_markers, seed=3)
    ensemble = sample(spec)

    assert total_charge(ensemble) == pytest.approx(total_mass(spec), rel=1e-10)
    assert total_charge(ensemble) == pytest.approx(4.0 * math.pi, rel=1e-8)
    assert background_density(spec, total_charge(ensemble)) == pytest.approx(
        total_charge(ensemble) / (4.0 * math.pi)
    )


def test_two_stream_velocities():
    ensemble = sample(scenario_spec("two_stream", n_particles=n_markers, seed=4))
    v = ensemble.V[:, 0]
    band, _ = integrate.quad(velocity_densities["two_stream"], -0.05, 0.05)

    assert abs(v.mean()) < four_sigma(math.sqrt(3.0), n_markers)
    assert abs((v**2).mean() - 3.0) < four_sigma(math.sqrt(6.0), n_markers)
    assert np.mean(np.abs(v) < 0.05) <= band + four_sigma(math.sqrt(band), n_markers)
    assert np.all(np.abs(v) < 5.0)


def test_bump_on_tail_mixture():
    ensemble = sample(scenario_spec("bump_on_tail", n_particles=n_markers, seed=5))
    v = ensemble.V[:, 0]
    density = velocity_densities["bump_on_tail"]

    mass, _ = integrate.quad(density, 3.0, 8.0)
    first, _ = integrate.quad(lambda u: u * density(u), 3.0, 8.0)
    tail = v[v > 3.0]

    assert tail.mean() == pytest.approx(
        first / mass, abs=four_sigma(tail.std(), tail.size)
    )
    total, _ = integrate.quad(density, -8.0, 8.0)
    fraction = mass / total
    assert abs(tail.size / n_markers - fraction) < four_sigma(
        math.sqrt(fraction), n_markers
    )


def test_diocotron_ring():
    spec = scenario_spec("diocotron", n_particles=n_markers, seed=6)
    ensemble = sample(spec)
    r = np.hypot(ensemble.X[:, 0], ensemble.X[:, 1])

    counts, edges = np.histogram(r, bins=12, range=(5.0, 8.0))
    peak = 0.5 * (edges[:-1] + edges[1:])[np.argmax(counts)]

    assert np.all((r >= 5.0) & (r <= 8.0))
    assert abs(peak - 6.5) <= 0.25
    assert mode_amplitude(ensemble, spec.l) == pytest.approx(
        spec.alpha, abs=four_sigma(1.0, n_markers)
    )
    assert total_charge(ensemble) == pytest.approx(total_mass(spec), rel=1e-10)
    assert background_density(spec, 1.0) == 0.0


def test_diocotron_uses_the_scaled_field():
    bspec = magnetic_field(scenario_spec("diocotron", eps=0.1))

    assert bspec.B == (0.0, 0.0, 1.0)
    assert bspec.scale_B == pytest.approx(100.0)


def test_same_seed_same_markers():
    spec = scenario_spec("two_stream", n_particles=1000, seed=9)

    first = sample(spec)
    second = sample(spec)

    assert np.array_equal(first.X, second.X)
    assert np.array_equal(first.V, second.V)


def test_markers_do_not_depend_on_the_thread_count():
    spec = scenario_spec("landau", n_particles=140_000, seed=10)

    single = sample(spec, threads=1)
    threaded = sample(spec, threads=3)

    assert np.array_equal(single.X, threaded.X)
    assert np.array_equal(single.V, threaded.V)


def test_stratified_positions_fill_every_stratum():
    n = 4096
    spec = scenario_spec("landau", alpha=0.0, n_particles=n, stratified=True, seed=11)
    x = np.sort(sample(spec).X[:, 0]) / spec.domain_x[0][1]

    strata = np.floor(x * n).astype(int)

    assert np.array_equal(strata, np.arange(n))


def test_two_stream_starts_with_no_net_momentum():
    ensemble = sample(scenario_spec("two_stream", n_particles=n_markers, seed=12))

    momentum = total_momentum(ensemble)[0] / total_charge(ensemble)

    assert abs(momentum) <= four_sigma(math.sqrt(3.0), n_markers)


def test_stratified_velocities_are_the_quantile_grid():
    n = 4096
    spec = scenario_spec("landau", n_particles=n, stratified=True, seed=13)
    v = np.sort(sample(spec).V[:, 0])

    expected = stats.truncnorm.ppf((np.arange(n) + 0.5) / n, -6.0, 6.0)

    np.testing.assert_allclose(v, expected, atol=1e-4)


def test_stratified_velocities_do_not_depend_on_the_seed():
    first = sample(scenario_spec("two_stream", n_particles=3000, stratified=True))
    second = sample(
        scenario_spec("two_stream", n_particles=3000, stratified=True, seed=99)
    )

    assert np.array_equal(first.V, second.V)
    assert not np.array_equal(first.X, second.X)


def test_quiet_start_resolves_a_small_perturbation():
    n = 4096
    spec = scenario_spec("landau", alpha=0.001, n_particles=n, stratified=True)
    x = sample(spec).X[:, 0]

    contrast = 2.0 * np.mean(np.cos(spec.k * x))

    assert contrast == pytest.approx(0.001, abs=1e-4)
