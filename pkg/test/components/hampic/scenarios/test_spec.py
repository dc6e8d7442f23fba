import math

import pytest
from hampic.scenarios import scenario_spec


def test_landau_defaults():
    spec = scenario_spec("landau")

    assert spec.alpha == 0.001
    assert spec.k == 0.5
    assert spec.domain_x == ((0.0, 4.0 * math.pi),)
    assert spec.domain_v == (-6.0, 6.0)
    assert spec.dim == 1


def test_bump_on_tail_spans_three_periods():
    spec = scenario_spec("bump_on_tail")

    assert spec.domain_x[0][1] == pytest.approx(6.0 * math.pi / 0.3)
    assert spec.domain_v == (-8.0, 8.0)


def test_diocotron_defaults():
    spec = scenario_spec("diocotron")

    assert spec.dim == 2
    assert spec.domain_x == ((-12.0, 12.0), (-12.0, 12.0))
    assert (spec.alpha, spec.l, spec.r_minus, spec.r_plus) == (0.2, 5, 5.0, 8.0)
    assert spec.b_ext == (0.0, 0.0, 1.0)


@pytest.mark.parametrize(
    "name, overrides",
    [
        ("landau", {"k": 0.0}),
        ("landau", {"alpha": -0.1}),
        ("two_stream", {"alpha": 1.5}),
        ("diocotron", {"r_minus": 9.0}),
        ("diocotron", {"l": 0}),
        ("diocotron", {"eps": 0.0}),
        ("diocotron", {"r_plus": 20.0}),
        ("maxwellian", {}),
    ],
)
def test_invalid_scenarios_are_rejected(name, overrides):
    with pytest.raises(ValueError):
        scenario_spec(name, **overrides)
