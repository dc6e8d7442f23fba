import math
from dataclasses import dataclass, replace
from typing import Optional, Tuple

variants = ("landau", "two_stream", "bump_on_tail", "diocotron")

Interval = Tuple[float, float]


@dataclass(frozen=True)
class ScenarioSpec:
    """Initial condition of one experiment; ``scenario_spec`` fills unset domains."""

    name: str
    n_particles: int
    alpha: float
    k: float = 0.5
    domain_x: Tuple[Interval, ...] = ()
    domain_v: Optional[Interval] = None
    l: int = 5
    r_minus: float = 5.0
    r_plus: float = 8.0
    eps: float = 0.1
    b_ext: Tuple[float, float, float] = (0.0, 0.0, 1.0)
    stratified: bool = False
    seed: int = 0

    @property
    def dim(self) -> int:
        return 2 if self.name == "diocotron" else 1

    @property
    def volume(self) -> float:
        return math.prod(b - a for a, b in self.domain_x)


defaults = {
    "landau": {
        "alpha": 0.001,
        "k": 0.5,
        "domain_v": (-6.0, 6.0),
        "n_particles": 200_000,
    },
    "two_stream": {
        "alpha": 0.01,
        "k": 0.5,
        "domain_v": (-5.0, 5.0),
        "n_particles": 200_000,
    },
    "bump_on_tail": {
        "alpha": 0.04,
        "k": 0.3,
        "domain_v": (-8.0, 8.0),
        "n_particles": 200_000,
    },
    "diocotron": {"alpha": 0.2, "domain_v": None, "n_particles": 1_000_000},
}

periods = {"landau": 1, "two_stream": 1, "bump_on_tail": 3}

diocotron_half_width = 12.0


def default_domain_x(name: str, k: float) -> Tuple[Interval, ...]:
    if name == "diocotron":
        half = diocotron_half_width

        return ((-half, half), (-half, half))

    if not k > 0:
        raise ValueError(f"k must be positive, got {k}")

    return ((0.0, periods[name] * 2.0 * math.pi / k),)


def validate(spec: ScenarioSpec) -> ScenarioSpec:
    if spec.name not in variants:
        raise ValueError(f"Unknown scenario {spec.name!r}, expected one of {variants}")

    if spec.n_particles < 1:
        raise ValueError(f"n_particles must be positive, got {spec.n_particles}")

    if spec.alpha < 0:
        raise ValueError(f"alpha must be non-negative, got {spec.alpha}")

    if spec.name == "diocotron":
        if not 0 < spec.r_minus < spec.r_plus:
            raise ValueError(
                f"Need 0 < r_minus < r_plus, got {spec.r_minus}, {spec.r_plus}"
            )

        if spec.l < 1:
            raise ValueError(f"Mode number l must be >= 1, got {spec.l}")

        if not spec.eps > 0:
            raise ValueError(f"eps must be positive, got {spec.eps}")

        if any(spec.r_plus > max(abs(a), abs(b)) for a, b in spec.domain_x):
            raise ValueError(f"Annulus radius {spec.r_plus} does not fit the domain")
    else:
        if not spec.k > 0:
            raise ValueError(f"k must be positive, got {spec.k}")

        if spec.alpha >= 1:
            raise ValueError(
                f"alpha must be below 1 for a positive density, got {spec.alpha}"
            )

        if spec.domain_v is None or spec.domain_v[0] >= spec.domain_v[1]:
            raise ValueError(f"Invalid velocity domain {spec.domain_v}")

    if len(spec.domain_x) != spec.dim or any(b <= a for a, b in spec.domain_x):
        raise ValueError(f"Invalid position domain {spec.domain_x}")

    return spec


def scenario_spec(name: str, **overrides) -> ScenarioSpec:
    """Scenario with its published defaults; keyword arguments override them."""
    if name not in variants:
        raise ValueError(f"Unknown scenario {name!r}, expected one of {variants}")

    values = {**defaults[name], **overrides}
    spec = ScenarioSpec(name=name, **values)

    if not spec.domain_x:
        spec = replace(spec, domain_x=default_domain_x(name, spec.k))

    return validate(spec)
