import math
import random

import pytest

from ruledkit import BezierPath2, affine, parse_field
from ruledkit.liftfield import AffineField

PI = math.pi


@pytest.fixture(scope="session")
def example_net() -> BezierPath2:
    """Degree-6 closed C1 net used throughout the golden tests."""
    return BezierPath2((
        (PI / 8, PI / 4), (PI / 8, 3 * PI / 8), (3 * PI / 8, 3 * PI / 8),
        (3 * PI / 8, PI / 4), (3 * PI / 8, PI / 8), (PI / 8, PI / 8),
        (PI / 8, PI / 4),
    ))


@pytest.fixture(scope="session")
def example_field():
    return parse_field("u - v, u + v")


def random_net(rng: random.Random, degree: int | None = None,
               closed: bool = False) -> BezierPath2:
    """Control points kept away from the chart poles and from tiny speeds."""
    n = degree if degree is not None else rng.randint(3, 6)
    pts = [(rng.uniform(0.2, 2.9), rng.uniform(0.5, 2.6)) for _ in range(n + 1)]
    if closed:
        pts[-1] = pts[0]
    return BezierPath2(tuple(pts))


def random_affine_field(rng: random.Random) -> AffineField:
    return affine(*(rng.uniform(-1.0, 1.0) for _ in range(6)))


def regular_configuration(rng: random.Random, kappa_floor: float = 0.05):
    """(net, field, t) draw with the frame well defined at t."""
    from ruledkit.invariants import kappa_at
    while True:
        net = random_net(rng)
        t = rng.uniform(0.05, 0.95)
        if kappa_at(net, t) > kappa_floor:
            return net, random_affine_field(rng), t


def assert_oracle_agreement(analytic, oracle, rel: float = 1e-4) -> None:
    """Analytic invariants vs the differencing oracle, 1e-4 relative.

    The oracle's second central difference carries ~eps/h^2 = 1e-6
    absolute noise per component, amplified by 1/kappa^2 inside the
    torsion quotient, hence the per-quantity absolute floors.
    """
    k = max(analytic.kappa, 1e-2)
    second_floor = 2e-5 / (k * k)
    for name, floor in (("kappa", 1e-6), ("kappa_bar", 1e-6), ("delta", 1e-6),
                        ("tau", second_floor), ("tau_bar", second_floor)):
        a, o = getattr(analytic, name), getattr(oracle, name)
        assert abs(a - o) <= rel * max(abs(a), abs(o)) + floor, (
            f"{name}: analytic {a!r} vs oracle {o!r}")
