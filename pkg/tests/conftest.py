import math

import pytest
from hypothesis import HealthCheck, settings

from octadist.coords import Representation, canonicalize

settings.register_profile(
    "suite",
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")

SQRT3 = math.sqrt(3.0)


def triangle_point(u: float, v: float, margin: float = 1e-6) -> tuple[float, float]:
    """Map (u, v) in [0, 1]^2 to a point of the base triangle.

    `margin` keeps a barycentric distance from the boundary so tests that
    need strictly interior points never trip the edge snapping.
    """
    if u + v > 1.0:
        u, v = 1.0 - u, 1.0 - v
    span = 1.0 - 3.0 * margin
    ls = margin + span * (1.0 - u - v)
    lt = margin + span * u
    lu = margin + span * v
    x = lt + 0.5 * lu
    y = (SQRT3 / 2.0) * lu
    return x, y


def interior_rep(home: int, shared: int, u: float, v: float) -> Representation:
    x, y = triangle_point(u, v)
    return Representation(home, shared, x, y)


@pytest.fixture(scope="session")
def witness_points():
    from octadist.landscape import VALIDITY_WITNESSES

    return {
        idx: (canonicalize(r1), canonicalize(r2))
        for idx, (r1, r2) in VALIDITY_WITNESSES.items()
    }
