"""Surface coordinate charts for points on the octahedron.

A point is located by a quadruple (home face, shared face, x, y): the
home face is mapped isometrically onto the base triangle with corners
(0, 0), (1, 0) and (1/2, sqrt(3)/2) so that the edge shared with the
shared face lies on the unit base segment and the exterior side faces
the viewer.  Edge and vertex points admit several such quadruples; the
moves between them (shared-face rotation, home-face flip, the four
vertex charts) and a deterministic canonical form live here.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from . import topology as topo

SQRT3 = math.sqrt(3.0)
HALF_SQRT3 = SQRT3 / 2.0

#: Tolerance for triangle membership and for snapping points onto edges.
EPS_IN = 1e-9


class InvalidRepresentation(ValueError):
    """The quadruple does not describe a point of the surface."""


class NotOnSharedEdge(ValueError):
    """Home-face flips are only defined for points with y = 0."""


class FrameMismatch(ValueError):
    """The representation does not use the chart a frame prescribes."""


@dataclass(frozen=True)
class Representation:
    """Quadruple (home face, shared face, x, y) locating a surface point."""

    home: int
    shared: int
    x: float
    y: float

    def __post_init__(self):
        if self.home not in topo.FACE_INDICES:
            raise InvalidRepresentation(f"unknown face {self.home!r}")
        if self.shared not in topo.neighbors(self.home):
            raise InvalidRepresentation(f"F{self.shared} is not adjacent to F{self.home}")
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise InvalidRepresentation("coordinates must be finite")
        if (
            self.y < -EPS_IN
            or self.y > SQRT3 * self.x + EPS_IN
            or self.y > SQRT3 * (1.0 - self.x) + EPS_IN
        ):
            raise InvalidRepresentation(
                f"({self.x}, {self.y}) lies outside the face triangle"
            )


@dataclass(frozen=True)
class OrientedPoint:
    """Planar position inside an orientation; may leave the base triangle."""

    x: float
    y: float


@dataclass(frozen=True)
class SurfacePoint:
    """A surface point held in canonical form (see canonicalize)."""

    canonical: Representation

    def coincides(self, other: "SurfacePoint", tol: float = EPS_IN) -> bool:
        a, b = self.canonical, other.canonical
        return (
            a.home == b.home
            and a.shared == b.shared
            and abs(a.x - b.x) <= tol
            and abs(a.y - b.y) <= tol
        )


def barycentric(x: float, y: float) -> tuple[float, float, float]:
    """Barycentric weights of (x, y) against the chart corners (S, T, U)."""
    yy = y / SQRT3
    return 1.0 - x - yy, x - yy, 2.0 * yy


def rotate_once(r: Representation) -> Representation:
    """Re-express r with the next shared face counter-clockwise.

    The chart turns by 120 degrees about the face centroid while the
    point stays put: (x, y) becomes ((1 - x + sqrt(3) y) / 2,
    (sqrt(3) - sqrt(3) x - y) / 2).  Three applications restore the
    original quadruple.
    """
    u = (1.0 - r.x + SQRT3 * r.y) / 2.0
    v = (SQRT3 - SQRT3 * r.x - r.y) / 2.0
    return Representation(r.home, topo.next_shared_ccw(r.home, r.shared), u, v)


def rotate_shared_face(r: Representation, frame: topo.Frame) -> Representation:
    """Shared-face rotation in a frame's terms: role-2 chart to role-6 chart."""
    if r.home != frame.face(1) or r.shared != frame.face(2):
        raise FrameMismatch(
            f"expected home F{frame.face(1)} with shared F{frame.face(2)}, "
            f"got home F{r.home} with shared F{r.shared}"
        )
    out = rotate_once(r)
    assert out.shared == frame.face(6)
    return out


def rotate_to_shared(r: Representation, shared: int) -> Representation:
    """Rotate r's chart (0 to 2 times) until its shared face is `shared`."""
    out = r
    for _ in range(3):
        if out.shared == shared:
            return out
        out = rotate_once(out)
    raise ValueError(f"F{shared} is not adjacent to F{r.home}")


def flip_home_face(r: Representation) -> Representation:
    """Swap home and shared face for a point on the shared edge.

    (home, shared, x, 0) and (shared, home, 1 - x, 0) are the two charts
    of one edge point; the flip is an involution.
    """
    if abs(r.y) > EPS_IN:
        raise NotOnSharedEdge(f"y = {r.y} exceeds {EPS_IN}")
    x = min(1.0, max(0.0, r.x))
    return Representation(r.shared, r.home, 1.0 - x, 0.0)


def vertex_representations(v: topo.VertexLabel) -> list[Representation]:
    """The four charts of a vertex, ordered along its face cycle.

    Each chart places the vertex at the (0, 0) corner; the shared face of
    one chart is the home face of the next.  The cycle starts at the
    incident face with the smallest label.
    """
    if v not in topo.VERTICES:
        raise ValueError(f"{sorted(v)} is not a vertex")
    reps = []
    home = min(v)
    for _ in range(4):
        shared = next(
            s for s in topo.neighbors(home) if topo.chart_corners(home, s)[0] == v
        )
        reps.append(Representation(home, shared, 0.0, 0.0))
        home = shared
    assert home == min(v)
    return reps


def canonicalize(r: Representation) -> SurfacePoint:
    """Deterministic canonical form of a representation.

    Points within EPS_IN of an edge are snapped onto it and expressed
    with the smaller of the two incident faces as home; vertices use the
    lexicographically smallest (home, shared) chart.  Interior points
    keep their chart unchanged.
    """
    ls, lt, lu = barycentric(r.x, r.y)
    on_base = lu * HALF_SQRT3 <= EPS_IN  # edge shared with r.shared
    on_right = ls * HALF_SQRT3 <= EPS_IN  # edge shared with the next ccw neighbor
    on_left = lt * HALF_SQRT3 <= EPS_IN  # edge shared with the previous ccw neighbor

    corners = topo.chart_corners(r.home, r.shared)
    if (on_base + on_right + on_left) >= 2:  # a corner of the face
        if on_base and on_left:
            vertex = corners[0]
        elif on_base and on_right:
            vertex = corners[1]
        else:
            vertex = corners[2]
        best = min(vertex_representations(vertex), key=lambda q: (q.home, q.shared))
        return SurfacePoint(best)

    if on_base or on_right or on_left:  # on one edge only
        aligned = r
        if on_right:
            aligned = rotate_once(r)
        elif on_left:
            aligned = rotate_once(rotate_once(r))
        x = min(1.0, max(0.0, aligned.x))
        other = aligned.shared
        if aligned.home < other:
            return SurfacePoint(Representation(aligned.home, other, x, 0.0))
        return SurfacePoint(Representation(other, aligned.home, 1.0 - x, 0.0))

    return SurfacePoint(r)


def surface_point(home: int, shared: int, x: float, y: float) -> SurfacePoint:
    """Convenience constructor: validate and canonicalize a quadruple."""
    return canonicalize(Representation(home, shared, x, y))


def sample_uniform(seed: int, count: int) -> list[SurfacePoint]:
    """Deterministic pseudo-random points, uniform over the surface.

    The face is drawn uniformly from the eight faces and (x, y) uniformly
    over the base triangle by folding the unit square onto it.
    """
    if count < 0:
        raise ValueError("count must be non-negative")
    rng = random.Random(seed)
    points = []
    for _ in range(count):
        face = rng.randrange(1, 9)
        u = rng.random()
        v = rng.random()
        if u + v > 1.0:
            u, v = 1.0 - u, 1.0 - v
        x = u + 0.5 * v
        y = HALF_SQRT3 * v
        points.append(surface_point(face, min(topo.neighbors(face)), x, y))
    return points
