"""Independent ground truth for the landscape formulas.

Everything here deliberately avoids the closed forms and the planar
chart algebra of the landscape module: the octahedron is embedded in 3D,
face chains are flattened by composing hinge rotations in space, and an
exhaustive search over all simple dual paths yields the geodesic
distance.  A lattice-graph shortest path supplies a one-sided upper
bound.  `compare` bundles the checks the validation sweep runs per pair.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import dijkstra

from . import topology as topo
from .coords import EPS_IN, Representation, SurfacePoint, barycentric
from .landscape import surface_distance

_HALF_DIAG = 1.0 / math.sqrt(2.0)


class InvalidEmbedding(AssertionError):
    """The derived vertex coordinates failed a self-check."""


def _chirality_ok(coords: dict[topo.VertexLabel, np.ndarray]) -> bool:
    # every face's stored corner order must be counter-clockwise from outside
    for face in topo.FACE_INDICES:
        a, b, c = (coords[v] for v in topo.face_vertices(face))
        normal = np.cross(b - a, c - a)
        centroid = (a + b + c) / 3.0
        if float(np.dot(normal, centroid)) <= 0.0:
            return False
    return True


def _derive_vertex_coords() -> dict[topo.VertexLabel, np.ndarray]:
    """Place the six vertices on the coordinate axes and fix chirality.

    Vertices sharing no face are antipodal; the three antipodal pairs go
    on the three axes at distance 1/sqrt(2), and the sign of the last
    pair is chosen so that every face's corner order reads
    counter-clockwise from outside.  The result is validated, not
    assumed.
    """
    ordered = sorted(topo.VERTICES, key=sorted)
    remaining = list(ordered)
    pairs = []
    while remaining:
        v = remaining.pop(0)
        (partner,) = [w for w in remaining if not (v & w)]
        remaining.remove(partner)
        pairs.append((v, partner))
    axes = (np.array([0.0, 0.0, 1.0]), np.array([1.0, 0.0, 0.0]), np.array([0.0, 1.0, 0.0]))
    for last_sign in (1.0, -1.0):
        signs = (1.0, 1.0, last_sign)
        coords = {}
        for (v, w), axis, sign in zip(pairs, axes, signs):
            coords[v] = sign * _HALF_DIAG * axis
            coords[w] = -sign * _HALF_DIAG * axis
        if _chirality_ok(coords):
            _validate_embedding(coords)
            return coords
    raise InvalidEmbedding("no chirality-consistent axis assignment exists")


def _validate_embedding(coords: dict[topo.VertexLabel, np.ndarray]) -> None:
    for i, v in enumerate(topo.VERTICES):
        for w in topo.VERTICES[i + 1 :]:
            d = float(np.linalg.norm(coords[v] - coords[w]))
            expect = 1.0 if (v & w) else math.sqrt(2.0)
            if abs(d - expect) > 1e-12:
                raise InvalidEmbedding(f"|{sorted(v)} - {sorted(w)}| = {d}, expected {expect}")
    for a in topo.FACE_INDICES:
        derived = {b for b in topo.FACE_INDICES if b != a and len(
            set(topo.face_vertices(a)) & set(topo.face_vertices(b))) == 2}
        if derived != set(topo.neighbors(a)):
            raise InvalidEmbedding(f"adjacency mismatch at F{a}")


#: 3D coordinates of the six vertices (unit edge length).
VERTEX_COORDS: dict[topo.VertexLabel, np.ndarray] = _derive_vertex_coords()


def face_normal(face: int) -> np.ndarray:
    """Unit outward normal (the solid is centered at the origin)."""
    a, b, c = (VERTEX_COORDS[v] for v in topo.face_vertices(face))
    n = (a + b + c) / 3.0
    return n / np.linalg.norm(n)


def embed_3d(rep: Representation) -> np.ndarray:
    """3D position of a represented point (barycentric over its chart)."""
    s, t, u = topo.chart_corners(rep.home, rep.shared)
    ls, lt, lu = barycentric(rep.x, rep.y)
    return ls * VERTEX_COORDS[s] + lt * VERTEX_COORDS[t] + lu * VERTEX_COORDS[u]


def _rodrigues(axis: np.ndarray, angle: float) -> np.ndarray:
    x, y, z = axis
    k = np.array([[0.0, -z, y], [z, 0.0, -x], [-y, x, 0.0]])
    return np.eye(3) + math.sin(angle) * k + (1.0 - math.cos(angle)) * (k @ k)


@dataclass(frozen=True)
class UnfoldChain:
    """A dual path flattened into the plane of its first face.

    `triangles` holds each face's corner positions keyed by vertex label,
    `hinges` the interior shared edges as ((S, T), 2D S, 2D T) in path
    order, and `tail_matrix`/`tail_offset` the rigid map that carries 3D
    points of the last face into the flattening plane.
    """

    faces: tuple[int, ...]
    triangles: tuple[dict, ...]
    hinges: tuple[tuple, ...]
    origin: np.ndarray
    ex: np.ndarray
    ey: np.ndarray
    tail_matrix: np.ndarray
    tail_offset: np.ndarray

    def project(self, point3: np.ndarray) -> tuple[float, float]:
        rel = point3 - self.origin
        return float(rel @ self.ex), float(rel @ self.ey)

    def project_tail(self, point3: np.ndarray) -> tuple[float, float]:
        return self.project(self.tail_matrix @ point3 + self.tail_offset)


@lru_cache(maxsize=None)
def flatten_chain(faces: tuple[int, ...]) -> UnfoldChain:
    """Flatten a simple dual path by composing hinge rotations in 3D."""
    first = faces[0]
    n0 = face_normal(first)
    s0, t0, _ = topo.chart_corners(first, faces[1])
    origin = VERTEX_COORDS[s0]
    ex = VERTEX_COORDS[t0] - origin
    ex = ex / np.linalg.norm(ex)
    ey = np.cross(n0, ex)

    def project(p):
        rel = p - origin
        return float(rel @ ex), float(rel @ ey)

    matrix = np.eye(3)
    offset = np.zeros(3)
    triangles = [{v: project(VERTEX_COORDS[v]) for v in topo.face_vertices(first)}]
    hinges = []
    for prev, cur in zip(faces, faces[1:]):
        edge = topo.shared_edge(prev, cur)
        pa = matrix @ VERTEX_COORDS[edge[0]] + offset
        pb = matrix @ VERTEX_COORDS[edge[1]] + offset
        hinges.append((edge, project(pa), project(pb)))
        axis = pb - pa
        axis = axis / np.linalg.norm(axis)
        m = matrix @ face_normal(cur)
        angle = math.atan2(float(axis @ np.cross(m, n0)), float(m @ n0))
        rot = _rodrigues(axis, angle)
        matrix = rot @ matrix
        offset = rot @ (offset - pa) + pa
        triangles.append(
            {v: project(matrix @ VERTEX_COORDS[v] + offset) for v in topo.face_vertices(cur)}
        )
    return UnfoldChain(
        faces=faces,
        triangles=tuple(triangles),
        hinges=tuple(hinges),
        origin=origin,
        ex=ex,
        ey=ey,
        tail_matrix=matrix,
        tail_offset=offset,
    )


def _point_in_triangle(p, tri, tol: float) -> bool:
    (ax, ay), (bx, by), (cx, cy) = tri
    d1 = (bx - ax) * (p[1] - ay) - (by - ay) * (p[0] - ax)
    d2 = (cx - bx) * (p[1] - by) - (cy - by) * (p[0] - bx)
    d3 = (ax - cx) * (p[1] - cy) - (ay - cy) * (p[0] - cx)
    return min(d1, d2, d3) >= -tol


def _chord_in_chain(chain: UnfoldChain, a, b, tol: float = EPS_IN):
    """Crossing parameters of the chord with the hinge edges, or None.

    Contained means: every hinge is met within its segment, in path
    order.  Implemented independently of the landscape module's
    intersection routine.
    """
    dx, dy = b[0] - a[0], b[1] - a[1]
    chord_len = math.hypot(dx, dy)
    params = []
    prev_t = -tol
    for _edge, ps, pt in chain.hinges:
        ex, ey = pt[0] - ps[0], pt[1] - ps[1]
        if chord_len < 1e-12:
            ee = ex * ex + ey * ey
            s = ((a[0] - ps[0]) * ex + (a[1] - ps[1]) * ey) / ee
            s = min(1.0, max(0.0, s))
            if math.hypot(a[0] - ps[0] - s * ex, a[1] - ps[1] - s * ey) > tol:
                return None
            params.append((s, 0.0))
            continue
        denom = dx * ey - dy * ex
        fx, fy = ps[0] - a[0], ps[1] - a[1]
        if abs(denom) < 1e-14:
            elen = math.hypot(ex, ey)
            if abs(fx * ey - fy * ex) / elen > tol:
                return None
            ee = ex * ex + ey * ey
            sa = (-fx * ex - fy * ey) / ee
            sb = ((b[0] - ps[0]) * ex + (b[1] - ps[1]) * ey) / ee
            lo, hi = max(min(sa, sb), 0.0), min(max(sa, sb), 1.0)
            if lo > hi + tol:
                return None
            params.append(((lo + hi) / 2.0, 0.5))
            continue
        t = (fx * ey - fy * ex) / denom
        s = (fx * dy - fy * dx) / denom
        if not (-tol <= s <= 1.0 + tol) or not (-tol <= t <= 1.0 + tol):
            return None
        if t < prev_t - tol:
            return None
        prev_t = max(prev_t, t)
        params.append((s, t))
    return params


def _sampled_containment(chain: UnfoldChain, a, b, samples: int = 16) -> bool:
    # cross-check: interior chord samples must land in some triangle
    tris = [tuple(tri.values()) for tri in chain.triangles]
    for i in range(1, samples + 1):
        t = i / (samples + 1.0)
        p = (a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1]))
        if not any(_point_in_triangle(p, tri, 1e-7) for tri in tris):
            return False
    return True


def _endpoint_positions(chain: UnfoldChain, ra: Representation, rb: Representation):
    return chain.project(embed_3d(ra)), chain.project_tail(embed_3d(rb))


def best_chord(
    a: SurfacePoint,
    b: SurfacePoint,
    min_faces: int = 2,
    max_faces: int = 8,
    check_samples: bool = True,
) -> float:
    """Shortest contained chord over simple dual paths of bounded length.

    Returns inf when no chain of the requested lengths contains the
    chord.  With the default bounds this is the geodesic distance for
    points on distinct faces.
    """
    ra, rb = a.canonical, b.canonical
    if ra.home == rb.home:
        raise ValueError("best_chord needs distinct home faces")
    best = math.inf
    best_pair = None
    for path in topo.enumerate_dual_paths(ra.home, rb.home, max_faces):
        if len(path) < min_faces:
            continue
        chain = flatten_chain(path)
        pa, pb = _endpoint_positions(chain, ra, rb)
        if _chord_in_chain(chain, pa, pb) is None:
            continue
        length = math.hypot(pb[0] - pa[0], pb[1] - pa[1])
        if length < best:
            best = length
            best_pair = (chain, pa, pb)
    if check_samples and best_pair is not None:
        chain, pa, pb = best_pair
        if not _sampled_containment(chain, pa, pb):
            raise AssertionError(
                f"sampled containment check failed on {best_pair[0].faces}"
            )
    return best


def unfold_geodesic(a: SurfacePoint, b: SurfacePoint, max_faces: int = 8) -> float:
    """Exhaustive unfolding geodesic; the reference the formulas are held to.

    Same-face pairs reduce to the 3D chord (the face is flat); otherwise
    every simple dual path with at most max_faces faces is flattened and
    the shortest contained chord wins.
    """
    if max_faces < 2:
        raise ValueError("max_faces must be at least 2")
    ra, rb = a.canonical, b.canonical
    if ra.home == rb.home:
        return float(np.linalg.norm(embed_3d(ra) - embed_3d(rb)))
    return best_chord(a, b, 2, max_faces)


# ---------------------------------------------------------------------------
# lattice-graph upper bound


@lru_cache(maxsize=None)
def _mesh_graph(subdivisions: int):
    """Shared lattice graph: nodes on every face, unit edges split n-fold."""
    n = subdivisions
    key_of = {}
    coords = []
    face_nodes = {}
    rows, cols, weights = [], [], []

    def node_id(point: np.ndarray) -> int:
        key = tuple(np.round(point * 1e9).astype(np.int64))
        idx = key_of.get(key)
        if idx is None:
            idx = len(coords)
            key_of[key] = idx
            coords.append(point)
        return idx

    for face in topo.FACE_INDICES:
        pa, pb, pc = (VERTEX_COORDS[v] for v in topo.face_vertices(face))
        grid = {}
        for i in range(n + 1):
            for j in range(n + 1 - i):
                k = n - i - j
                point = (i * pa + j * pb + k * pc) / n
                grid[(i, j)] = node_id(point)
        face_nodes[face] = sorted(set(grid.values()))
        for (i, j), idx in grid.items():
            for di, dj in ((1, 0), (0, 1), (1, -1)):
                neighbor = grid.get((i + di, j + dj))
                if neighbor is not None:
                    rows.append(idx)
                    cols.append(neighbor)
                    weights.append(1.0 / n)
    points = np.array(coords)
    return points, face_nodes, np.array(rows), np.array(cols), np.array(weights)


def mesh_upper_bound(a: SurfacePoint, b: SurfacePoint, subdivisions: int) -> float:
    """Shortest path in the face-lattice graph; always >= the geodesic.

    Every graph hop is a straight segment inside a single face, so any
    graph path is a valid surface path.  The endpoints connect to every
    lattice node of their home faces.
    """
    if subdivisions < 1:
        raise ValueError("subdivisions must be at least 1")
    ra, rb = a.canonical, b.canonical
    pa, pb = embed_3d(ra), embed_3d(rb)
    direct = float(np.linalg.norm(pa - pb)) if ra.home == rb.home else math.inf

    points, face_nodes, rows, cols, weights = _mesh_graph(subdivisions)
    n_nodes = len(points)
    src_ids = np.array(face_nodes[ra.home])
    dst_ids = np.array(face_nodes[rb.home])
    src_w = np.linalg.norm(points[src_ids] - pa, axis=1)
    dst_w = np.linalg.norm(points[dst_ids] - pb, axis=1)

    graph = csr_matrix(
        (
            np.concatenate([weights, src_w]),
            (
                np.concatenate([rows, np.full(len(src_ids), n_nodes)]),
                np.concatenate([cols, src_ids]),
            ),
        ),
        shape=(n_nodes + 1, n_nodes + 1),
    )
    dist = dijkstra(graph, directed=False, indices=n_nodes)
    return float(min(direct, np.min(dist[dst_ids] + dst_w)))


# ---------------------------------------------------------------------------
# per-pair comparison record


@dataclass(frozen=True)
class CompareReport:
    """One pair's distance, the independent references, and pass flags."""

    distance: float
    oracle: float
    chord: float
    mesh: float | None
    argmin: tuple[int, ...]
    fallback: bool
    distance_ok: bool
    chord_ok: bool
    mesh_ok: bool | None

    @property
    def passed(self) -> bool:
        flags = [self.distance_ok, self.chord_ok]
        if self.mesh_ok is not None:
            flags.append(self.mesh_ok)
        return all(flags)

    def to_dict(self) -> dict:
        return {
            "distance": self.distance,
            "oracle": self.oracle,
            "chord": self.chord,
            "mesh": self.mesh,
            "argmin": [f"L{i}" for i in self.argmin],
            "fallback": self.fallback,
            "distance_ok": self.distance_ok,
            "chord_ok": self.chord_ok,
            "mesh_ok": self.mesh_ok,
            "passed": self.passed,
        }


def compare(
    a: SurfacePoint,
    b: SurfacePoint,
    tolerance: float = 1e-9,
    max_faces: int = 8,
    subdivisions: int = 0,
) -> CompareReport:
    """Check one pair: formula vs unfolding, chord and mesh brackets.

    subdivisions = 0 skips the mesh bound (it is by far the slowest
    reference and one-sided anyway).
    """
    result = surface_distance(a, b)
    oracle_value = unfold_geodesic(a, b, max_faces)
    chord = float(np.linalg.norm(embed_3d(a.canonical) - embed_3d(b.canonical)))
    mesh = mesh_upper_bound(a, b, subdivisions) if subdivisions else None
    return CompareReport(
        distance=result.distance,
        oracle=oracle_value,
        chord=chord,
        mesh=mesh,
        argmin=result.argmin,
        fallback=result.fallback,
        distance_ok=abs(result.distance - oracle_value) <= tolerance,
        chord_ok=chord <= result.distance + 1e-12,
        mesh_ok=None if mesh is None else result.distance <= mesh + 1e-12,
    )
