"""SVG rendering of shortest trails on the fixed octahedron net.

The net is the one the face labelling is defined on: a horizontal strip
of six faces with two flaps.  Trails are drawn per face: each crossing
knows its edge and edge parameter, which pins its position on both
copies of a cut edge, so segments transfer from the landscape layout to
the net without recomputing any geometry.
"""

from __future__ import annotations

import math

from . import topology as topo
from .coords import Representation, barycentric
from .landscape import DistanceResult

_H = math.sqrt(3.0) / 2.0

_V146_7 = frozenset({1, 4, 6, 7})
_V1256 = frozenset({1, 2, 5, 6})
_V1234 = frozenset({1, 2, 3, 4})
_V2358 = frozenset({2, 3, 5, 8})
_V3478 = frozenset({3, 4, 7, 8})
_V5678 = frozenset({5, 6, 7, 8})

#: Net position of each face's corners (unit edge length).
NET_CORNERS: dict[int, dict[topo.VertexLabel, tuple[float, float]]] = {
    1: {_V146_7: (1.0, 0.0), _V1234: (0.5, -_H), _V1256: (1.5, -_H)},
    2: {_V1234: (0.5, -_H), _V1256: (1.5, -_H), _V2358: (1.0, -2 * _H)},
    3: {_V3478: (3.0, 0.0), _V2358: (2.5, -_H), _V1234: (3.5, -_H)},
    4: {_V3478: (0.0, 0.0), _V146_7: (1.0, 0.0), _V1234: (0.5, -_H)},
    5: {_V5678: (2.0, 0.0), _V1256: (1.5, -_H), _V2358: (2.5, -_H)},
    6: {_V146_7: (1.0, 0.0), _V5678: (2.0, 0.0), _V1256: (1.5, -_H)},
    7: {_V146_7: (2.5, _H), _V5678: (2.0, 0.0), _V3478: (3.0, 0.0)},
    8: {_V5678: (2.0, 0.0), _V2358: (2.5, -_H), _V3478: (3.0, 0.0)},
}

_NET_X_MAX = 3.5
_NET_Y_MIN = -2 * _H
_NET_Y_MAX = _H


def net_position(rep: Representation) -> tuple[float, float]:
    """Map a represented point onto its home face in the net."""
    s, t, u = topo.chart_corners(rep.home, rep.shared)
    ls, lt, lu = barycentric(rep.x, rep.y)
    corners = NET_CORNERS[rep.home]
    ps, pt, pu = corners[s], corners[t], corners[u]
    return (
        ls * ps[0] + lt * pt[0] + lu * pu[0],
        ls * ps[1] + lt * pt[1] + lu * pu[1],
    )


def _edge_point(face: int, edge, parameter: float) -> tuple[float, float]:
    corners = NET_CORNERS[face]
    (sx, sy), (tx, ty) = corners[edge[0]], corners[edge[1]]
    return sx + parameter * (tx - sx), sy + parameter * (ty - sy)


def trail_segments(
    result: DistanceResult, p1: Representation, p2: Representation
) -> list[tuple[tuple[float, float], tuple[float, float]]]:
    """Per-face net segments of the trail, in path order."""
    trail = result.trail
    if trail.landscape is None:
        return [(net_position(p1), net_position(p2))]
    if not trail.contained:
        return []
    faces = trail.landscape.faces
    segments = []
    start = net_position(p1)
    for i, crossing in enumerate(trail.crossings):
        end = _edge_point(faces[i], crossing.edge, crossing.parameter)
        segments.append((start, end))
        start = _edge_point(faces[i + 1], crossing.edge, crossing.parameter)
    segments.append((start, net_position(p2)))
    return segments


def _polylines(segments, tol: float = 1e-9):
    runs = []
    for seg in segments:
        if runs and math.dist(runs[-1][-1], seg[0]) <= tol:
            runs[-1].append(seg[1])
        else:
            runs.append([seg[0], seg[1]])
    return runs


def render_svg(
    p1: Representation,
    p2: Representation,
    result: DistanceResult,
    scale: float = 100.0,
) -> str:
    """Deterministic SVG of the net with the shortest trail overlaid."""
    margin = 0.2 * scale

    def svg_xy(p: tuple[float, float]) -> tuple[float, float]:
        return margin + p[0] * scale, margin + (_NET_Y_MAX - p[1]) * scale

    def fmt(v: float) -> str:
        return format(v, ".6f")

    width = _NET_X_MAX * scale + 2 * margin
    height = (_NET_Y_MAX - _NET_Y_MIN) * scale + 2 * margin
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{fmt(width)}" height="{fmt(height)}" '
        f'viewBox="0 0 {fmt(width)} {fmt(height)}">',
    ]
    for face in sorted(NET_CORNERS):
        corners = list(NET_CORNERS[face].values())
        pts = " ".join("{},{}".format(*map(fmt, svg_xy(c))) for c in corners)
        lines.append(
            f'  <polygon points="{pts}" fill="none" stroke="black" stroke-width="1"/>'
        )
        cx = sum(c[0] for c in corners) / 3.0
        cy = sum(c[1] for c in corners) / 3.0
        tx, ty = svg_xy((cx, cy))
        lines.append(
            f'  <text x="{fmt(tx)}" y="{fmt(ty)}" text-anchor="middle" '
            f'font-family="sans-serif" font-size="{fmt(0.14 * scale)}">F{face}</text>'
        )
    for run in _polylines(trail_segments(result, p1, p2)):
        pts = " ".join("{},{}".format(*map(fmt, svg_xy(p))) for p in run)
        lines.append(
            f'  <polyline points="{pts}" fill="none" stroke="red" stroke-width="2"/>'
        )
    for rep, label in ((p1, "p1"), (p2, "p2")):
        px, py = svg_xy(net_position(rep))
        lines.append(f'  <circle cx="{fmt(px)}" cy="{fmt(py)}" r="3" fill="black"/>')
        lines.append(
            f'  <text x="{fmt(px + 5)}" y="{fmt(py - 5)}" font-family="sans-serif" '
            f'font-size="{fmt(0.1 * scale)}">{label}</text>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
