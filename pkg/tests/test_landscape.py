import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from octadist import topology as topo
from octadist.coords import (
    FrameMismatch,
    Representation,
    canonicalize,
    flip_home_face,
    rotate_once,
    vertex_representations,
)
from octadist.landscape import (
    APPLICABLE_IDS,
    PATH_ROLES,
    VALIDITY_WITNESSES,
    WrongRelation,
    _prepare_pair,
    chain_layout,
    place_in_layout,
    shortest_path,
    surface_distance,
    trail_crossings,
    trail_length,
)
from octadist.oracle import embed_3d, unfold_geodesic

from conftest import interior_rep

SQRT3 = math.sqrt(3.0)

units = st.floats(min_value=0.0, max_value=1.0, allow_nan=False)
landscape_ids = st.sampled_from(range(1, 10))


@st.composite
def framed_pairs(draw, ids=landscape_ids):
    """(index, p1, p2, frame) with both points in the charts L-index expects."""
    index = draw(ids)
    n1 = draw(st.sampled_from(topo.FACE_INDICES))
    n2 = topo.neighbors(n1)[draw(st.integers(min_value=0, max_value=2))]
    frame = topo.Frame.from_anchor(n1, n2)
    p1 = interior_rep(frame.face(1), frame.face(2), draw(units), draw(units))
    if index == 1:
        home, shared = frame.face(2), frame.face(1)
    elif index in (2, 3):
        home, shared = frame.face(5), frame.face(6)
    else:
        home, shared = frame.face(8), frame.face(7)
    p2 = interior_rep(home, shared, draw(units), draw(units))
    return index, p1, p2, frame


def _lemma(x, y):
    return (1.0 - x + SQRT3 * y) / 2.0, (SQRT3 - SQRT3 * x - y) / 2.0


def _lemma2(x, y):
    return _lemma(*_lemma(x, y))


# where each landscape's layout must put p1 and p2, written as explicit
# point transforms (an independent recoding of the layouts)
_EXPECTED_POSITIONS = {
    1: (lambda x, y: (x, y), lambda x, y: (1.0 - x, -y)),
    2: (lambda x, y: _lemma(x, y), lambda x, y: (x - 1.0, y)),
    3: (lambda x, y: (x - 1.0, y), lambda x, y: _lemma(x, y)),
    4: (
        lambda x, y: _lemma2(x, y),
        lambda x, y: (-_lemma2(x, y)[0], SQRT3 - _lemma2(x, y)[1]),
    ),
    5: (lambda x, y: _lemma(x, y), lambda x, y: (-x, SQRT3 - y)),
    6: (
        lambda x, y: (x, y),
        lambda x, y: (-_lemma(x, y)[0], SQRT3 - _lemma(x, y)[1]),
    ),
    7: (
        lambda x, y: (x, y),
        lambda x, y: (2.0 - _lemma2(x, y)[0], SQRT3 - _lemma2(x, y)[1]),
    ),
    8: (lambda x, y: _lemma2(x, y), lambda x, y: (2.0 - x, SQRT3 - y)),
    9: (
        lambda x, y: _lemma(x, y),
        lambda x, y: (2.0 - _lemma(x, y)[0], SQRT3 - _lemma(x, y)[1]),
    ),
}


def test_trail_length_witness_row_one():
    frame = topo.Frame.from_anchor(1, 2)
    p1, p2 = VALIDITY_WITNESSES[1]
    value = trail_length(1, p1, p2, frame)
    assert value == pytest.approx(math.sqrt((0.5 + 0.5 - 1) ** 2 + 0.4**2), abs=1e-15)
    assert value == pytest.approx(0.4, abs=1e-15)


@pytest.mark.parametrize("x", [0.0, 0.25, 0.5, 0.9])
def test_trail_length_zero_for_shared_edge_point(x):
    # both charts name the same edge point, so the trail degenerates
    frame = topo.Frame.from_anchor(3, 2)
    p1 = Representation(frame.face(1), frame.face(2), x, 0.0)
    p2 = Representation(frame.face(2), frame.face(1), 1.0 - x, 0.0)
    assert trail_length(1, p1, p2, frame) == pytest.approx(0.0, abs=1e-15)


def test_trail_length_witness_row_nine_matches_oracle():
    p1, p2 = VALIDITY_WITNESSES[9]
    frame = topo.Frame.from_anchor(1, 2)
    value = trail_length(9, p1, p2, frame)
    oracle_value = unfold_geodesic(canonicalize(p1), canonicalize(p2), 8)
    assert value == pytest.approx(oracle_value, abs=1e-12)


def test_trail_length_wrong_relation():
    frame = topo.Frame.from_anchor(1, 2)
    p1 = Representation(1, 2, 0.3, 0.1)
    p2 = Representation(2, 1, 0.3, 0.1)
    with pytest.raises(WrongRelation):
        trail_length(4, p1, p2, frame)
    with pytest.raises(WrongRelation):
        trail_crossings(2, p1, p2, frame)


def test_trail_length_chart_mismatch():
    frame = topo.Frame.from_anchor(1, 2)
    p1 = Representation(1, 4, 0.3, 0.1)  # wrong shared face
    p2 = Representation(2, 1, 0.3, 0.1)
    with pytest.raises(FrameMismatch):
        trail_length(1, p1, p2, frame)


@given(framed_pairs())
def test_formula_agrees_with_layout_chord(case):
    index, p1, p2, frame = case
    formula = trail_length(index, p1, p2, frame)
    trail = trail_crossings(index, p1, p2, frame)
    assert formula == pytest.approx(trail.chord_length, abs=1e-12)


@given(framed_pairs())
def test_layout_places_points_as_derived(case):
    index, p1, p2, frame = case
    roles = PATH_ROLES[index]
    faces = tuple(frame.face(r) for r in roles)
    from octadist.landscape import _ORIENT_ROLES

    base_role, ref_role = _ORIENT_ROLES[index]
    positions = chain_layout(faces, roles.index(base_role), frame.face(ref_role))
    a = place_in_layout(positions[faces[0]], p1)
    b = place_in_layout(positions[faces[-1]], p2)
    expect_p1, expect_p2 = _EXPECTED_POSITIONS[index]
    ex, ey = expect_p1(p1.x, p1.y)
    assert a[0] == pytest.approx(ex, abs=1e-12) and a[1] == pytest.approx(ey, abs=1e-12)
    ex, ey = expect_p2(p2.x, p2.y)
    assert b[0] == pytest.approx(ex, abs=1e-12) and b[1] == pytest.approx(ey, abs=1e-12)


@given(framed_pairs())
def test_valid_landscape_chords_are_always_contained(case):
    # the nine landscape regions are convex, so in-chart chords never leave
    index, p1, p2, frame = case
    trail = trail_crossings(index, p1, p2, frame)
    assert trail.contained
    assert len(trail.crossings) == len(PATH_ROLES[index]) - 1
    for c in trail.crossings:
        assert 0.0 <= c.parameter <= 1.0


def test_trail_crossings_witness_row_one():
    frame = topo.Frame.from_anchor(1, 2)
    p1, p2 = VALIDITY_WITNESSES[1]
    trail = trail_crossings(1, p1, p2, frame)
    assert trail.contained
    assert len(trail.crossings) == 1
    crossing = trail.crossings[0]
    assert crossing.parameter == pytest.approx(0.5, abs=1e-12)
    assert crossing.edge == topo.shared_edge(1, 2)
    assert crossing.point.x == pytest.approx(0.5, abs=1e-12)
    assert crossing.point.y == pytest.approx(0.0, abs=1e-12)


def test_trail_crossings_degenerate_edge_point():
    frame = topo.Frame.from_anchor(1, 2)
    p1 = Representation(1, 2, 0.3, 0.0)
    p2 = Representation(2, 1, 0.7, 0.0)  # the same edge point, flipped chart
    trail = trail_crossings(1, p1, p2, frame)
    assert trail.contained
    assert trail.length == pytest.approx(0.0, abs=1e-15)
    assert trail.crossings[0].parameter == pytest.approx(0.3, abs=1e-12)


def test_trail_crossings_collinear_chord_along_edge():
    # both points on the shared edge, apart: the trail runs along the edge
    frame = topo.Frame.from_anchor(1, 2)
    p1 = Representation(1, 2, 0.2, 0.0)
    p2 = Representation(2, 1, 0.2, 0.0)  # edge coordinate 0.8 on p1's chart
    trail = trail_crossings(1, p1, p2, frame)
    assert trail.contained
    assert trail.length == pytest.approx(0.6, abs=1e-12)


def test_chord_intersection_rejects_misses_and_disorder():
    from octadist.landscape import chord_edge_intersections

    # chord passes beside the segment: edge parameter out of range
    edge = ((0.0, 0.0), (1.0, 0.0))
    assert chord_edge_intersections((2.0, 1.0), (2.0, -1.0), [edge]) is None
    # chord parallel to the edge but off its line
    assert chord_edge_intersections((0.0, 0.5), (1.0, 0.5), [edge]) is None
    # edges met out of path order
    e1 = ((0.0, 1.0), (2.0, 1.0))
    e2 = ((0.0, 2.0), (2.0, 2.0))
    assert chord_edge_intersections((1.0, 0.0), (1.0, 3.0), [e1, e2]) is not None
    assert chord_edge_intersections((1.0, 0.0), (1.0, 3.0), [e2, e1]) is None
    # endpoint grazes count as crossings
    hits = chord_edge_intersections((0.0, -1.0), (0.0, 1.0), [edge])
    assert hits is not None and hits[0][0] == 0.0


def test_surface_distance_coincident_points():
    a = canonicalize(Representation(3, 2, 0.4, 0.3))
    b = canonicalize(Representation(3, 2, 0.4, 0.3))
    result = surface_distance(a, b)
    assert result.distance == 0.0
    assert result.argmin == ()
    assert result.trail.crossings == ()
    assert result.trail.contained
    assert not result.fallback


def test_surface_distance_same_face():
    a = canonicalize(Representation(3, 2, 0.2, 0.1))
    b = canonicalize(Representation(3, 8, 0.3, 0.25))
    result = surface_distance(a, b)
    # the straight in-face segment equals the 3D chord on a flat face
    chord = float(
        sum((p - q) ** 2 for p, q in zip(embed_3d(a.canonical), embed_3d(b.canonical)))
    ) ** 0.5
    assert result.distance == pytest.approx(chord, abs=1e-12)
    assert result.argmin == ()
    assert result.trail.crossings == ()


def test_surface_distance_witness_rows(witness_points):
    for index, (a, b) in witness_points.items():
        result = surface_distance(a, b)
        assert result.argmin == (index,)
        assert not result.fallback
        oracle_value = unfold_geodesic(a, b, 8)
        assert result.distance == pytest.approx(oracle_value, abs=1e-9)


def test_surface_distance_tie_between_mirror_strips():
    # antipodal vertices sit symmetrically in both three-face strips
    a = canonicalize(vertex_representations(frozenset({1, 2, 3, 4}))[0])
    b = canonicalize(vertex_representations(frozenset({5, 6, 7, 8}))[0])
    result = surface_distance(a, b)
    assert result.argmin == (2, 3)
    assert result.distance == pytest.approx(math.sqrt(3.0), abs=1e-12)


def test_surface_distance_vertex_to_incident_face_point():
    # one endpoint is a vertex of the other point's home face: the straight
    # in-face segment (= the 3D chord) must be recovered
    vertex = frozenset({1, 2, 3, 4})
    a = canonicalize(vertex_representations(vertex)[0])
    b = canonicalize(Representation(3, 2, 0.5, 0.2))
    chord = float(
        sum((p - q) ** 2 for p, q in zip(embed_3d(a.canonical), embed_3d(b.canonical)))
    ) ** 0.5
    result = surface_distance(a, b)
    assert result.distance == pytest.approx(chord, abs=1e-12)


def test_surface_distance_edge_point_to_opposite_face():
    # a point on an edge still matches the brute-force unfolding
    a = canonicalize(Representation(1, 2, 0.3, 0.0))
    b = canonicalize(Representation(8, 7, 0.4, 0.2))
    result = surface_distance(a, b)
    assert result.distance == pytest.approx(unfold_geodesic(a, b, 8), abs=1e-9)


@given(framed_pairs(ids=st.just(4)))
def test_distance_uses_best_contained_landscape(case):
    _index, p1, p2, frame = case
    a, b = canonicalize(p1), canonicalize(p2)
    result = surface_distance(a, b)
    lengths = [
        trail_length(i, *(_prepare_pair(a, b)[1:]), _prepare_pair(a, b)[0])
        for i in APPLICABLE_IDS[topo.relation(p1.home, p2.home)]
    ]
    assert result.distance == pytest.approx(min(lengths), abs=1e-12)


@given(framed_pairs())
def test_distance_invariant_under_chart_rotation(case):
    _index, p1, p2, frame = case
    a, b = canonicalize(p1), canonicalize(p2)
    base = surface_distance(a, b).distance
    rotated = surface_distance(canonicalize(rotate_once(p1)), b).distance
    assert rotated == pytest.approx(base, abs=1e-12)
    rotated_b = surface_distance(a, canonicalize(rotate_once(rotate_once(p2)))).distance
    assert rotated_b == pytest.approx(base, abs=1e-12)


@given(st.sampled_from(topo.FACE_INDICES), units.filter(lambda v: 0.05 < v < 0.95), units, units)
def test_distance_invariant_under_edge_flip(home, x, u, v):
    shared = topo.neighbors(home)[2]
    edge_rep = Representation(home, shared, x, 0.0)
    other = interior_rep(topo.opposite(home), topo.neighbors(topo.opposite(home))[0], u, v)
    b = canonicalize(other)
    d_direct = surface_distance(canonicalize(edge_rep), b).distance
    d_flipped = surface_distance(canonicalize(flip_home_face(edge_rep)), b).distance
    assert d_flipped == pytest.approx(d_direct, abs=1e-12)


@given(framed_pairs())
def test_distance_symmetry(case):
    _index, p1, p2, _frame = case
    a, b = canonicalize(p1), canonicalize(p2)
    assert surface_distance(a, b).distance == pytest.approx(
        surface_distance(b, a).distance, abs=1e-12
    )


def test_shortest_path_structures(witness_points):
    a, b = witness_points[1]
    trail = shortest_path(a, b)
    assert trail.landscape is not None and trail.landscape.index == 1
    assert len(trail.crossings) == 1
    assert trail.crossings[0].edge == topo.shared_edge(a.canonical.home, b.canonical.home)

    a, b = witness_points[9]
    trail = shortest_path(a, b)
    assert len(trail.crossings) == 3
    assert trail.landscape.faces == (1, 4, 3, 8)

    same_face = shortest_path(
        canonicalize(Representation(5, 2, 0.3, 0.1)),
        canonicalize(Representation(5, 2, 0.7, 0.1)),
    )
    assert same_face.crossings == ()
    assert same_face.length == pytest.approx(0.4, abs=1e-12)


def test_boundary_point_pairs_match_oracle():
    # vertices and edge points are where chart degeneracies live; every
    # pair must still agree with the exhaustive unfolding
    special = [
        canonicalize(vertex_representations(v)[0]) for v in topo.VERTICES
    ]
    seen = set()
    for f in topo.FACE_INDICES:
        for g in topo.neighbors(f):
            if (min(f, g), max(f, g)) in seen:
                continue
            seen.add((min(f, g), max(f, g)))
            for t in (0.25, 0.5):
                special.append(canonicalize(Representation(f, g, t, 0.0)))
    special.append(canonicalize(Representation(1, 2, 0.3, 0.25)))
    special.append(canonicalize(Representation(5, 2, 0.3, 0.25)))
    import itertools

    for a, b in itertools.combinations(special, 2):
        result = surface_distance(a, b)
        assert not result.fallback
        assert result.distance == pytest.approx(unfold_geodesic(a, b, 8), abs=1e-9)
        assert result.distance == pytest.approx(
            surface_distance(b, a).distance, abs=1e-12
        )


def test_distance_zero_exactly_for_equal_canonical_forms():
    from octadist.coords import sample_uniform

    points = sample_uniform(55, 200)
    for p in points[:40]:
        assert surface_distance(p, p).distance == 0.0
    for a, b in zip(points[0::2], points[1::2]):
        if a.canonical != b.canonical:
            assert surface_distance(a, b).distance > 0.0


def test_adjacent_vertices_are_unit_apart():
    a = canonicalize(vertex_representations(frozenset({1, 2, 3, 4}))[0])
    b = canonicalize(vertex_representations(frozenset({1, 2, 5, 6}))[0])
    assert surface_distance(a, b).distance == pytest.approx(1.0, abs=1e-12)


def test_landscape_instances_report_role_patterns(witness_points):
    # dual paths follow the role patterns, e.g. L5 visits roles 1, 2, 3, 8
    for index, (a, b) in witness_points.items():
        trail = surface_distance(a, b).trail
        frame = trail.landscape.frame
        roles = tuple(frame.role(f) for f in trail.landscape.faces)
        assert roles == PATH_ROLES[index]
