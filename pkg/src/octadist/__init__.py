"""Exact geodesic distances on the surface of the unit regular octahedron.

The distance between any two surface points is the minimum of at most
six closed-form trail lengths, picked by how the two home faces relate
(adjacent, sharing only a vertex, or opposite).  The package ships the
coordinate charts, the nine valid landscapes with their formulas and
planar layouts, an independent brute-force unfolding oracle used to
verify every formula, and a batch CLI.
"""

from .topology import (
    FACE_INDICES,
    VERTICES,
    Frame,
    Relation,
    canonical_frame,
    enumerate_dual_paths,
    opposite,
    relation,
)
from .coords import (
    EPS_IN,
    FrameMismatch,
    InvalidRepresentation,
    NotOnSharedEdge,
    OrientedPoint,
    Representation,
    SurfacePoint,
    canonicalize,
    flip_home_face,
    rotate_shared_face,
    sample_uniform,
    surface_point,
    vertex_representations,
)
from .landscape import (
    VALIDITY_WITNESSES,
    Crossing,
    DistanceResult,
    LandscapeInstance,
    TrailResult,
    WrongRelation,
    shortest_path,
    surface_distance,
    trail_crossings,
    trail_length,
)
from .oracle import compare, embed_3d, mesh_upper_bound, unfold_geodesic

__version__ = "0.1.0"

__all__ = [
    "EPS_IN",
    "FACE_INDICES",
    "VERTICES",
    "Crossing",
    "DistanceResult",
    "Frame",
    "FrameMismatch",
    "InvalidRepresentation",
    "LandscapeInstance",
    "NotOnSharedEdge",
    "OrientedPoint",
    "Relation",
    "Representation",
    "SurfacePoint",
    "TrailResult",
    "VALIDITY_WITNESSES",
    "WrongRelation",
    "canonical_frame",
    "canonicalize",
    "compare",
    "embed_3d",
    "enumerate_dual_paths",
    "flip_home_face",
    "mesh_upper_bound",
    "opposite",
    "relation",
    "rotate_shared_face",
    "sample_uniform",
    "shortest_path",
    "surface_distance",
    "surface_point",
    "trail_crossings",
    "trail_length",
    "unfold_geodesic",
    "vertex_representations",
]
