"""Built-in demonstration solids with machine-checked property lists.

Each builder returns a deterministic exact-coordinate mesh, and each
registry entry pairs a builder with the checklist of properties the
shape is meant to exhibit (connectivity, degrees, angle classes,
orthogonality verdict, genus).  ``verify_entry`` replays the checklist
against a freshly built mesh and reports every mismatch.

The fig1_* family demonstrates that right-angle dihedrals alone do not
force orthogonality:

* fig1_left: box with a diagonally rotated square pit.  Every facial and
  dihedral angle is pi/2 or 3*pi/2, yet the pit walls break
  orthogonality; the vertex-edge graph is disconnected (the annular top
  face carries no path from the rim to the pit).
* fig1_middle: the rotated square becomes a tower whose base corners
  split the top rim edges, which connects the graph but creates
  degree-5 vertices and pi/4 facial angles.
* fig1_right: two rectangular slabs crossed at 45 degrees.  The graph is
  connected, all vertex degrees are 3 or 4, every face has exactly four
  genuine corners, every dihedral is pi/2 or 3*pi/2, and the solid is
  still not orthogonal.
* fig1_right_ortho: the same incidence structure built from two
  axis-aligned slabs crossed at 90 degrees; rotating the upper slab is
  exactly what restores orthogonality, with different edge lengths.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .angles import angle_report
from .mesh import (MeshError, SurfaceMesh, euler_genus, graph_components,
                   outward_orient, signed_volume, vertex_degrees)
from .orthotest import is_orthogonal


def _mesh(positions, faces):
    return outward_orient(SurfaceMesh(positions, faces, mode="exact"))


def make_cube(a=1, b=1, c=1):
    """Axis-aligned box [0,a] x [0,b] x [0,c]."""
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    if a <= 0 or b <= 0 or c <= 0:
        raise ValueError("box dimensions must be positive")
    pts = [
        (0, 0, 0), (a, 0, 0), (a, b, 0), (0, b, 0),
        (0, 0, c), (a, 0, c), (a, b, c), (0, b, c),
    ]
    faces = [
        [[0, 3, 2, 1]],              # bottom
        [[4, 5, 6, 7]],              # top
        [[0, 1, 5, 4]],              # y = 0
        [[1, 2, 6, 5]],              # x = a
        [[2, 3, 7, 6]],              # y = b
        [[3, 0, 4, 7]],              # x = 0
    ]
    return _mesh(pts, faces)


def make_l_prism(ax=2, ay=2, bx=1, by=1, h=1):
    """Prism over an L: [0,ax] x [0,ay] minus the corner [bx,ax] x [by,ay]."""
    ax, ay, bx, by, h = (Fraction(v) for v in (ax, ay, bx, by, h))
    if not (0 < bx < ax and 0 < by < ay) or h <= 0:
        raise ValueError("degenerate L-prism arms")
    section = [(0, 0), (ax, 0), (ax, by), (bx, by), (bx, ay), (0, ay)]
    pts = [(x, y, Fraction(0)) for (x, y) in section] + \
          [(x, y, h) for (x, y) in section]
    faces = [[[0, 5, 4, 3, 2, 1]], [[6, 7, 8, 9, 10, 11]]]
    for i in range(6):
        j = (i + 1) % 6
        faces.append([[i, j, j + 6, i + 6]])
    return _mesh(pts, faces)


def make_box_with_axis_pit(box=(4, 4, 2), pit=(1, 3, 1, 3), depth=1):
    """Box with an axis-aligned rectangular pit sunk into the top face.

    The pit is either strictly inside the top face (the top becomes an
    annular two-ring face and the graph disconnects) or flush with the
    y=0 side (everything stays single-ring and connected).
    """
    a, b, c = (Fraction(v) for v in box)
    x0, x1, y0, y1 = (Fraction(v) for v in pit)
    d = Fraction(depth)
    if a <= 0 or b <= 0 or c <= 0:
        raise ValueError("box dimensions must be positive")
    if not (0 <= x0 < x1 <= a and 0 <= y0 < y1 <= b):
        raise ValueError("pit not contained in top face")
    if d >= c:
        raise ValueError("pit pierces the solid")
    if d <= 0:
        raise ValueError("pit depth must be positive")
    touching = [x0 == 0, x1 == a, y0 == 0, y1 == b]
    if sum(touching) == 0:
        return _pit_centered(a, b, c, x0, x1, y0, y1, d)
    if touching == [False, False, True, False]:
        return _pit_flush_y0(a, b, c, x0, x1, y1, d)
    raise ValueError("pit must be strictly inside or flush with the y=0 side only")


def _pit_centered(a, b, c, x0, x1, y0, y1, d):
    z = c - d
    pts = [
        (0, 0, 0), (a, 0, 0), (a, b, 0), (0, b, 0),          # B0..B3
        (0, 0, c), (a, 0, c), (a, b, c), (0, b, c),          # R0..R3
        (x0, y0, c), (x1, y0, c), (x1, y1, c), (x0, y1, c),  # P0..P3
        (x0, y0, z), (x1, y0, z), (x1, y1, z), (x0, y1, z),  # Q0..Q3
    ]
    B0, B1, B2, B3, R0, R1, R2, R3 = range(8)
    P0, P1, P2, P3, Q0, Q1, Q2, Q3 = range(8, 16)
    faces = [
        [[B0, B3, B2, B1]],
        [[R0, R1, R2, R3], [P0, P3, P2, P1]],   # annular top
        [[B0, B1, R1, R0]],
        [[B1, B2, R2, R1]],
        [[B2, B3, R3, R2]],
        [[B3, B0, R0, R3]],
        [[P0, P1, Q1, Q0]],   # pit wall y = y0
        [[P1, P2, Q2, Q1]],   # pit wall x = x1
        [[P2, P3, Q3, Q2]],   # pit wall y = y1
        [[P3, P0, Q0, Q3]],   # pit wall x = x0
        [[Q0, Q1, Q2, Q3]],   # pit floor
    ]
    return _mesh(pts, faces)


def _pit_flush_y0(a, b, c, x0, x1, y1, d):
    z = c - d
    pts = [
        (0, 0, 0), (a, 0, 0), (a, b, 0), (0, b, 0),          # B0..B3
        (0, 0, c), (a, 0, c), (a, b, c), (0, b, c),          # R0..R3
        (x0, 0, c), (x1, 0, c), (x1, y1, c), (x0, y1, c),    # U0..U3
        (x0, 0, z), (x1, 0, z), (x1, y1, z), (x0, y1, z),    # W0..W3
    ]
    B0, B1, B2, B3, R0, R1, R2, R3 = range(8)
    U0, U1, U2, U3, W0, W1, W2, W3 = range(8, 16)
    faces = [
        [[B0, B3, B2, B1]],
        [[R0, U0, U3, U2, U1, R1, R2, R3]],           # top with a notch
        [[B1, R1, U1, W1, W0, U0, R0, B0]],           # y = 0 wall, U-shaped
        [[B1, B2, R2, R1]],
        [[B2, B3, R3, R2]],
        [[B3, B0, R0, R3]],
        [[U0, W0, W3, U3]],   # pit wall x = x0
        [[U1, U2, W2, W1]],   # pit wall x = x1
        [[U3, W3, W2, U2]],   # pit wall y = y1
        [[W0, W1, W2, W3]],   # pit floor
    ]
    return _mesh(pts, faces)


def make_fig1_left():
    """Box with a 45-degree rotated square pit; disconnected graph."""
    pts = [
        (0, 0, 0), (4, 0, 0), (4, 4, 0), (0, 4, 0),
        (0, 0, 2), (4, 0, 2), (4, 4, 2), (0, 4, 2),
        (1, 2, 2), (2, 1, 2), (3, 2, 2), (2, 3, 2),   # pit rim P0..P3
        (1, 2, 1), (2, 1, 1), (3, 2, 1), (2, 3, 1),   # pit floor Q0..Q3
    ]
    B0, B1, B2, B3, R0, R1, R2, R3 = range(8)
    P0, P1, P2, P3, Q0, Q1, Q2, Q3 = range(8, 16)
    faces = [
        [[B0, B3, B2, B1]],
        [[R0, R1, R2, R3], [P0, P3, P2, P1]],
        [[B0, B1, R1, R0]],
        [[B1, B2, R2, R1]],
        [[B2, B3, R3, R2]],
        [[B3, B0, R0, R3]],
        [[P0, P1, Q1, Q0]],
        [[P1, P2, Q2, Q1]],
        [[P2, P3, Q3, Q2]],
        [[P3, P0, Q0, Q3]],
        [[Q0, Q1, Q2, Q3]],
    ]
    return _mesh(pts, faces)


def make_fig1_middle():
    """Box with a 45-degree tower on rim-edge midpoints; degree-5 vertices."""
    pts = [
        (0, 0, 0), (4, 0, 0), (4, 4, 0), (0, 4, 0),   # B0..B3
        (0, 0, 2), (4, 0, 2), (4, 4, 2), (0, 4, 2),   # R0..R3
        (2, 0, 2), (4, 2, 2), (2, 4, 2), (0, 2, 2),   # M01, M12, M23, M30
        (2, 0, 3), (4, 2, 3), (2, 4, 3), (0, 2, 3),   # T01, T12, T23, T30
    ]
    B0, B1, B2, B3, R0, R1, R2, R3 = range(8)
    M01, M12, M23, M30, T01, T12, T23, T30 = range(8, 16)
    faces = [
        [[B0, B3, B2, B1]],
        [[B0, B1, R1, M01, R0]],    # y = 0, rim split at M01
        [[B1, B2, R2, M12, R1]],    # x = 4
        [[B2, B3, R3, M23, R2]],    # y = 4
        [[B3, B0, R0, M30, R3]],    # x = 0
        [[R0, M01, M30]],           # corner triangles at z = 2
        [[R1, M12, M01]],
        [[R2, M23, M12]],
        [[R3, M30, M23]],
        [[M01, M12, T12, T01]],     # tower walls
        [[M12, M23, T23, T12]],
        [[M23, M30, T30, T23]],
        [[M30, M01, T01, T30]],
        [[T01, T12, T23, T30]],     # tower top
    ]
    return _mesh(pts, faces)


def _crossed_slabs(pts):
    """Shared incidence structure of the two crossed-slab shapes."""
    b0, b1, b2, b3 = 0, 1, 2, 3
    c0, c1, c2, c3 = 4, 5, 6, 7
    q1, q2, q3, q4 = 8, 9, 10, 11
    a0, a1, a2, a3 = 12, 13, 14, 15
    t0, t1, t2, t3 = 16, 17, 18, 19
    faces = [
        [[b0, b3, b2, b1]],                 # lower slab underside
        [[t0, t1, t2, t3]],                 # upper slab top
        [[c0, c1, q3, q1]],                 # lower slab top, exposed end
        [[q2, q4, c2, c3]],                 # lower slab top, other end
        [[a0, a3, q2, q1]],                 # upper slab underside, overhang
        [[q4, a2, a1, q3]],                 # upper slab underside, overhang
        [[b0, b1, c1, c0]],                 # lower slab end wall
        [[b1, b2, c2, q4, q3, c1]],         # lower slab long wall
        [[b2, b3, c3, c2]],                 # lower slab end wall
        [[b3, b0, c0, q1, q2, c3]],         # lower slab long wall
        [[a0, q1, q3, a1, t1, t0]],         # upper slab long wall
        [[a1, a2, t2, t1]],                 # upper slab end wall
        [[a2, q4, q2, a3, t3, t2]],         # upper slab long wall
        [[a3, a0, t0, t3]],                 # upper slab end wall
    ]
    return _mesh(pts, faces)


def make_fig1_right():
    """Two slabs crossed at 45 degrees: quads only, degrees 3-4, not orthogonal.

    The lower slab is a 45-degree rotated bar (z in [0,1]); the upper bar
    is axis-aligned (z in [1,2]) and crosses over it.  Where a bar's long
    wall passes the other bar, the wall's edge is split by a crossing
    vertex with a straight facial angle, so each long wall is a geometric
    rectangle carried by a six-vertex ring.
    """
    pts = [
        (0, 0, 0), (1, -1, 0), (5, 3, 0), (4, 4, 0),      # b0..b3
        (0, 0, 1), (1, -1, 1), (5, 3, 1), (4, 4, 1),      # c0..c3
        (1, 1, 1), (2, 2, 1), (3, 1, 1), (4, 2, 1),       # q1..q4 crossings
        (-2, 1, 1), (7, 1, 1), (7, 2, 1), (-2, 2, 1),     # a0..a3
        (-2, 1, 2), (7, 1, 2), (7, 2, 2), (-2, 2, 2),     # t0..t3
    ]
    return _crossed_slabs(pts)


def make_fig1_right_ortho(with_isomorphism=False):
    """Axis-aligned twin of fig1_right: same graph, orthogonal, other lengths.

    The vertex-edge graph is label-for-label identical to fig1_right's,
    so the graph isomorphism is the identity on vertex ids.
    """
    pts = [
        (0, 1, 0), (0, -1, 0), (6, -1, 0), (6, 1, 0),     # b0..b3
        (0, 1, 1), (0, -1, 1), (6, -1, 1), (6, 1, 1),     # c0..c3
        (2, 1, 1), (4, 1, 1), (2, -1, 1), (4, -1, 1),     # q1..q4
        (2, 4, 1), (2, -3, 1), (4, -3, 1), (4, 4, 1),     # a0..a3
        (2, 4, 2), (2, -3, 2), (4, -3, 2), (4, 4, 2),     # t0..t3
    ]
    m = _crossed_slabs(pts)
    if with_isomorphism:
        return m, {v: v for v in range(m.vertex_count)}
    return m


# -- checklists ------------------------------------------------------


@dataclass
class GalleryEntry:
    name: str
    build: callable
    expect: dict


def geometric_corner_counts(m):
    """Per face: ring vertices whose facial angle is not a straight angle."""
    rep = angle_report(m)
    counts = {}
    for f in m.faces:
        n = 0
        for r, ring in enumerate(f.rings):
            for v in ring:
                if rep.facial[(f.id, r, v)].k != 2:
                    n += 1
        counts[f.id] = n
    return counts


def verify_entry(entry):
    """Run the checklist; returns a list of mismatch messages (empty = pass)."""
    failures = []
    try:
        m = entry.build()
    except MeshError as exc:
        return [f"builder failed: {exc}"]
    expect = entry.expect
    count, _parts = graph_components(m)
    rep = angle_report(m)
    verdict = is_orthogonal(m)

    def check(key, actual):
        if key in expect and expect[key] != actual:
            failures.append(f"{key}: expected {expect[key]!r}, got {actual!r}")

    check("components", count)
    check("vertex_count", m.vertex_count)
    check("face_count", m.face_count)
    check("degree_set", set(vertex_degrees(m).values()))
    check("all_facial_right", rep.all_facial_right)
    check("all_dihedral_right", rep.all_dihedral_right)
    check("dihedral_ks", rep.dihedral_ks())
    check("orthogonal", verdict.orthogonal)
    check("multi_ring_faces", sum(1 for f in m.faces if f.ring_count() > 1))
    if "reflex_edges" in expect:
        check("reflex_edges", sum(1 for a in rep.dihedral.values() if a.k == 3))
    if "genus" in expect:
        if expect["genus"] == "refused":
            try:
                g = euler_genus(m)
                failures.append(f"genus: expected refusal, got {g!r}")
            except MeshError:
                pass
        else:
            check("genus", euler_genus(m))
    if "geometric_corners" in expect:
        counts = geometric_corner_counts(m)
        bad = {f: n for f, n in counts.items() if n != expect["geometric_corners"]}
        if bad:
            failures.append(
                f"geometric_corners: expected {expect['geometric_corners']} "
                f"per face, deviations {bad!r}")
    if "volume" in expect:
        check("volume", signed_volume(m))
    if signed_volume(m) <= 0:
        failures.append("signed volume is not positive after outward orientation")
    return failures


def _registry():
    entries = [
        GalleryEntry("cube", make_cube, {
            "components": 1, "vertex_count": 8, "face_count": 6,
            "degree_set": {3}, "all_facial_right": True, "all_dihedral_right": True,
            "dihedral_ks": {1}, "orthogonal": True, "genus": [0],
            "multi_ring_faces": 0, "reflex_edges": 0, "volume": Fraction(1),
        }),
        GalleryEntry("box123", lambda: make_cube(1, 2, 3), {
            "components": 1, "vertex_count": 8, "degree_set": {3},
            "all_facial_right": True, "all_dihedral_right": True,
            "dihedral_ks": {1}, "orthogonal": True, "genus": [0],
            "multi_ring_faces": 0, "volume": Fraction(6),
        }),
        GalleryEntry("l_prism", make_l_prism, {
            "components": 1, "vertex_count": 12, "face_count": 8,
            "degree_set": {3}, "all_facial_right": True, "all_dihedral_right": True,
            "dihedral_ks": {1, 3}, "reflex_edges": 1, "orthogonal": True,
            "genus": [0], "multi_ring_faces": 0, "volume": Fraction(3),
        }),
        GalleryEntry("box_pit_centered", make_box_with_axis_pit, {
            "components": 2, "vertex_count": 16, "face_count": 11,
            "degree_set": {3}, "all_facial_right": True, "all_dihedral_right": True,
            "dihedral_ks": {1, 3}, "orthogonal": True, "genus": "refused",
            "multi_ring_faces": 1, "volume": Fraction(28),
        }),
        GalleryEntry("box_pit_flush",
                     lambda: make_box_with_axis_pit((4, 4, 2), (1, 3, 0, 2), 1), {
            "components": 1, "vertex_count": 16, "face_count": 10,
            "degree_set": {3}, "all_facial_right": True, "all_dihedral_right": True,
            "dihedral_ks": {1, 3}, "orthogonal": True, "genus": [0],
            "multi_ring_faces": 0, "volume": Fraction(28),
        }),
        GalleryEntry("fig1_left", make_fig1_left, {
            "components": 2, "vertex_count": 16, "face_count": 11,
            "all_facial_right": True, "all_dihedral_right": True,
            "dihedral_ks": {1, 3}, "orthogonal": False, "genus": "refused",
            "multi_ring_faces": 1,
        }),
        GalleryEntry("fig1_middle", make_fig1_middle, {
            "components": 1, "vertex_count": 16, "face_count": 14,
            "degree_set": {3, 5}, "all_facial_right": False,
            "all_dihedral_right": True, "dihedral_ks": {1, 3},
            "orthogonal": False, "genus": [0], "multi_ring_faces": 0,
        }),
        GalleryEntry("fig1_right", make_fig1_right, {
            "components": 1, "vertex_count": 20, "face_count": 14,
            "degree_set": {3, 4}, "all_dihedral_right": True,
            "dihedral_ks": {1, 3}, "orthogonal": False, "genus": [0],
            "multi_ring_faces": 0, "geometric_corners": 4,
        }),
        GalleryEntry("fig1_right_ortho", make_fig1_right_ortho, {
            "components": 1, "vertex_count": 20, "face_count": 14,
            "degree_set": {3, 4}, "all_facial_right": True,
            "all_dihedral_right": True, "dihedral_ks": {1, 3},
            "orthogonal": True, "genus": [0], "multi_ring_faces": 0,
            "geometric_corners": 4,
        }),
    ]
    return {e.name: e for e in entries}


REGISTRY = _registry()
