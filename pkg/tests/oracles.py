"""Independent oracles used to compute expected values in the tests.

Nothing here shares logic with the library's own algorithms: frames are
found by filtering an exhaustive enumeration, solid angles by sampling
an explicit occupancy predicate, and ring orientation by exact crossing
counts.  Keeping these routes separate is the point.
"""

from __future__ import annotations

import math
from fractions import Fraction

from orthopoly import vec
from orthopoly.reconstruct import AXIS_VECS, FrameAssignment, axis_neg

_AXIS_INDEX = {v: i for i, v in enumerate(AXIS_VECS)}


def brute_force_frames(cp):
    """All gauge-fixed frames by filtering every face-normal assignment.

    Enumerates normal codes face by face (face 0 pinned to +Z), rejecting
    assignments where adjacent faces have parallel normals, then derives
    every edge direction from the label relation u = s * (nf x ng),
    keeps assignments matching the +X gauge on face 0's first edge, and
    filters by ring non-reversal, cycle closure, and outward winding.
    """
    nf = len(cp.faces)
    adjacency = []
    for sides in cp.edge_sides:
        (f1, _), (f2, _) = sides
        adjacency.append((f1, f2))
    results = []
    normals = [None] * nf
    normals[0] = 4  # +Z

    def ok_so_far(k):
        for idx, (f1, f2) in enumerate(adjacency):
            if f1 <= k and f2 <= k:
                if normals[f1] == normals[f2] or normals[f1] == axis_neg(normals[f2]):
                    return False
        return True

    def assign(k):
        if k == nf:
            fr = derive(cp, normals)
            if fr is not None:
                results.append(fr)
            return
        for code in range(6):
            normals[k] = code
            if ok_so_far(k):
                assign(k + 1)
        normals[k] = None

    assign(1)
    return sorted(results, key=FrameAssignment.sort_key)


def derive(cp, normals):
    sign = {"convex": 1, "reflex": -1}
    dirs = [None] * len(cp.edges)
    for idx, e in enumerate(cp.edges):
        (f1, _), (f2, _) = cp.edge_sides[idx]
        crossed = vec.cross(AXIS_VECS[normals[f1]], AXIS_VECS[normals[f2]])
        if crossed == (0, 0, 0):
            return None
        traversed_on_f1 = _AXIS_INDEX[crossed]
        if sign[e.label] == -1:
            traversed_on_f1 = axis_neg(traversed_on_f1)
        # convert to the canonical (u < v) direction using f1's traversal
        fwd = None
        for (eidx, forward) in cp.face_edges[f1]:
            if eidx == idx:
                fwd = forward
                break
        dirs[idx] = traversed_on_f1 if fwd else axis_neg(traversed_on_f1)
    # gauge on face 0's first edge
    idx0, fwd0 = cp.face_edges[0][0]
    traversed0 = dirs[idx0] if fwd0 else axis_neg(dirs[idx0])
    if traversed0 != 0:  # +X
        return None
    # ring reversal, closure, winding
    for fi, entries in enumerate(cp.face_edges):
        traversed = []
        for (idx, fwd) in entries:
            traversed.append(dirs[idx] if fwd else axis_neg(dirs[idx]))
        k = len(traversed)
        for i in range(k):
            if traversed[(i + 1) % k] == axis_neg(traversed[i]):
                return None
        total = vec.vec3(0, 0, 0)
        area = vec.vec3(0, 0, 0)
        prefix = vec.vec3(0, 0, 0)
        for (idx, _fwd), code in zip(entries, traversed):
            step = vec.scale(tuple(Fraction(c) for c in AXIS_VECS[code]),
                             cp.edges[idx].length)
            area = vec.add(area, vec.cross(prefix, step))
            prefix = vec.add(prefix, step)
            total = vec.add(total, step)
        if total != (0, 0, 0):
            return None
        if vec.dot(area, AXIS_VECS[normals[fi]]) <= 0:
            return None
    return FrameAssignment(tuple(normals), tuple(dirs))


# -- solid occupancy -------------------------------------------------


def occupancy_fraction(inside, mesh, u, v, radius=0.05, samples=720):
    """Fraction of a small circle around the edge midpoint inside the solid."""
    pu = tuple(float(c) for c in mesh.vertices[u].pos)
    pv = tuple(float(c) for c in mesh.vertices[v].pos)
    mid = tuple((a + b) / 2.0 for a, b in zip(pu, pv))
    d = vec.funit(tuple(b - a for a, b in zip(pu, pv)))
    pick = (1.0, 0.0, 0.0) if abs(d[0]) < 0.9 else (0.0, 1.0, 0.0)
    e1 = vec.funit(vec.cross(d, pick))
    e2 = vec.cross(d, e1)
    count = 0
    for i in range(samples):
        phi = 2.0 * math.pi * (i + 0.5) / samples
        p = tuple(mid[k] + radius * (math.cos(phi) * e1[k] + math.sin(phi) * e2[k])
                  for k in range(3))
        if inside(p):
            count += 1
    return count / samples


def classify_by_occupancy(inside, mesh, u, v):
    """1 (convex), 2 (flat), or 3 (reflex) from sampled solid occupancy."""
    frac = occupancy_fraction(inside, mesh, u, v)
    for k in (1, 2, 3):
        if abs(frac - k / 4.0) < 0.04:
            return k
    raise AssertionError(f"ambiguous occupancy {frac} at edge ({u},{v})")


def solid_cube(a, b, c):
    def inside(p):
        return 0 < p[0] < a and 0 < p[1] < b and 0 < p[2] < c
    return inside


def solid_l_prism(ax=2, ay=2, bx=1, by=1, h=1):
    def inside(p):
        if not (0 < p[2] < h and 0 < p[0] < ax and 0 < p[1] < ay):
            return False
        return not (p[0] > bx and p[1] > by)
    return inside


def solid_box_pit(box, pit, depth):
    a, b, c = box
    x0, x1, y0, y1 = pit

    def inside(p):
        if not (0 < p[0] < a and 0 < p[1] < b and 0 < p[2] < c):
            return False
        in_pit = x0 < p[0] < x1 and y0 < p[1] < y1 and p[2] > c - depth
        return not in_pit
    return inside


def solid_fig1_left():
    def inside(p):
        if not (0 < p[0] < 4 and 0 < p[1] < 4 and 0 < p[2] < 2):
            return False
        in_pit = abs(p[0] - 2) + abs(p[1] - 2) < 1 and p[2] > 1
        return not in_pit
    return inside


def solid_fig1_middle():
    def inside(p):
        box = 0 < p[0] < 4 and 0 < p[1] < 4 and 0 < p[2] < 2
        tower = abs(p[0] - 2) + abs(p[1] - 2) < 2 and 2 <= p[2] < 3
        return box or tower
    return inside


def solid_fig1_right():
    def inside(p):
        lower = (-2 < p[1] - p[0] < 0 and 0 < p[0] + p[1] < 8 and 0 < p[2] < 1)
        upper = (-2 < p[0] < 7 and 1 < p[1] < 2 and 1 < p[2] < 2)
        return lower or upper
    return inside


def solid_fig1_right_ortho():
    def inside(p):
        lower = 0 < p[0] < 6 and -1 < p[1] < 1 and 0 < p[2] < 1
        upper = 2 < p[0] < 4 and -3 < p[1] < 4 and 1 < p[2] < 2
        return lower or upper
    return inside


SOLIDS = {
    "cube": solid_cube(1, 1, 1),
    "box123": solid_cube(1, 2, 3),
    "l_prism": solid_l_prism(),
    "box_pit_centered": solid_box_pit((4, 4, 2), (1, 3, 1, 3), 1),
    "box_pit_flush": solid_box_pit((4, 4, 2), (1, 3, 0, 2), 1),
    "fig1_left": solid_fig1_left(),
    "fig1_middle": solid_fig1_middle(),
    "fig1_right": solid_fig1_right(),
    "fig1_right_ortho": solid_fig1_right_ortho(),
}


# -- exact ring winding ----------------------------------------------


def _cross2(a, b):
    return a[0] * b[1] - a[1] * b[0]


def _dot2(a, b):
    return a[0] * b[0] + a[1] * b[1]


def ring_winding(mesh, fid, ring_index):
    """Exact turning number of a face ring around the face normal.

    +1 means the ring turns counterclockwise around the outward normal
    (total turning +2*pi), -1 clockwise (hole rings).  Computed without
    any trigonometry by counting signed crossings of a reference ray.
    """
    face = mesh.faces[fid]
    ring = face.rings[ring_index]
    n = mesh.face_normal(fid)
    pts = [mesh.vertices[v].pos for v in ring]
    e1 = vec.sub(pts[1], pts[0])
    e2 = vec.cross(n, e1)
    flat = [(vec.dot(vec.sub(p, pts[0]), e1), vec.dot(vec.sub(p, pts[0]), e2))
            for p in pts]
    dirs = []
    k = len(flat)
    for i in range(k):
        d = (flat[(i + 1) % k][0] - flat[i][0], flat[(i + 1) % k][1] - flat[i][1])
        dirs.append(d)
    ray = None
    for cand in ((1, 0), (0, 1), (1, 1), (1, 2), (2, 1), (1, 3), (3, 1),
                 (2, 3), (3, 2), (1, 4), (4, 1), (1, 5), (5, 1)):
        if all(_cross2(cand, d) != 0 for d in dirs):
            ray = cand
            break
    assert ray is not None, "no usable reference ray"
    winding = 0
    for i in range(k):
        d, dn = dirs[i], dirs[(i + 1) % k]
        turn = _cross2(d, dn)
        if turn == 0:
            assert _dot2(d, dn) > 0, "ring doubles back"
            continue
        if turn > 0:
            if _cross2(d, ray) > 0 and _cross2(ray, dn) > 0:
                winding += 1
        else:
            if _cross2(d, ray) < 0 and _cross2(ray, dn) < 0:
                winding -= 1
    return winding
