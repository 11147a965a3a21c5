"""Facial and dihedral angles, classified as multiples of pi/2.

In exact mode classification never evaluates trigonometry: whether an
angle is a right-angle multiple is decided purely by sign tests on dot
and cross products of rational vectors.  Float-mode meshes classify by
comparing the measured angle against k*pi/2 within eps_angle.

Conventions (mesh must be outward-oriented):

* facial angle at vertex v of a ring: interior angle between the rays
  v->prev and v->next measured on the face-interior side; reflex corners
  (hole rings) give values in (pi, 2*pi).
* dihedral angle at an edge: interior angle between the two incident
  faces measured inside the solid, theta = pi - atan2((nf x ng) . u, nf . ng)
  with u the edge direction as traversed on face f.  pi/2 is a convex
  edge, 3*pi/2 a reflex edge, pi means coplanar faces.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

from . import vec
from .mesh import MeshError, graph_components

DEFAULT_EPS_ANGLE = 1e-7

_TWO_PI = 2.0 * math.pi


class AngleError(MeshError):
    """Degenerate angle (0 or 2*pi), or an angle query on bad input."""


@dataclass(frozen=True)
class AngleClass:
    """Angle with its pi/2-multiple classification; k is None when not a multiple."""

    k: int | None
    value: float

    @property
    def is_right_multiple(self):
        return self.k is not None

    def label(self):
        if self.k is not None:
            return f"{self.k}*pi/2"
        return f"{self.value:.6f} rad"


def _classify_float(theta, eps_angle):
    theta = theta % _TWO_PI
    if theta < eps_angle or _TWO_PI - theta < eps_angle:
        raise AngleError("degenerate angle (0 or 2*pi)")
    for k in (1, 2, 3):
        if abs(theta - k * math.pi / 2.0) <= eps_angle:
            return AngleClass(k, theta)
    return AngleClass(None, theta)


def _wrap_positive(theta):
    theta = math.atan2(math.sin(theta), math.cos(theta))
    if theta <= 0.0:
        theta += _TWO_PI
    return theta


def facial_angle(m, fid, ring_index, vid, eps_angle=DEFAULT_EPS_ANGLE):
    """Interior angle of face fid at vertex vid on the given ring."""
    face = m.faces[fid]
    ring = face.rings[ring_index]
    if vid not in ring:
        raise AngleError(f"vertex {vid} is not on face {fid} ring {ring_index}")
    i = ring.index(vid)
    p = m.vertices[ring[i - 1]].pos
    v = m.vertices[vid].pos
    n = m.vertices[ring[(i + 1) % len(ring)]].pos
    a = vec.sub(p, v)
    b = vec.sub(n, v)
    normal = m.face_normal(fid)
    s = vec.dot(vec.cross(b, a), normal)
    c = vec.dot(a, b)
    sf = float(s) / (vec.fnorm(a) * vec.fnorm(b) * vec.fnorm(normal))
    cf = float(c) / (vec.fnorm(a) * vec.fnorm(b))
    theta = _wrap_positive(math.atan2(sf, cf))
    if m.mode == "float":
        return _classify_float(theta, eps_angle)
    if c == 0 and s > 0:
        return AngleClass(1, math.pi / 2.0)
    if s == 0 and c < 0:
        return AngleClass(2, math.pi)
    if c == 0 and s < 0:
        return AngleClass(3, 3.0 * math.pi / 2.0)
    if s == 0 and c > 0:
        raise AngleError(f"degenerate facial angle at face {fid} vertex {vid}")
    return AngleClass(None, theta)


def dihedral_angle(m, u, v, eps_angle=DEFAULT_EPS_ANGLE):
    """Interior dihedral angle at the undirected edge (u, v)."""
    halves = m.edge_halfedges(u, v)
    keyed = sorted(halves, key=lambda h: m.half_edge_face(*h)[0])
    tail, head = keyed[0]
    fid = m.half_edge_face(tail, head)[0]
    gid = m.half_edge_face(*keyed[1])[0]
    nf = m.face_normal(fid)
    ng = m.face_normal(gid)
    d = vec.sub(m.vertices[head].pos, m.vertices[tail].pos)
    s = vec.dot(vec.cross(nf, ng), d)
    c = vec.dot(nf, ng)
    scale = vec.fnorm(nf) * vec.fnorm(ng)
    sf = float(s) / (scale * vec.fnorm(d))
    cf = float(c) / scale
    theta = _wrap_positive(math.pi - math.atan2(sf, cf))
    if m.mode == "float":
        return _classify_float(theta, eps_angle)
    if c == 0 and s > 0:
        return AngleClass(1, math.pi / 2.0)
    if s == 0 and c > 0:
        return AngleClass(2, math.pi)
    if c == 0 and s < 0:
        return AngleClass(3, 3.0 * math.pi / 2.0)
    if s == 0 and c < 0:
        raise AngleError(f"degenerate dihedral (0 or 2*pi) at edge ({u},{v})")
    return AngleClass(None, theta)


@dataclass
class AngleReport:
    """Every facial angle (keyed (face, ring, vertex)) and every dihedral (keyed edge)."""

    facial: dict
    dihedral: dict
    all_facial_right: bool
    all_dihedral_right: bool

    def first_facial_violation(self):
        for key in sorted(self.facial):
            if not self.facial[key].is_right_multiple:
                return key
        return None

    def first_dihedral_violation(self):
        for key in sorted(self.dihedral):
            if not self.dihedral[key].is_right_multiple:
                return key
        return None

    def dihedral_ks(self):
        return {a.k for a in self.dihedral.values()}

    def to_dict(self):
        return {
            "all_facial_right": self.all_facial_right,
            "all_dihedral_right": self.all_dihedral_right,
            "facial": [
                {"face": f, "ring": r, "vertex": v, "k": a.k, "value": a.value}
                for (f, r, v), a in sorted(self.facial.items())
            ],
            "dihedral": [
                {"u": u, "v": v, "k": a.k, "value": a.value}
                for (u, v), a in sorted(self.dihedral.items())
            ],
        }

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2)

    def to_text(self):
        lines = [
            f"all facial angles right multiples: {self.all_facial_right}",
            f"all dihedral angles right multiples: {self.all_dihedral_right}",
        ]
        for (f, r, v), a in sorted(self.facial.items()):
            lines.append(f"facial  face {f} ring {r} vertex {v}: {a.label()}")
        for (u, v), a in sorted(self.dihedral.items()):
            lines.append(f"dihedral edge ({u},{v}): {a.label()}")
        return "\n".join(lines)


def angle_report(m, eps_angle=DEFAULT_EPS_ANGLE):
    """Classify every facial and dihedral angle of the mesh."""
    facial = {}
    for f in m.faces:
        for r, ring in enumerate(f.rings):
            for vid in ring:
                facial[(f.id, r, vid)] = facial_angle(m, f.id, r, vid, eps_angle)
    dihedral = {}
    for (u, v) in m.edge_list():
        dihedral[(u, v)] = dihedral_angle(m, u, v, eps_angle)
    return AngleReport(
        facial=facial,
        dihedral=dihedral,
        all_facial_right=all(a.is_right_multiple for a in facial.values()),
        all_dihedral_right=all(a.is_right_multiple for a in dihedral.values()),
    )


def hypothesis_holds(m, eps_angle=DEFAULT_EPS_ANGLE):
    """Connected graph and every angle a right multiple."""
    count, _ = graph_components(m)
    if count != 1:
        return False
    rep = angle_report(m, eps_angle)
    return rep.all_facial_right and rep.all_dihedral_right
