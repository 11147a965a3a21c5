"""Deciding whether a polyhedron is orthogonal (axis-alignable by rotation).

Two routes are provided.  ``is_orthogonal`` works directly from the set
of lines spanned by face normals: the mesh is orthogonal iff those lines
number exactly three, are pairwise perpendicular, and every edge runs
parallel to one of them.  ``propagate_alignment`` instead seeds a frame
from one face and walks face adjacencies, verifying that each face met
is perpendicular to the seeded frame; it first checks the hypotheses
(connected graph, every facial and dihedral angle a right multiple) and
reports the violated one as the obstruction when they fail.

The witness is a 3x3 matrix with mutually orthogonal rows and positive
determinant that maps the frame lines onto the coordinate axes.  Rows
are unit length whenever their norms are rational, in which case the
witness is an exact rotation; otherwise rows keep an integer scale,
which still aligns every normal and edge with an axis.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from . import vec
from .angles import DEFAULT_EPS_ANGLE, angle_report
from .mesh import graph_components
from .offio import format_scalar


@dataclass
class OrthoVerdict:
    orthogonal: bool
    witness: tuple | None
    obstruction: str | None
    witness_is_rotation: bool = False

    def to_dict(self):
        w = None
        if self.witness is not None:
            w = [[format_scalar(c) for c in row] for row in self.witness]
        return {
            "orthogonal": self.orthogonal,
            "witness": w,
            "witness_is_rotation": self.witness_is_rotation,
            "obstruction": self.obstruction,
        }

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2)

    def to_text(self):
        lines = [f"orthogonal: {self.orthogonal}"]
        if self.witness is not None:
            kind = "rotation" if self.witness_is_rotation else "scaled frame map"
            lines.append(f"witness ({kind}):")
            for row in self.witness:
                lines.append("  [" + ", ".join(format_scalar(c) for c in row) + "]")
        if self.obstruction:
            lines.append(f"obstruction: {self.obstruction}")
        return "\n".join(lines)


def _edge_dir(m, u, v):
    return vec.sub(m.vertices[v].pos, m.vertices[u].pos)


# -- exact helpers ---------------------------------------------------


def _witness_from_rows(rows):
    """Orthogonal integer rows -> (matrix, is_rotation) with det > 0."""
    unit_rows = []
    all_unit = True
    for row in rows:
        n2 = Fraction(vec.norm2(row))
        r = vec.exact_sqrt(n2)
        if r is None:
            unit_rows.append(tuple(Fraction(c) for c in row))
            all_unit = False
        else:
            unit_rows.append(tuple(Fraction(c) / r for c in row))
    m = tuple(unit_rows)
    if vec.det3(m) < 0:
        m = (m[0], m[1], vec.neg(m[2]))
    return m, all_unit


def _lines_exact(m):
    lines = []
    for f in m.faces:
        line = vec.canonical_line(m.face_normal(f.id))
        if line not in lines:
            lines.append(line)
    return lines


def _lines_float(m):
    lines = []
    for f in m.faces:
        n = vec.funit(m.face_normal(f.id))
        for existing in lines:
            if abs(vec.dot(existing, n)) >= 1.0 - m.eps:
                break
        else:
            lines.append(n)
    return lines


def is_orthogonal(m):
    """Direct decision from the distinct lines spanned by face normals."""
    exact = m.mode == "exact"
    lines = _lines_exact(m) if exact else _lines_float(m)
    if len(lines) != 3:
        return OrthoVerdict(
            False, None,
            f"face normals span {len(lines)} distinct lines, not 3")
    for i in range(3):
        for j in range(i + 1, 3):
            d = vec.dot(lines[i], lines[j])
            perp = (d == 0) if exact else abs(d) <= m.eps
            if not perp:
                return OrthoVerdict(
                    False, None,
                    f"normal lines {lines[i]} and {lines[j]} are not perpendicular")
    for (u, v) in m.edge_list():
        d = _edge_dir(m, u, v)
        if exact:
            ok = any(vec.is_zero(vec.cross(d, line)) for line in lines)
        else:
            du = vec.funit(d)
            ok = any(abs(vec.dot(du, line)) >= 1.0 - m.eps for line in lines)
        if not ok:
            return OrthoVerdict(
                False, None,
                f"edge ({u},{v}) is not parallel to any of the 3 normal lines")
    ordered = sorted(lines)
    if exact:
        witness, is_rot = _witness_from_rows(ordered)
    else:
        witness = tuple(ordered)
        if vec.det3(witness) < 0:
            witness = (witness[0], witness[1], vec.neg(witness[2]))
        is_rot = True
    return OrthoVerdict(True, witness, None, witness_is_rotation=is_rot)


def _parallel(m, a, b):
    if m.mode == "exact":
        return vec.is_zero(vec.cross(a, b))
    return abs(abs(vec.dot(vec.funit(a), vec.funit(b))) - 1.0) <= m.eps


def propagate_alignment(m, eps_angle=DEFAULT_EPS_ANGLE):
    """Constructive check: seed a frame at one face, then walk adjacencies.

    Preconditions (connected graph, all angles right multiples) are
    verified first; when one fails it is reported as the obstruction and
    the verdict falls back to the direct decider so callers still learn
    whether the mesh happens to be orthogonal.
    """
    count, _ = graph_components(m)
    obstruction = None
    if count != 1:
        obstruction = f"graph disconnected ({count} components)"
    else:
        rep = angle_report(m, eps_angle)
        if not rep.all_facial_right:
            f, r, v = rep.first_facial_violation()
            a = rep.facial[(f, r, v)]
            obstruction = (f"facial angle not a multiple of pi/2 at face {f} "
                           f"ring {r} vertex {v} ({a.value:.6f} rad)")
        elif not rep.all_dihedral_right:
            u, v = rep.first_dihedral_violation()
            a = rep.dihedral[(u, v)]
            obstruction = (f"dihedral angle not a multiple of pi/2 at edge ({u},{v}) "
                           f"({a.value:.6f} rad)")
    if obstruction is not None:
        direct = is_orthogonal(m)
        return OrthoVerdict(direct.orthogonal, direct.witness,
                            f"hypothesis not met: {obstruction}",
                            witness_is_rotation=direct.witness_is_rotation)

    f0 = m.faces[0]
    b3 = m.face_normal(f0.id)
    tail, head = f0.outer[0], f0.outer[1]
    b1 = _edge_dir(m, tail, head)
    b2 = vec.cross(b3, b1)
    frame = (b1, b2, b3)

    # BFS over face adjacency from the seed, checking every face normal
    # and every crossed edge against the frame lines.
    visited = {f0.id}
    queue = [f0.id]
    while queue:
        fid = queue.pop(0)
        face = m.faces[fid]
        if not any(_parallel(m, m.face_normal(fid), b) for b in frame):
            return OrthoVerdict(
                False, None,
                f"propagation contradiction: face {fid} normal is outside the seeded frame")
        for ring in face.rings:
            for i, a in enumerate(ring):
                b = ring[(i + 1) % len(ring)]
                d = _edge_dir(m, a, b)
                if not any(_parallel(m, d, bb) for bb in frame):
                    return OrthoVerdict(
                        False, None,
                        f"propagation contradiction: edge ({a},{b}) is not frame-parallel")
                for other in m.edge_faces(a, b):
                    if other not in visited:
                        visited.add(other)
                        queue.append(other)
    if m.mode == "exact":
        rows = tuple(vec.primitive(b) for b in frame)
        witness, is_rot = _witness_from_rows(rows)
    else:
        witness = tuple(vec.funit(b) for b in frame)
        is_rot = True
    return OrthoVerdict(True, witness, None, witness_is_rotation=is_rot)


def theorem2_check(m, eps_angle=DEFAULT_EPS_ANGLE):
    """True iff (connected and all angles right multiples) implies orthogonal."""
    count, _ = graph_components(m)
    if count != 1:
        return True
    rep = angle_report(m, eps_angle)
    if not (rep.all_facial_right and rep.all_dihedral_right):
        return True
    return is_orthogonal(m).orthogonal and propagate_alignment(m, eps_angle).orthogonal


def witness_aligns(m, witness):
    """Exact check that the witness maps every edge onto a coordinate axis."""
    for (u, v) in m.edge_list():
        image = vec.mat_vec(witness, _edge_dir(m, u, v))
        nonzero = sum(1 for c in image if c != 0)
        if nonzero != 1:
            return False
    for f in m.faces:
        image = vec.mat_vec(witness, m.face_normal(f.id))
        nonzero = sum(1 for c in image if c != 0)
        if nonzero != 1:
            return False
    return True
