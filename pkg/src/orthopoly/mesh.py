"""Half-edge surface meshes for closed polyhedra.

A SurfaceMesh stores vertices with coordinates and faces as oriented
boundary rings.  Every directed edge (half-edge) must occur exactly once
and its reversal exactly once, so the surface is a closed, consistently
oriented 2-manifold.  Faces may carry extra hole rings; ring 0 is the
outer ring.  The orientation convention is the usual one: the face
interior lies to the left of each directed half-edge when viewed from
the outward-normal side, so outer rings run counterclockwise seen from
outside and hole rings run clockwise.

Meshes are value objects: construct, validate, never mutate.  Operations
that change geometry (outward_orient, transformed, ...) return new meshes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import vec


class MeshError(Exception):
    """Raised for structurally or geometrically invalid meshes."""


@dataclass(frozen=True)
class Vertex:
    id: int
    pos: tuple


class Face:
    """A mesh face: one outer ring plus optional hole rings of vertex ids."""

    __slots__ = ("id", "rings")

    def __init__(self, fid, rings):
        self.id = fid
        self.rings = tuple(tuple(r) for r in rings)

    @property
    def outer(self):
        return self.rings[0]

    def ring_count(self):
        return len(self.rings)

    def __repr__(self):
        return f"Face({self.id}, rings={self.rings})"


class SurfaceMesh:
    """Closed oriented polyhedral surface with exact or float coordinates."""

    def __init__(self, positions, faces, mode="exact", eps=1e-9, _validate=True):
        if mode not in ("exact", "float"):
            raise ValueError(f"unknown arithmetic mode {mode!r}")
        self.mode = mode
        self.eps = eps
        if mode == "exact":
            pts = [tuple(Fraction(c) for c in p) for p in positions]
        else:
            pts = [tuple(float(c) for c in p) for p in positions]
        self.vertices = [Vertex(i, p) for i, p in enumerate(pts)]
        self.faces = [Face(i, rings) for i, rings in enumerate(faces)]
        self._normals = {}
        self._build_maps()
        if _validate:
            self._validate()

    # -- construction ------------------------------------------------

    def _build_maps(self):
        nv = len(self.vertices)
        self._half = {}   # (tail, head) -> (face, ring, pos)
        for f in self.faces:
            seen = set()
            for v in sum(f.rings, ()):  # vertices unique across all rings of a face
                if not (0 <= v < nv):
                    raise MeshError(f"face {f.id} references unknown vertex {v}")
                if v in seen:
                    raise MeshError(f"face {f.id} repeats vertex {v}")
                seen.add(v)
            for r, ring in enumerate(f.rings):
                if len(ring) < 3:
                    raise MeshError(f"face {f.id} ring {r} has fewer than 3 vertices")
                for i, tail in enumerate(ring):
                    head = ring[(i + 1) % len(ring)]
                    if tail == head:
                        raise MeshError(f"face {f.id} has a zero-length edge at vertex {tail}")
                    if (tail, head) in self._half:
                        raise MeshError(
                            f"non-manifold edge ({tail},{head}): directed edge occurs twice "
                            "(duplicate face or inconsistent orientation)")
                    self._half[(tail, head)] = (f.id, r, i)
        self._edges = {}  # (u, v) with u < v -> [halfedge key, halfedge key]
        for (tail, head) in self._half:
            if (head, tail) not in self._half:
                raise MeshError(f"open surface: edge ({tail},{head}) has no twin")
            key = (tail, head) if tail < head else (head, tail)
            self._edges.setdefault(key, []).append((tail, head))
        for key, halves in self._edges.items():
            halves.sort()
            if len(halves) != 2:
                raise MeshError(f"edge {key} does not border exactly 2 faces")

    def _validate(self):
        used = set()
        for f in self.faces:
            for ring in f.rings:
                used.update(ring)
        for v in self.vertices:
            if v.id not in used:
                raise MeshError(f"isolated vertex {v.id}")
        for f in self.faces:
            self._check_planar(f)

    def _near_zero(self, x, scale):
        if self.mode == "exact":
            return x == 0
        return abs(float(x)) <= self.eps * max(1.0, float(scale))

    def _check_planar(self, face):
        n = self._ring_normal(face.outer)
        if vec.is_zero(n) if self.mode == "exact" else vec.fnorm(n) <= self.eps:
            raise MeshError(f"degenerate face {face.id}: zero area outer ring")
        p0 = self.vertices[face.outer[0]].pos
        nf = vec.fnorm(n)
        for ring in face.rings:
            for v in ring:
                d = vec.sub(self.vertices[v].pos, p0)
                if not self._near_zero(vec.dot(d, n), nf * vec.fnorm(d)):
                    raise MeshError(f"face {face.id} is not planar at vertex {v}")
        for r in range(1, len(face.rings)):
            nh = self._ring_normal(face.rings[r])
            c = vec.cross(nh, n)
            if not all(self._near_zero(x, vec.fnorm(nh) * nf) for x in c):
                raise MeshError(f"face {face.id} hole ring {r} is not coplanar with outer ring")
            if not (vec.dot(nh, n) < 0):
                raise MeshError(
                    f"face {face.id} hole ring {r} has the same orientation as the outer ring")

    def _ring_normal(self, ring):
        total = (0, 0, 0) if self.mode == "float" else vec.vec3(0, 0, 0)
        for i, a in enumerate(ring):
            b = ring[(i + 1) % len(ring)]
            total = vec.add(total, vec.cross(self.vertices[a].pos, self.vertices[b].pos))
        return total

    # -- basic queries -----------------------------------------------

    @property
    def vertex_count(self):
        return len(self.vertices)

    @property
    def face_count(self):
        return len(self.faces)

    @property
    def edge_count(self):
        return len(self._edges)

    def positions(self):
        return [v.pos for v in self.vertices]

    def edge_list(self):
        return sorted(self._edges)

    def twin(self, tail, head):
        """Half-edge key of the reversal of (tail, head)."""
        if (head, tail) not in self._half:
            raise MeshError(f"no half-edge ({head},{tail})")
        return (head, tail)

    def half_edge_face(self, tail, head):
        return self._half[(tail, head)]

    def half_edges(self):
        return list(self._half)

    def edge_halfedges(self, u, v):
        key = (u, v) if u < v else (v, u)
        return tuple(self._edges[key])

    def edge_faces(self, u, v):
        """Ids of the two faces bordering the undirected edge (u, v)."""
        return tuple(sorted(self._half[h][0] for h in self.edge_halfedges(u, v)))

    def face_normal(self, fid):
        """Outer-ring normal (unnormalized); outward after outward_orient."""
        if fid not in self._normals:
            self._normals[fid] = self._ring_normal(self.faces[fid].outer)
        return self._normals[fid]

    def has_multi_ring_faces(self):
        return any(f.ring_count() > 1 for f in self.faces)

    def canonical_key(self):
        """Hashable identity on coordinates and face rings, for round trips."""
        return (
            self.mode,
            tuple(v.pos for v in self.vertices),
            tuple(f.rings for f in self.faces),
        )

    # -- derived meshes ----------------------------------------------

    def transformed(self, matrix):
        return SurfaceMesh(
            [vec.mat_vec(matrix, v.pos) for v in self.vertices],
            [f.rings for f in self.faces], mode=self.mode, eps=self.eps)

    def translated(self, t):
        return SurfaceMesh(
            [vec.add(v.pos, t) for v in self.vertices],
            [f.rings for f in self.faces], mode=self.mode, eps=self.eps)


def build_mesh(positions, faces, mode="exact", eps=1e-9):
    """Construct and validate a SurfaceMesh; faces are lists of rings."""
    return SurfaceMesh(positions, faces, mode=mode, eps=eps)


def build_mesh_single(positions, face_cycles, mode="exact", eps=1e-9):
    """Construct a mesh whose faces are given as single outer cycles."""
    return SurfaceMesh(positions, [[cycle] for cycle in face_cycles], mode=mode, eps=eps)


# -- topology -------------------------------------------------------


class _DSU:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra


def graph_components(mesh):
    """Connected components of the vertex-edge graph: (count, partition)."""
    dsu = _DSU(mesh.vertex_count)
    for (u, v) in mesh.edge_list():
        dsu.union(u, v)
    groups = {}
    for v in range(mesh.vertex_count):
        groups.setdefault(dsu.find(v), []).append(v)
    parts = sorted((tuple(sorted(g)) for g in groups.values()), key=lambda g: g[0])
    return len(parts), parts


def surface_components(mesh):
    """Groups of faces connected through shared edges."""
    dsu = _DSU(mesh.face_count)
    for (u, v) in mesh.edge_list():
        f, g = mesh.edge_faces(u, v)
        dsu.union(f, g)
    groups = {}
    for f in range(mesh.face_count):
        groups.setdefault(dsu.find(f), []).append(f)
    return sorted((tuple(sorted(g)) for g in groups.values()), key=lambda g: g[0])


def euler_genus(mesh):
    """Genus of each surface component; refuses faces with hole rings."""
    if mesh.has_multi_ring_faces():
        raise MeshError("genus undefined without ring bridging (mesh has multi-ring faces)")
    genera = []
    for comp in surface_components(mesh):
        verts = set()
        edges = set()
        for fid in comp:
            ring = mesh.faces[fid].outer
            verts.update(ring)
            for i, a in enumerate(ring):
                b = ring[(i + 1) % len(ring)]
                edges.add((a, b) if a < b else (b, a))
        chi = len(verts) - len(edges) + len(comp)
        if (2 - chi) % 2 != 0 or chi > 2:
            raise MeshError(f"corrupt mesh: Euler characteristic {chi} is not 2 - 2g")
        genera.append((2 - chi) // 2)
    return genera


def vertex_degrees(mesh):
    """Number of incident edges per vertex."""
    deg = {v.id: 0 for v in mesh.vertices}
    for (u, v) in mesh.edge_list():
        deg[u] += 1
        deg[v] += 1
    return deg


# -- orientation and volume -----------------------------------------


def signed_volume(mesh):
    """Divergence-theorem volume; positive for outward orientation."""
    total = Fraction(0) if mesh.mode == "exact" else 0.0
    for f in mesh.faces:
        total += _face_volume_term(mesh, f)
    return total


def _face_volume_term(mesh, face):
    sixth = Fraction(1, 6) if mesh.mode == "exact" else (1.0 / 6.0)
    acc = Fraction(0) if mesh.mode == "exact" else 0.0
    for ring in face.rings:
        anchor = mesh.vertices[ring[0]].pos
        total = vec.vec3(0, 0, 0) if mesh.mode == "exact" else (0.0, 0.0, 0.0)
        for i, a in enumerate(ring):
            b = ring[(i + 1) % len(ring)]
            total = vec.add(total, vec.cross(mesh.vertices[a].pos, mesh.vertices[b].pos))
        acc += vec.dot(total, anchor) * sixth
    return acc


def component_signed_volumes(mesh):
    """Signed volume of each face-connected surface component."""
    out = []
    for comp in surface_components(mesh):
        vol = Fraction(0) if mesh.mode == "exact" else 0.0
        for fid in comp:
            vol += _face_volume_term(mesh, mesh.faces[fid])
        out.append(vol)
    return out


def outward_orient(mesh):
    """Flip face rings, per surface component, until signed volume is positive."""
    comps = surface_components(mesh)
    flip = set()
    for comp, vol in zip(comps, component_signed_volumes(mesh)):
        if vol == 0:
            raise MeshError("degenerate solid: zero signed volume")
        if vol < 0:
            flip.update(comp)
    if not flip:
        return mesh
    faces = []
    for f in mesh.faces:
        if f.id in flip:
            faces.append([tuple(reversed(r)) for r in f.rings])
        else:
            faces.append(f.rings)
    return SurfaceMesh([v.pos for v in mesh.vertices], faces, mode=mesh.mode, eps=mesh.eps)
