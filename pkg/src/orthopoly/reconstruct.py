"""Reconstruction of orthogonal polyhedra from combinatorics plus lengths.

Input is a combinatorial polyhedron: abstract vertices, edges carrying a
positive rational length and a convex/reflex dihedral label (pi/2 or
3*pi/2; flat edges are deliberately unrepresentable), and oriented face
cycles (counterclockwise seen from outside).  The solver assigns a
signed coordinate axis to every face normal and every directed edge,
subject to:

* an edge direction is perpendicular to both incident face normals;
* the two traversals of an edge get opposite directions;
* across an edge with label sign s (+1 convex, -1 reflex) the neighbor
  normal satisfies ng = s * (u x nf), equivalently u = s * (nf x ng);
* consecutive edges of a face cycle never reverse (interior facial
  angles are strictly between 0 and 2*pi);
* every face cycle closes: the direction-weighted lengths sum to zero.

A gauge pins the lowest face's normal to +Z and its first edge to +X,
which exhausts the 24 axis-preserving rotations, so counting solutions
is meaningful.  The search is exhaustive worklist propagation plus
backtracking and returns every consistent assignment.  Surviving frames
are integrated into coordinates and checked for genuine embedding
(distinct vertices, simple faces, no face/edge interpenetration,
positive volume).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from . import rectpoly, vec
from .angles import dihedral_angle
from .mesh import SurfaceMesh, graph_components, outward_orient
from .orthotest import is_orthogonal

CONVEX = "convex"
REFLEX = "reflex"

# Signed axes +X -X +Y -Y +Z -Z; negation toggles the low bit.
AXIS_VECS = ((1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1))
AXIS_NAMES = ("+X", "-X", "+Y", "-Y", "+Z", "-Z")


def axis_neg(a):
    return a ^ 1


def _build_cross_table():
    table = {}
    for a in range(6):
        for b in range(6):
            c = vec.cross(AXIS_VECS[a], AXIS_VECS[b])
            if c == (0, 0, 0):
                table[(a, b)] = None
            else:
                table[(a, b)] = AXIS_VECS.index(c)
    return table


_CROSS = _build_cross_table()


def axis_cross(a, b):
    return _CROSS[(a, b)]


def axis_dot(a, b):
    return vec.dot(AXIS_VECS[a], AXIS_VECS[b])


class CPAError(ValueError):
    """Malformed or invalid combinatorial polyhedron input."""


class SolverInternalError(RuntimeError):
    """A solver invariant failed; indicates a bug, not bad input."""


@dataclass(frozen=True)
class CEdge:
    u: int
    v: int
    length: Fraction
    label: str


class CombinatorialPoly:
    """Abstract polyhedron: edge lengths and dihedral labels, no coordinates."""

    def __init__(self, n_vertices, edges, faces):
        self.n_vertices = n_vertices
        norm_edges = []
        for e in edges:
            u, v = (e.u, e.v) if e.u < e.v else (e.v, e.u)
            if e.label not in (CONVEX, REFLEX):
                raise CPAError(f"bad label {e.label!r} on edge ({u},{v})")
            norm_edges.append(CEdge(u, v, Fraction(e.length), e.label))
        norm_edges.sort(key=lambda e: (e.u, e.v))
        self.edges = tuple(norm_edges)
        self.faces = tuple(tuple(cycle) for cycle in faces)
        self.edge_index = {}
        for i, e in enumerate(self.edges):
            if (e.u, e.v) in self.edge_index:
                raise CPAError(f"duplicate edge ({e.u},{e.v})")
            self.edge_index[(e.u, e.v)] = i
        self.structural_errors = []
        self._build_incidence()

    def _build_incidence(self):
        directed = {}
        self.face_edges = []  # per face: list of (edge idx or None, forward bool)
        for fi, cycle in enumerate(self.faces):
            entries = []
            if len(cycle) < 3:
                self.structural_errors.append(f"face {fi} has fewer than 3 vertices")
            if len(set(cycle)) != len(cycle):
                self.structural_errors.append(f"face {fi} repeats a vertex")
            for i, a in enumerate(cycle):
                b = cycle[(i + 1) % len(cycle)]
                key = (a, b) if a < b else (b, a)
                idx = self.edge_index.get(key)
                if idx is None:
                    self.structural_errors.append(
                        f"face {fi} uses ({a},{b}) which is not a listed edge")
                if (a, b) in directed:
                    self.structural_errors.append(
                        f"directed edge ({a},{b}) appears in two face cycles")
                directed[(a, b)] = (fi, i)
                entries.append((idx, a < b))
            self.face_edges.append(entries)
        self.directed = directed
        self.edge_sides = [[] for _ in self.edges]  # per edge: [(face, pos)] x2
        for (a, b), (fi, i) in sorted(directed.items()):
            key = (a, b) if a < b else (b, a)
            idx = self.edge_index.get(key)
            if idx is not None:
                self.edge_sides[idx].append((fi, i))
        for i, e in enumerate(self.edges):
            if len(self.edge_sides[i]) != 2:
                self.structural_errors.append(
                    f"edge ({e.u},{e.v}) borders {len(self.edge_sides[i])} face "
                    "traversals instead of 2")

    # -- CPA text format ----------------------------------------------

    @classmethod
    def parse_cpa(cls, text):
        lines = []
        for i, raw in enumerate(text.splitlines(), start=1):
            s = raw.split("#", 1)[0].strip()
            if s:
                lines.append((i, s))
        if not lines or lines[0][1].split() != ["CPA", "1"]:
            raise CPAError("missing 'CPA 1' header")
        if len(lines) < 2:
            raise CPAError("missing counts line")
        try:
            nv, ne, nf = (int(t) for t in lines[1][1].split())
        except ValueError:
            raise CPAError(f"bad counts line {lines[1][1]!r}") from None
        body = lines[2:]
        if len(body) != ne + nf:
            raise CPAError(f"expected {ne + nf} data lines, found {len(body)}")
        edges = []
        for lineno, line in body[:ne]:
            toks = line.split()
            if len(toks) != 4:
                raise CPAError(f"line {lineno}: edge line needs 'u v length label'")
            try:
                u, v = int(toks[0]), int(toks[1])
                length = Fraction(toks[2])
            except (ValueError, ZeroDivisionError):
                raise CPAError(f"line {lineno}: bad edge line {line!r}") from None
            if toks[3] not in (CONVEX, REFLEX):
                raise CPAError(f"line {lineno}: label must be convex or reflex")
            edges.append(CEdge(u, v, length, toks[3]))
        faces = []
        for lineno, line in body[ne:]:
            try:
                vals = [int(t) for t in line.split()]
            except ValueError:
                raise CPAError(f"line {lineno}: bad face line {line!r}") from None
            if not vals or len(vals) != vals[0] + 1:
                raise CPAError(f"line {lineno}: face line count mismatch")
            faces.append(vals[1:])
        cp = cls(nv, edges, faces)
        if any(not (0 <= e.u < nv and 0 <= e.v < nv) for e in cp.edges):
            raise CPAError("edge endpoint out of range")
        return cp

    def to_cpa(self):
        out = ["CPA 1", f"{self.n_vertices} {len(self.edges)} {len(self.faces)}"]
        for e in self.edges:
            num = e.length
            s = str(num.numerator) if num.denominator == 1 else f"{num.numerator}/{num.denominator}"
            out.append(f"{e.u} {e.v} {s} {e.label}")
        for cycle in self.faces:
            out.append(" ".join(str(n) for n in (len(cycle), *cycle)))
        return "\n".join(out) + "\n"

    def degrees(self):
        deg = {v: 0 for v in range(self.n_vertices)}
        for e in self.edges:
            deg[e.u] += 1
            deg[e.v] += 1
        return deg


@dataclass
class ValidationReport:
    ok: bool
    errors: list
    warnings: list


def validate_input(cp):
    """Manifoldness, connectivity, genus 0, positive lengths, degree flags."""
    errors = list(cp.structural_errors)
    for e in cp.edges:
        if e.length <= 0:
            errors.append(f"edge ({e.u},{e.v}) has nonpositive length {e.length}")
    parent = list(range(cp.n_vertices))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in cp.edges:
        if 0 <= e.u < cp.n_vertices and 0 <= e.v < cp.n_vertices:
            ra, rb = find(e.u), find(e.v)
            if ra != rb:
                parent[rb] = ra
        else:
            errors.append(f"edge ({e.u},{e.v}) endpoint out of range")
    roots = {find(v) for v in range(cp.n_vertices)}
    if len(roots) != 1:
        errors.append(f"graph disconnected ({len(roots)} components)")
    chi = cp.n_vertices - len(cp.edges) + len(cp.faces)
    if chi != 2:
        errors.append(f"genus != 0 (V - E + F = {chi}, expected 2)")
    warnings = []
    for v, d in sorted(cp.degrees().items()):
        if d == 5 or d > 6:
            warnings.append(
                f"vertex {v} has degree {d}; no orthogonal polyhedron has such a vertex")
    return ValidationReport(ok=not errors, errors=errors, warnings=warnings)


@dataclass(frozen=True)
class FrameAssignment:
    """Face normals and canonical edge directions as signed-axis codes."""

    normals: tuple
    dirs: tuple

    def normal_vec(self, fid):
        return AXIS_VECS[self.normals[fid]]

    def dir_vec(self, edge_idx):
        return AXIS_VECS[self.dirs[edge_idx]]

    def sort_key(self):
        return (self.normals, self.dirs)


@dataclass
class SolveStats:
    label_fails: int = 0
    closure_fails: int = 0
    solutions: int = 0


class _Contradiction(Exception):
    def __init__(self, kind):
        self.kind = kind


_LABEL_SIGN = {CONVEX: 1, REFLEX: -1}


class _Solver:
    def __init__(self, cp, enforce_closure=True):
        self.cp = cp
        self.enforce_closure = enforce_closure
        self.nf = len(cp.faces)
        self.ne = len(cp.edges)
        self.normals = [None] * self.nf
        self.dirs = [None] * self.ne
        self.face_sum = [[Fraction(0)] * 3 for _ in range(self.nf)]
        self.face_left = [Fraction(0)] * self.nf
        self.face_open = [0] * self.nf
        for fi, entries in enumerate(cp.face_edges):
            for idx, _fwd in entries:
                self.face_left[fi] += cp.edges[idx].length
                self.face_open[fi] += 1
        self.trail = []
        self.stats = SolveStats()
        self.solutions = []
        self.bfs_order = self._face_bfs_order()

    def _face_bfs_order(self):
        adj = [[] for _ in range(self.nf)]
        for sides in self.cp.edge_sides:
            (f1, _), (f2, _) = sides
            adj[f1].append(f2)
            adj[f2].append(f1)
        order, seen = [], set()
        queue = [0]
        seen.add(0)
        while queue:
            f = queue.pop(0)
            order.append(f)
            for g in adj[f]:
                if g not in seen:
                    seen.add(g)
                    queue.append(g)
        for f in range(self.nf):  # disconnected inputs still get an order
            if f not in seen:
                order.append(f)
        return order

    # traversed direction of cycle position i on face f, given canonical code
    def _traversed(self, fi, pos):
        idx, fwd = self.cp.face_edges[fi][pos]
        code = self.dirs[idx]
        if code is None:
            return None
        return code if fwd else axis_neg(code)

    def _set_normal(self, fi, code, queue):
        cur = self.normals[fi]
        if cur is not None:
            if cur != code:
                raise _Contradiction("label")
            return
        self.normals[fi] = code
        self.trail.append(("n", fi))
        queue.append(("face", fi))

    def _set_dir(self, idx, code, queue):
        cur = self.dirs[idx]
        if cur is not None:
            if cur != code:
                raise _Contradiction("label")
            return
        self.dirs[idx] = code
        self.trail.append(("d", idx))
        e = self.cp.edges[idx]
        for (fi, _pos) in self.cp.edge_sides[idx]:
            s = self.face_sum[fi]
            traversed = self._traversed_on(idx, fi)
            v = AXIS_VECS[traversed]
            for c in range(3):
                s[c] += e.length * v[c]
            self.face_left[fi] -= e.length
            self.face_open[fi] -= 1
            self.trail.append(("f", fi, idx))
            if self.enforce_closure:
                self._closure_check(fi)
        queue.append(("edge", idx))

    def _traversed_on(self, idx, fi):
        for pos, (eidx, fwd) in enumerate(self.cp.face_edges[fi]):
            if eidx == idx:
                return self.dirs[idx] if fwd else axis_neg(self.dirs[idx])
        raise SolverInternalError(f"edge {idx} not on face {fi}")

    def _closure_check(self, fi):
        s = self.face_sum[fi]
        left = self.face_left[fi]
        if self.face_open[fi] == 0:
            if any(c != 0 for c in s):
                raise _Contradiction("closure")
        else:
            if any(abs(c) > left for c in s):
                raise _Contradiction("closure")

    def _undo(self, mark):
        while len(self.trail) > mark:
            item = self.trail.pop()
            if item[0] == "n":
                self.normals[item[1]] = None
            elif item[0] == "d":
                self.dirs[item[1]] = None
            else:
                _, fi, idx = item
                e = self.cp.edges[idx]
                traversed = self._traversed_on(idx, fi)
                v = AXIS_VECS[traversed]
                s = self.face_sum[fi]
                for c in range(3):
                    s[c] -= e.length * v[c]
                self.face_left[fi] += e.length
                self.face_open[fi] += 1

    def _propagate(self, queue):
        while queue:
            kind, ident = queue.pop(0)
            if kind == "face":
                fi = ident
                n = self.normals[fi]
                for pos, (idx, fwd) in enumerate(self.cp.face_edges[fi]):
                    if self.dirs[idx] is not None:
                        traversed = self._traversed_on(idx, fi)
                        if axis_dot(traversed, n) != 0:
                            raise _Contradiction("label")
                        self._rule_neighbor_normal(idx, queue)
                    else:
                        self._rule_forced_dir(idx, queue)
            else:
                idx = ident
                self._check_ring_reversal(idx)
                for (fi, _pos) in self.cp.edge_sides[idx]:
                    n = self.normals[fi]
                    if n is not None:
                        traversed = self._traversed_on(idx, fi)
                        if axis_dot(traversed, n) != 0:
                            raise _Contradiction("label")
                self._rule_neighbor_normal(idx, queue)

    def _rule_forced_dir(self, idx, queue):
        """Both incident normals known: the edge direction is forced."""
        (f1, _), (f2, _) = self.cp.edge_sides[idx]
        n1, n2 = self.normals[f1], self.normals[f2]
        if n1 is None or n2 is None:
            return
        e = self.cp.edges[idx]
        s = _LABEL_SIGN[e.label]
        crossed = axis_cross(n1, n2)
        if crossed is None:
            raise _Contradiction("label")
        traversed_on_f1 = crossed if s == 1 else axis_neg(crossed)
        _idx, fwd = self._entry_for(idx, f1)
        code = traversed_on_f1 if fwd else axis_neg(traversed_on_f1)
        self._set_dir(idx, code, queue)

    def _entry_for(self, idx, fi):
        for (eidx, fwd) in self.cp.face_edges[fi]:
            if eidx == idx:
                return eidx, fwd
        raise SolverInternalError(f"edge {idx} not on face {fi}")

    def _rule_neighbor_normal(self, idx, queue):
        """Edge direction plus one normal forces the other normal."""
        if self.dirs[idx] is None:
            return
        (f1, _), (f2, _) = self.cp.edge_sides[idx]
        e = self.cp.edges[idx]
        s = _LABEL_SIGN[e.label]
        for fa, fb in ((f1, f2), (f2, f1)):
            na = self.normals[fa]
            if na is None or self.normals[fb] is not None:
                continue
            u = self._traversed_on(idx, fa)
            crossed = axis_cross(u, na)
            if crossed is None:
                raise _Contradiction("label")
            nb = crossed if s == 1 else axis_neg(crossed)
            self._set_normal(fb, nb, queue)
        # and re-run the forced-dir rule in case both normals became known
        self._rule_forced_dir(idx, queue)

    def _check_ring_reversal(self, idx):
        for (fi, pos) in self.cp.edge_sides[idx]:
            entries = self.cp.face_edges[fi]
            k = len(entries)
            cur = self._traversed(fi, pos)
            prev = self._traversed(fi, (pos - 1) % k)
            nxt = self._traversed(fi, (pos + 1) % k)
            if prev is not None and cur is not None and cur == axis_neg(prev):
                raise _Contradiction("label")
            if nxt is not None and cur is not None and nxt == axis_neg(cur):
                raise _Contradiction("label")

    def _branch_edge(self):
        for fi in self.bfs_order:
            if self.normals[fi] is None:
                continue
            for pos, (idx, _fwd) in enumerate(self.cp.face_edges[fi]):
                if self.dirs[idx] is None:
                    return fi, pos, idx
        return None

    def _candidates(self, fi, pos, idx):
        n = self.normals[fi]
        entries = self.cp.face_edges[fi]
        k = len(entries)
        prev = self._traversed(fi, (pos - 1) % k)
        nxt = self._traversed(fi, (pos + 1) % k)
        out = []
        for code in range(6):
            if axis_dot(code, n) != 0:
                continue
            if prev is not None and code == axis_neg(prev):
                continue
            if nxt is not None and nxt == axis_neg(code):
                continue
            out.append(code)
        return out

    def run(self):
        queue = []
        try:
            self._set_normal(0, 4, queue)  # +Z
            idx0, fwd0 = self.cp.face_edges[0][0]
            code0 = 0 if fwd0 else 1  # +X traversed on face 0
            self._set_dir(idx0, code0, queue)
            self._propagate(queue)
        except _Contradiction as c:
            self._count(c)
            return
        self._search()

    def _count(self, c):
        if c.kind == "closure":
            self.stats.closure_fails += 1
        else:
            self.stats.label_fails += 1

    def _winding_ok(self, fi):
        """Face cycle must run counterclockwise around its assigned normal.

        For a closed cycle with edge vectors e_1..e_k the vector area is
        (1/2) * sum_{l<i} e_l x e_i; its dot with the outward normal must
        be positive, otherwise the assignment is the inside-out mirror.
        """
        entries = self.cp.face_edges[fi]
        acc = vec.vec3(0, 0, 0)
        prefix = vec.vec3(0, 0, 0)
        for pos, (idx, _fwd) in enumerate(entries):
            e = self.cp.edges[idx]
            step = vec.scale(
                tuple(Fraction(c) for c in AXIS_VECS[self._traversed(fi, pos)]),
                e.length)
            acc = vec.add(acc, vec.cross(prefix, step))
            prefix = vec.add(prefix, step)
        n = AXIS_VECS[self.normals[fi]]
        return vec.dot(acc, n) > 0

    def _search(self):
        pick = self._branch_edge()
        if pick is None:
            if any(n is None for n in self.normals) or any(d is None for d in self.dirs):
                raise SolverInternalError("no branchable edge but assignment incomplete")
            if self.enforce_closure:
                for fi in range(self.nf):
                    if any(c != 0 for c in self.face_sum[fi]):
                        raise SolverInternalError("closure violated at a complete leaf")
                    if not self._winding_ok(fi):
                        self.stats.closure_fails += 1
                        return
            self.stats.solutions += 1
            self.solutions.append(FrameAssignment(tuple(self.normals), tuple(self.dirs)))
            return
        fi, pos, idx = pick
        _e, fwd = self._entry_for(idx, fi)
        for traversed in self._candidates(fi, pos, idx):
            code = traversed if fwd else axis_neg(traversed)
            mark = len(self.trail)
            queue = []
            try:
                self._set_dir(idx, code, queue)
                self._propagate(queue)
            except _Contradiction as c:
                self._count(c)
                self._undo(mark)
                continue
            self._search()
            self._undo(mark)


def solve_frames(cp, enforce_closure=True):
    """All gauge-fixed frame assignments consistent with labels (and closure)."""
    rep = validate_input(cp)
    if not rep.ok:
        raise CPAError("; ".join(rep.errors))
    solver = _Solver(cp, enforce_closure=enforce_closure)
    solver.run()
    solver.solutions.sort(key=FrameAssignment.sort_key)
    return solver.solutions, solver.stats


def integrate_coordinates(cp, frame):
    """Walk the vertex graph turning directions and lengths into coordinates."""
    adj = {}
    for i, e in enumerate(cp.edges):
        adj.setdefault(e.u, []).append((e.v, i, 1))
        adj.setdefault(e.v, []).append((e.u, i, -1))
    coords = [None] * cp.n_vertices
    coords[0] = vec.vec3(0, 0, 0)
    queue = [0]
    while queue:
        v = queue.pop(0)
        for (w, idx, sign) in sorted(adj.get(v, ())):
            e = cp.edges[idx]
            step = vec.scale(
                tuple(Fraction(c) for c in frame.dir_vec(idx)), sign * e.length)
            target = vec.add(coords[v], step)
            if coords[w] is None:
                coords[w] = target
                queue.append(w)
            elif coords[w] != target:
                raise SolverInternalError(
                    f"cycle inconsistency at edge ({e.u},{e.v}); face closures "
                    "should have prevented this")
    if any(c is None for c in coords):
        raise SolverInternalError("integration did not reach every vertex")
    mins = tuple(min(c[i] for c in coords) for i in range(3))
    return [vec.sub(c, mins) for c in coords]


# -- embedding -------------------------------------------------------


def _face_plane(coords, cycle, fi):
    pts = [coords[v] for v in cycle]
    const_axes = [ax for ax in range(3) if len({p[ax] for p in pts}) == 1]
    if len(const_axes) != 1:
        return None
    return const_axes[0], pts[0][const_axes[0]]


def _project(coords, cycle, drop_axis):
    keep = [ax for ax in range(3) if ax != drop_axis]
    return [(coords[v][keep[0]], coords[v][keep[1]]) for v in cycle]


def check_embedding(cp, coords):
    """None when coords embed cp as a genuine surface; else a violation message."""
    seen = {}
    for v, p in enumerate(coords):
        if p in seen:
            return f"vertices {seen[p]} and {v} share position {p}"
        seen[p] = v

    planes = []
    rings2d = []
    for fi, cycle in enumerate(cp.faces):
        plane = _face_plane(coords, cycle, fi)
        if plane is None:
            return f"face {fi} does not lie in an axis-perpendicular plane"
        planes.append(plane)
        ring = _project(coords, cycle, plane[0])
        try:
            ok, msg = rectpoly.ring_is_simple(ring)
        except rectpoly.RectPolyError as exc:
            return f"face {fi}: {exc}"
        if not ok:
            return f"face {fi} self-intersects: {msg}"
        rings2d.append(ring)

    # volume
    total = Fraction(0)
    for fi, cycle in enumerate(cp.faces):
        anchor = coords[cycle[0]]
        acc = vec.vec3(0, 0, 0)
        for i, a in enumerate(cycle):
            b = cycle[(i + 1) % len(cycle)]
            acc = vec.add(acc, vec.cross(coords[a], coords[b]))
        total += vec.dot(acc, anchor) / 6
    if total <= 0:
        return f"nonpositive signed volume {total}"

    # face pairs
    for fi in range(len(cp.faces)):
        for gj in range(fi + 1, len(cp.faces)):
            msg = _face_pair_violation(cp, coords, planes, rings2d, fi, gj)
            if msg:
                return msg

    # edge pairs
    for i in range(len(cp.edges)):
        for j in range(i + 1, len(cp.edges)):
            msg = _edge_pair_violation(cp, coords, i, j)
            if msg:
                return msg

    # vertices against non-incident faces
    for v in range(cp.n_vertices):
        for fi, cycle in enumerate(cp.faces):
            if v in cycle:
                continue
            ax, off = planes[fi]
            if coords[v][ax] != off:
                continue
            keep = [a for a in range(3) if a != ax]
            pt = (coords[v][keep[0]], coords[v][keep[1]])
            if rectpoly.point_in_ring(pt, rings2d[fi]) != "out":
                return f"vertex {v} lies on face {fi}"
    return None


def _face_pair_violation(cp, coords, planes, rings2d, fi, gj):
    (ax1, c1), (ax2, c2) = planes[fi], planes[gj]
    if ax1 == ax2:
        if c1 != c2:
            return None
        if rectpoly.rings_interior_overlap(rings2d[fi], rings2d[gj]):
            return f"faces {fi} and {gj} overlap in the same plane"
        return None
    # perpendicular planes: compare traces along the intersection line
    free_axis = next(a for a in range(3) if a not in (ax1, ax2))

    def trace(face_idx, plane_axis, plane_off, other_axis, other_off):
        keep = [a for a in range(3) if a != plane_axis]
        ring = rings2d[face_idx]
        which = "x" if keep[0] == other_axis else "y"
        return rectpoly.ring_line_trace(ring, which, other_off)

    tf = trace(fi, ax1, c1, ax2, c2)
    tg = trace(gj, ax2, c2, ax1, c1)
    both = rectpoly.intervals_intersection(tf, tg)
    if not both:
        return None
    allowed = []
    shared_vertices = set(cp.faces[fi]) & set(cp.faces[gj])
    for idx, e in enumerate(cp.edges):
        side_faces = {f for (f, _p) in cp.edge_sides[idx]}
        if side_faces == {fi, gj}:
            lo = coords[e.u][free_axis]
            hi = coords[e.v][free_axis]
            allowed.append((min(lo, hi), max(lo, hi)))
    for v in shared_vertices:
        if coords[v][ax1] == c1 and coords[v][ax2] == c2:
            t = coords[v][free_axis]
            allowed.append((t, t))
    if not rectpoly.intervals_covered(both, allowed):
        return (f"faces {fi} and {gj} intersect beyond their shared boundary "
                f"(line {('x', 'y', 'z')[ax1]}={c1}, {('x', 'y', 'z')[ax2]}={c2})")
    return None


def _edge_pair_violation(cp, coords, i, j):
    e1, e2 = cp.edges[i], cp.edges[j]
    p1, q1 = coords[e1.u], coords[e1.v]
    p2, q2 = coords[e2.u], coords[e2.v]
    d1 = vec.sub(q1, p1)
    d2 = vec.sub(q2, p2)
    ax1 = next(a for a in range(3) if d1[a] != 0)
    ax2 = next(a for a in range(3) if d2[a] != 0)
    shared = {e1.u, e1.v} & {e2.u, e2.v}
    shared_pts = {coords[v] for v in shared}
    if ax1 == ax2:
        other = [a for a in range(3) if a != ax1]
        if any(p1[a] != p2[a] for a in other):
            return None
        lo1, hi1 = sorted((p1[ax1], q1[ax1]))
        lo2, hi2 = sorted((p2[ax1], q2[ax1]))
        lo, hi = max(lo1, lo2), min(hi1, hi2)
        if lo > hi:
            return None
        if lo < hi:
            return f"edges ({e1.u},{e1.v}) and ({e2.u},{e2.v}) overlap along a segment"
        pt = tuple(lo if a == ax1 else p1[a] for a in range(3))
        if pt in shared_pts:
            return None
        return f"edges ({e1.u},{e1.v}) and ({e2.u},{e2.v}) touch at {pt}"
    # different axes: at most a point; the third axis must agree exactly
    a3 = next(a for a in range(3) if a not in (ax1, ax2))
    if p1[a3] != p2[a3]:
        return None
    cand = [None] * 3
    cand[ax1] = p2[ax1]
    cand[ax2] = p1[ax2]
    cand[a3] = p1[a3]
    cand = tuple(cand)
    lo1, hi1 = sorted((p1[ax1], q1[ax1]))
    lo2, hi2 = sorted((p2[ax2], q2[ax2]))
    if not (lo1 <= cand[ax1] <= hi1 and lo2 <= cand[ax2] <= hi2):
        return None
    if cand in shared_pts:
        return None
    return f"edges ({e1.u},{e1.v}) and ({e2.u},{e2.v}) touch at {cand}"


# -- pipeline --------------------------------------------------------


@dataclass
class Realization:
    coords: list
    solution_count: int
    frame_count: int
    mesh: SurfaceMesh
    warnings: list = field(default_factory=list)

    @property
    def realizable(self):
        return True

    def to_dict(self):
        return {
            "realizable": True,
            "solution_count": self.solution_count,
            "frame_count": self.frame_count,
            "warnings": self.warnings,
        }


@dataclass
class NoSolution:
    certificate: str  # labels | closure | embedding
    detail: str
    frame_count: int
    warnings: list = field(default_factory=list)

    @property
    def realizable(self):
        return False

    def to_dict(self):
        return {
            "realizable": False,
            "solution_count": 0,
            "frame_count": self.frame_count,
            "certificate": self.certificate,
            "detail": self.detail,
            "warnings": self.warnings,
        }


def reconstruct(cp):
    """Full pipeline: solve frames, integrate, check embedding, count solutions."""
    rep = validate_input(cp)
    if not rep.ok:
        raise CPAError("; ".join(rep.errors))
    frames, _stats = solve_frames(cp)
    survivors = []
    last_violation = None
    for fr in frames:
        coords = integrate_coordinates(cp, fr)
        violation = check_embedding(cp, coords)
        if violation is None:
            survivors.append((fr, coords))
        else:
            last_violation = violation
    if survivors:
        _fr, coords = survivors[0]
        m = outward_orient(SurfaceMesh(coords, [[list(c)] for c in cp.faces], mode="exact"))
        return Realization(coords=coords, solution_count=len(survivors),
                           frame_count=len(frames), mesh=m, warnings=rep.warnings)
    if frames:
        return NoSolution("embedding", last_violation or "all frames self-intersect",
                          frame_count=len(frames), warnings=rep.warnings)
    label_frames, _ = solve_frames(cp, enforce_closure=False)
    if label_frames:
        return NoSolution(
            "closure",
            "dihedral labels admit frames, but with these lengths no frame closes "
            "every face cycle with outward winding",
            frame_count=0, warnings=rep.warnings)
    return NoSolution(
        "labels",
        "dihedral labels alone are inconsistent; no frame assignment exists for any lengths",
        frame_count=0, warnings=rep.warnings)


# -- extraction and congruence ---------------------------------------


def extract_combinatorial(m):
    """Abstract copy of an orthogonal mesh: lengths plus dihedral labels."""
    if m.mode != "exact":
        raise CPAError("extraction requires an exact-mode mesh")
    if m.has_multi_ring_faces():
        raise CPAError("mesh has faces with hole rings; cannot extract face cycles")
    count, _ = graph_components(m)
    if count != 1:
        raise CPAError(f"graph disconnected ({count} components)")
    verdict = is_orthogonal(m)
    if not verdict.orthogonal:
        raise CPAError(f"mesh is not orthogonal: {verdict.obstruction}")
    edges = []
    for (u, v) in m.edge_list():
        a = dihedral_angle(m, u, v)
        if a.k == 1:
            label = CONVEX
        elif a.k == 3:
            label = REFLEX
        else:
            raise CPAError(f"edge ({u},{v}) has dihedral {a.label()}, not pi/2 or 3*pi/2")
        d = vec.sub(m.vertices[v].pos, m.vertices[u].pos)
        length = vec.exact_sqrt(vec.norm2(d))
        if length is None:
            raise CPAError(f"edge ({u},{v}) has irrational length; cannot extract")
        edges.append(CEdge(u, v, length, label))
    faces = [f.outer for f in m.faces]
    return CombinatorialPoly(m.vertex_count, edges, faces)


def _canonical_cycle(cycle):
    k = min(range(len(cycle)), key=lambda i: cycle[i])
    return tuple(cycle[(k + i) % len(cycle)] for i in range(len(cycle)))


def congruent_orthogonal(ma, mb):
    """True when a signed-axis rotation plus translation maps ma onto mb."""
    if (ma.vertex_count, ma.edge_count, ma.face_count) != \
            (mb.vertex_count, mb.edge_count, mb.face_count):
        return False

    def normalized(points):
        mins = tuple(min(p[i] for p in points) for i in range(3))
        return [vec.sub(p, mins) for p in points]

    pb = normalized([v.pos for v in mb.vertices])
    pos_to_b = {p: i for i, p in enumerate(pb)}
    b_edges = set(mb.edge_list())
    b_faces = {frozenset(_canonical_cycle(f.outer) for f in mb.faces)}
    b_face_set = {_canonical_cycle(f.outer) for f in mb.faces}
    for rot in vec.rotations24():
        pa = normalized([vec.mat_vec(rot, v.pos) for v in ma.vertices])
        mapping = []
        ok = True
        for p in pa:
            j = pos_to_b.get(p)
            if j is None:
                ok = False
                break
            mapping.append(j)
        if not ok or len(set(mapping)) != len(mapping):
            continue
        mapped_edges = {(min(mapping[u], mapping[v]), max(mapping[u], mapping[v]))
                        for (u, v) in ma.edge_list()}
        if mapped_edges != b_edges:
            continue
        mapped_faces = {_canonical_cycle(tuple(mapping[v] for v in f.outer))
                        for f in ma.faces}
        if mapped_faces == b_face_set:
            return True
    return False
