"""Exact 2D predicates for rectilinear (axis-parallel-edged) polygons.

All coordinates are Fractions.  Rings are lists of (x, y) points whose
consecutive edges are horizontal or vertical.  These routines back the
self-intersection and face-overlap tests of the embedding checker,
where every face lies in an axis-perpendicular plane.
"""

from __future__ import annotations

from fractions import Fraction


class RectPolyError(ValueError):
    pass


def edge_axis(p, q):
    """'h' or 'v'; rejects diagonal or zero edges."""
    if p[1] == q[1] and p[0] != q[0]:
        return "h"
    if p[0] == q[0] and p[1] != q[1]:
        return "v"
    raise RectPolyError(f"edge {p}-{q} is not axis-parallel and nonzero")


def _span(a, b):
    return (a, b) if a <= b else (b, a)


def segment_intersection(p, q, r, s):
    """Intersection of two axis-parallel closed segments.

    Returns None, ("point", pt), or ("segment", a, b) with a != b.
    """
    ax1 = edge_axis(p, q)
    ax2 = edge_axis(r, s)
    if ax1 == ax2 == "h":
        if p[1] != r[1]:
            return None
        lo1, hi1 = _span(p[0], q[0])
        lo2, hi2 = _span(r[0], s[0])
        lo, hi = max(lo1, lo2), min(hi1, hi2)
        if lo > hi:
            return None
        if lo == hi:
            return ("point", (lo, p[1]))
        return ("segment", (lo, p[1]), (hi, p[1]))
    if ax1 == ax2 == "v":
        if p[0] != r[0]:
            return None
        lo1, hi1 = _span(p[1], q[1])
        lo2, hi2 = _span(r[1], s[1])
        lo, hi = max(lo1, lo2), min(hi1, hi2)
        if lo > hi:
            return None
        if lo == hi:
            return ("point", (p[0], lo))
        return ("segment", (p[0], lo), (p[0], hi))
    if ax1 == "v":
        p, q, r, s = r, s, p, q
    # now p-q horizontal, r-s vertical
    xlo, xhi = _span(p[0], q[0])
    ylo, yhi = _span(r[1], s[1])
    if xlo <= r[0] <= xhi and ylo <= p[1] <= yhi:
        return ("point", (r[0], p[1]))
    return None


def ring_is_simple(ring):
    """Check that a rectilinear ring does not touch or cross itself.

    Consecutive collinear edges may continue in the same direction
    (straight-angle vertices are fine) but must not double back.
    Returns (ok, message).
    """
    n = len(ring)
    edges = [(ring[i], ring[(i + 1) % n]) for i in range(n)]
    for p, q in edges:
        edge_axis(p, q)
    for i in range(n):
        p, q = edges[i]
        d1 = (q[0] - p[0], q[1] - p[1])
        r, s = edges[(i + 1) % n]
        d2 = (s[0] - r[0], s[1] - r[1])
        if d1[0] * d2[1] - d1[1] * d2[0] == 0 and (d1[0] * d2[0] + d1[1] * d2[1]) < 0:
            return False, f"ring doubles back at {q}"
    for i in range(n):
        for j in range(i + 1, n):
            adjacent = (j == i + 1) or (i == 0 and j == n - 1)
            hit = segment_intersection(*edges[i], *edges[j])
            if hit is None:
                continue
            if adjacent:
                shared = edges[i][1] if j == i + 1 else edges[i][0]
                if hit[0] == "point" and hit[1] == shared:
                    continue
                return False, f"adjacent ring edges overlap near {shared}"
            return False, f"ring edges {i} and {j} intersect at {hit[1]}"
    return True, "ok"


def point_in_ring(pt, ring):
    """'in', 'on', or 'out' for a closed rectilinear polygon."""
    n = len(ring)
    for i in range(n):
        p, q = ring[i], ring[(i + 1) % n]
        if edge_axis(p, q) == "h":
            lo, hi = _span(p[0], q[0])
            if pt[1] == p[1] and lo <= pt[0] <= hi:
                return "on"
        else:
            lo, hi = _span(p[1], q[1])
            if pt[0] == p[0] and lo <= pt[1] <= hi:
                return "on"
    crossings = 0
    for i in range(n):
        p, q = ring[i], ring[(i + 1) % n]
        if p[0] == q[0] and p[0] > pt[0]:  # vertical edge right of the point
            lo, hi = _span(p[1], q[1])
            if lo <= pt[1] < hi:
                crossings += 1
    return "in" if crossings % 2 == 1 else "out"


def ring_rectangles(ring):
    """Decompose the closed region into rectangles by vertical slabs."""
    xs = sorted({p[0] for p in ring})
    rects = []
    n = len(ring)
    for x0, x1 in zip(xs, xs[1:]):
        xm = (x0 + x1) / 2
        ys = []
        for i in range(n):
            p, q = ring[i], ring[(i + 1) % n]
            if p[1] == q[1]:
                lo, hi = _span(p[0], q[0])
                if lo < xm < hi:
                    ys.append(p[1])
        ys.sort()
        if len(ys) % 2 != 0:
            raise RectPolyError("ring is not a valid rectilinear boundary")
        for ylo, yhi in zip(ys[::2], ys[1::2]):
            rects.append((x0, x1, ylo, yhi))
    return rects


def rings_interior_overlap(ring_a, ring_b):
    """True when the two closed regions share interior area."""
    for (ax0, ax1, ay0, ay1) in ring_rectangles(ring_a):
        for (bx0, bx1, by0, by1) in ring_rectangles(ring_b):
            if max(ax0, bx0) < min(ax1, bx1) and max(ay0, by0) < min(ay1, by1):
                return True
    return False


def ring_line_trace(ring, axis, c):
    """Closed intervals of {axis-coordinate == c} inside the closed region.

    axis 'x' traces the vertical line x == c and returns y-intervals;
    axis 'y' traces the horizontal line y == c and returns x-intervals.
    Degenerate intervals (points) appear as (t, t).
    """
    if axis == "x":
        coord, other = 0, 1
    elif axis == "y":
        coord, other = 1, 0
    else:
        raise RectPolyError(f"bad axis {axis!r}")
    events = set()
    n = len(ring)
    for i in range(n):
        p, q = ring[i], ring[(i + 1) % n]
        if p[coord] == q[coord]:
            if p[coord] == c:
                events.add(p[other])
                events.add(q[other])
        else:
            lo, hi = _span(p[coord], q[coord])
            if lo <= c <= hi:
                events.add(p[other])
    for p in ring:
        if p[coord] == c:
            events.add(p[other])

    def make_pt(t):
        return (c, t) if coord == 0 else (t, c)

    pieces = []
    ordered = sorted(events)
    for t in ordered:
        if point_in_ring(make_pt(t), ring) != "out":
            pieces.append((t, t))
    for t0, t1 in zip(ordered, ordered[1:]):
        tm = (t0 + t1) / 2
        if point_in_ring(make_pt(tm), ring) != "out":
            pieces.append((t0, t1))
    return merge_intervals(pieces)


def merge_intervals(intervals):
    """Union of closed intervals as a sorted disjoint list."""
    out = []
    for lo, hi in sorted(intervals):
        if out and lo <= out[-1][1]:
            out[-1] = (out[-1][0], max(out[-1][1], hi))
        else:
            out.append((lo, hi))
    return out


def intervals_intersection(a, b):
    """Intersection of two closed interval unions."""
    out = []
    for (lo1, hi1) in a:
        for (lo2, hi2) in b:
            lo, hi = max(lo1, lo2), min(hi1, hi2)
            if lo <= hi:
                out.append((lo, hi))
    return merge_intervals(out)


def intervals_covered(a, b):
    """True when the closed set a is contained in the closed set b."""
    b = merge_intervals(b)
    for lo, hi in merge_intervals(a):
        if lo == hi:
            if not any(blo <= lo <= bhi for blo, bhi in b):
                return False
            continue
        pos = lo
        while pos < hi:
            nxt = None
            for blo, bhi in b:
                if blo <= pos <= bhi and bhi > pos:
                    nxt = bhi
                    break
                if blo <= pos <= bhi and bhi == pos:
                    continue
            if nxt is None:
                return False
            pos = min(nxt, hi)
    return True
