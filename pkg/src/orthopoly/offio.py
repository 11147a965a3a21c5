"""Readers and writers for OFF and the multi-ring OFFX extension.

OFF is the standard ASCII format: an ``OFF`` header, a counts line
``nv nf ne`` (the edge count is informational and may be 0), ``nv``
coordinate lines, then ``nf`` face lines ``k v1 ... vk``.

OFFX differs only in the header and the face lines, which carry hole
rings: ``r | k1 v... | k2 v... | ...`` where ``r`` is the ring count and
the first ring is the outer one.  In exact mode coordinates are parsed
as exact rationals; both plain decimals ("0.25") and fractions ("3/2")
are accepted.
"""

from __future__ import annotations

from fractions import Fraction

from .mesh import MeshError, SurfaceMesh, outward_orient


class OffParseError(MeshError):
    """Malformed OFF/OFFX input; carries a 1-based line number."""

    def __init__(self, lineno, message):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def parse_scalar(token, mode):
    try:
        if mode == "exact":
            return Fraction(token)
        return float(Fraction(token))
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"bad coordinate {token!r}: {exc}") from None


def format_scalar(x):
    if isinstance(x, Fraction):
        if x.denominator == 1:
            return str(x.numerator)
        return f"{x.numerator}/{x.denominator}"
    return repr(float(x))


def _content_lines(text):
    out = []
    for i, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append((i, line))
    return out


def _load(text, header, parse_face, mode, eps):
    lines = _content_lines(text)
    if not lines:
        raise OffParseError(1, "empty file")
    lineno, first = lines[0]
    if first != header:
        raise OffParseError(lineno, f"expected {header!r} header, got {first!r}")
    if len(lines) < 2:
        raise OffParseError(lineno, "missing counts line")
    lineno, counts = lines[1]
    parts = counts.split()
    if len(parts) != 3:
        raise OffParseError(lineno, f"counts line must have 3 numbers, got {counts!r}")
    try:
        nv, nf, _ne = (int(p) for p in parts)
    except ValueError:
        raise OffParseError(lineno, f"bad counts line {counts!r}") from None
    if nv < 0 or nf < 0:
        raise OffParseError(lineno, "negative counts")
    body = lines[2:]
    if len(body) < nv + nf:
        raise OffParseError(lines[-1][0], f"truncated file: expected {nv + nf} data lines, found {len(body)}")
    positions = []
    for lineno, line in body[:nv]:
        toks = line.split()
        if len(toks) != 3:
            raise OffParseError(lineno, f"vertex line must have 3 coordinates: {line!r}")
        try:
            positions.append(tuple(parse_scalar(t, mode) for t in toks))
        except ValueError as exc:
            raise OffParseError(lineno, str(exc)) from None
    faces = []
    for lineno, line in body[nv:nv + nf]:
        faces.append(parse_face(lineno, line))
    try:
        m = SurfaceMesh(positions, faces, mode=mode, eps=eps)
        return outward_orient(m)
    except MeshError:
        raise
    except Exception as exc:  # pragma: no cover - defensive
        raise MeshError(f"invalid mesh: {exc}") from exc


def _parse_face_off(lineno, line):
    toks = line.split()
    try:
        vals = [int(t) for t in toks]
    except ValueError:
        raise OffParseError(lineno, f"bad face line {line!r}") from None
    if not vals or len(vals) != vals[0] + 1:
        raise OffParseError(lineno, f"face line count mismatch: {line!r}")
    if vals[0] < 3:
        raise OffParseError(lineno, "face needs at least 3 vertices")
    return [vals[1:]]


def _parse_face_offx(lineno, line):
    chunks = [c.strip() for c in line.split("|")]
    try:
        nrings = int(chunks[0])
    except ValueError:
        raise OffParseError(lineno, f"bad ring count in {line!r}") from None
    if nrings < 1 or len(chunks) != nrings + 1:
        raise OffParseError(lineno, f"ring count mismatch in {line!r}")
    rings = []
    for chunk in chunks[1:]:
        try:
            vals = [int(t) for t in chunk.split()]
        except ValueError:
            raise OffParseError(lineno, f"bad ring {chunk!r}") from None
        if not vals or len(vals) != vals[0] + 1 or vals[0] < 3:
            raise OffParseError(lineno, f"ring length mismatch in {chunk!r}")
        rings.append(vals[1:])
    return rings


def load_off(text, mode="exact", eps=1e-9):
    """Parse OFF text into a validated, outward-oriented mesh."""
    return _load(text, "OFF", _parse_face_off, mode, eps)


def load_offx(text, mode="exact", eps=1e-9):
    """Parse OFFX text (faces may have hole rings)."""
    return _load(text, "OFFX", _parse_face_offx, mode, eps)


def load_any(text, mode="exact", eps=1e-9):
    """Dispatch on the OFF/OFFX header."""
    for _, line in _content_lines(text)[:1]:
        if line == "OFFX":
            return load_offx(text, mode, eps)
    return load_off(text, mode, eps)


def save_off(mesh):
    """Serialize a mesh whose faces are all single-ring."""
    for f in mesh.faces:
        if f.ring_count() != 1:
            raise MeshError(
                f"face {f.id} has hole rings; plain OFF cannot represent it, use save_offx")
    out = ["OFF", f"{mesh.vertex_count} {mesh.face_count} {mesh.edge_count}"]
    for v in mesh.vertices:
        out.append(" ".join(format_scalar(c) for c in v.pos))
    for f in mesh.faces:
        ring = f.outer
        out.append(" ".join(str(n) for n in (len(ring), *ring)))
    return "\n".join(out) + "\n"


def save_offx(mesh):
    """Serialize any mesh, hole rings included."""
    out = ["OFFX", f"{mesh.vertex_count} {mesh.face_count} {mesh.edge_count}"]
    for v in mesh.vertices:
        out.append(" ".join(format_scalar(c) for c in v.pos))
    for f in mesh.faces:
        parts = [str(f.ring_count())]
        for ring in f.rings:
            parts.append(" ".join(str(n) for n in (len(ring), *ring)))
        out.append(" | ".join(parts))
    return "\n".join(out) + "\n"


def save_any(mesh):
    """OFF when possible, OFFX when hole rings require it."""
    if mesh.has_multi_ring_faces():
        return save_offx(mesh)
    return save_off(mesh)
