import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from fractions import Fraction

from orthopoly import REGISTRY
from orthopoly.mesh import SurfaceMesh, outward_orient
from orthopoly.reconstruct import CONVEX, CEdge, CombinatorialPoly


@pytest.fixture(scope="session")
def gallery_meshes():
    return {name: entry.build() for name, entry in REGISTRY.items()}


def make_square_torus():
    """Genus-1 box with a square tunnel; annuli are split into four quads."""
    pts = [
        (0, 0, 0), (3, 0, 0), (3, 3, 0), (0, 3, 0),
        (0, 0, 1), (3, 0, 1), (3, 3, 1), (0, 3, 1),
        (1, 1, 0), (2, 1, 0), (2, 2, 0), (1, 2, 0),
        (1, 1, 1), (2, 1, 1), (2, 2, 1), (1, 2, 1),
    ]
    O0, O1, O2, O3, O4, O5, O6, O7 = range(8)
    I0, I1, I2, I3, I4, I5, I6, I7 = range(8, 16)
    faces = [
        [[O0, O1, O5, O4]], [[O1, O2, O6, O5]],
        [[O2, O3, O7, O6]], [[O3, O0, O4, O7]],
        [[I1, I0, I4, I5]], [[I2, I1, I5, I6]],
        [[I3, I2, I6, I7]], [[I0, I3, I7, I4]],
        [[O4, O5, I5, I4]], [[O5, O6, I6, I5]],
        [[O6, O7, I7, I6]], [[O7, O4, I4, I7]],
        [[O1, O0, I0, I1]], [[O2, O1, I1, I2]],
        [[O3, O2, I2, I3]], [[O0, O3, I3, I0]],
    ]
    return outward_orient(SurfaceMesh(pts, faces))


def make_spiral_prism_cp():
    """All-convex octagon prism whose lengths force a self-crossing cycle.

    Eight left turns give total turning 720 degrees, so no simple polygon
    can realize the caps; the unique closing frame self-intersects.
    """
    section = [(0, 0), (3, 0), (3, 1), (1, 1), (1, -1), (2, -1), (2, 2), (0, 2)]
    k = len(section)
    pts_bottom = list(range(k))
    pts_top = list(range(k, 2 * k))
    faces = [list(reversed(pts_bottom)), pts_top]
    for i in range(k):
        j = (i + 1) % k
        faces.append([pts_bottom[i], pts_bottom[j], pts_top[j], pts_top[i]])
    edges = []
    for i in range(k):
        j = (i + 1) % k
        (x0, y0), (x1, y1) = section[i], section[j]
        length = Fraction(abs(x1 - x0) + abs(y1 - y0))
        edges.append(CEdge(pts_bottom[i], pts_bottom[j], length, CONVEX))
        edges.append(CEdge(pts_top[i], pts_top[j], length, CONVEX))
        edges.append(CEdge(pts_bottom[i], pts_top[i], Fraction(1), CONVEX))
    return CombinatorialPoly(2 * k, edges, faces)
