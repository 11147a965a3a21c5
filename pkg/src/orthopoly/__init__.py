"""orthopoly: exact-arithmetic toolkit for orthogonal polyhedra."""

from .angles import AngleClass, AngleReport, angle_report, dihedral_angle, facial_angle
from .gallery import REGISTRY, verify_entry
from .mesh import (MeshError, SurfaceMesh, build_mesh, euler_genus,
                   graph_components, outward_orient, signed_volume,
                   surface_components, vertex_degrees)
from .offio import (OffParseError, load_any, load_off, load_offx, save_any,
                    save_off, save_offx)
from .orthotest import OrthoVerdict, is_orthogonal, propagate_alignment, theorem2_check
from .reconstruct import (CEdge, CombinatorialPoly, CPAError, FrameAssignment,
                          NoSolution, Realization, check_embedding,
                          congruent_orthogonal, extract_combinatorial,
                          integrate_coordinates, reconstruct, solve_frames,
                          validate_input)

__all__ = [
    "AngleClass", "AngleReport", "angle_report", "dihedral_angle", "facial_angle",
    "REGISTRY", "verify_entry",
    "MeshError", "SurfaceMesh", "build_mesh", "euler_genus", "graph_components",
    "outward_orient", "signed_volume", "surface_components", "vertex_degrees",
    "OffParseError", "load_any", "load_off", "load_offx", "save_any", "save_off",
    "save_offx",
    "OrthoVerdict", "is_orthogonal", "propagate_alignment", "theorem2_check",
    "CEdge", "CombinatorialPoly", "CPAError", "FrameAssignment", "NoSolution",
    "Realization", "check_embedding", "congruent_orthogonal",
    "extract_combinatorial", "integrate_coordinates", "reconstruct",
    "solve_frames", "validate_input",
]
