"""Command-line front end.

Subcommands: validate | analyze | check-ortho | reconstruct | extract | gallery.

Exit codes: 0 success / affirmative verdict, 1 negative verdict (not
orthogonal, not realizable, angle hypothesis fails), 2 input error,
3 internal invariant failure (including gallery checklist mismatches).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import gallery
from .angles import angle_report
from .mesh import MeshError, euler_genus, graph_components, vertex_degrees
from .offio import load_any, save_any, save_off
from .orthotest import is_orthogonal, propagate_alignment
from .reconstruct import (CPAError, CombinatorialPoly, SolverInternalError,
                          extract_combinatorial, reconstruct, validate_input)

OK, NEGATIVE, INPUT_ERROR, INTERNAL = 0, 1, 2, 3


def _read(path):
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write_out(args, text):
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        print(text, end="" if text.endswith("\n") else "\n")


def _mode(args):
    if args.epsilon is not None and not args.exact:
        return "float", args.epsilon
    return "exact", 1e-9


def _load_mesh(args):
    mode, eps = _mode(args)
    return load_any(_read(args.path), mode=mode, eps=eps)


def cmd_validate(args):
    text = _read(args.path)
    head = text.lstrip().split(None, 1)[0] if text.strip() else ""
    if head == "CPA":
        cp = CombinatorialPoly.parse_cpa(text)
        rep = validate_input(cp)
        payload = {
            "kind": "cpa", "vertices": cp.n_vertices, "edges": len(cp.edges),
            "faces": len(cp.faces), "ok": rep.ok, "errors": rep.errors,
            "warnings": rep.warnings,
        }
        if args.json:
            print(json.dumps(payload, indent=2))
        else:
            print(f"CPA instance: V={cp.n_vertices} E={len(cp.edges)} F={len(cp.faces)}")
            for e in rep.errors:
                print(f"error: {e}")
            for w in rep.warnings:
                print(f"warning: {w}")
            print("ok" if rep.ok else "invalid")
        return OK if rep.ok else INPUT_ERROR
    m = _load_mesh(args)
    count, _ = graph_components(m)
    try:
        genus = euler_genus(m)
        genus_text = str(genus)
    except MeshError as exc:
        genus = None
        genus_text = f"undefined ({exc})"
    degrees = sorted(set(vertex_degrees(m).values()))
    payload = {
        "kind": "mesh", "vertices": m.vertex_count, "edges": m.edge_count,
        "faces": m.face_count, "components": count, "genus": genus,
        "degrees": degrees,
    }
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(f"closed mesh: V={m.vertex_count} E={m.edge_count} F={m.face_count}")
        print(f"graph components: {count}")
        print(f"genus: {genus_text}")
        print(f"vertex degrees: {degrees}")
    return OK


def cmd_analyze(args):
    m = _load_mesh(args)
    rep = angle_report(m, eps_angle=args.eps_angle)
    if args.json:
        print(rep.to_json())
    else:
        print(rep.to_text())
    return OK if (rep.all_facial_right and rep.all_dihedral_right) else NEGATIVE


def cmd_check_ortho(args):
    m = _load_mesh(args)
    verdict = propagate_alignment(m) if args.propagate else is_orthogonal(m)
    if args.json:
        print(verdict.to_json())
    else:
        print(verdict.to_text())
    return OK if verdict.orthogonal else NEGATIVE


def cmd_reconstruct(args):
    cp = CombinatorialPoly.parse_cpa(_read(args.path))
    result = reconstruct(cp)
    if args.json:
        print(json.dumps(result.to_dict(), indent=2))
    else:
        for w in result.warnings:
            print(f"warning: {w}")
        if result.realizable:
            print(f"realizable: solution_count={result.solution_count}")
        else:
            print(f"not realizable ({result.certificate}): {result.detail}")
    if result.realizable and args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(save_off(result.mesh))
    return OK if result.realizable else NEGATIVE


def cmd_extract(args):
    m = _load_mesh(args)
    cp = extract_combinatorial(m)
    _write_out(args, cp.to_cpa())
    return OK


def cmd_gallery(args):
    entry = gallery.REGISTRY.get(args.name)
    if entry is None:
        known = ", ".join(sorted(gallery.REGISTRY))
        raise CPAError(f"unknown gallery shape {args.name!r}; known: {known}")
    failures = gallery.verify_entry(entry)
    if failures:
        for f in failures:
            print(f"checklist mismatch: {f}", file=sys.stderr)
        return INTERNAL
    m = entry.build()
    _write_out(args, save_any(m))
    return OK


def build_parser():
    p = argparse.ArgumentParser(
        prog="orthopoly",
        description="Orthogonal-polyhedron toolkit: angles, orthogonality, reconstruction.")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--epsilon", type=float, default=None,
                   help="use float arithmetic with this tolerance")
    p.add_argument("--exact", action="store_true",
                   help="force exact rational parsing (default)")
    p.add_argument("--eps-angle", type=float, default=1e-7,
                   help="angle classification tolerance in float mode")
    p.add_argument("--out", default=None, help="write primary output to a file")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("validate", help="validate an OFF/OFFX/CPA file")
    sp.add_argument("path")
    sp.set_defaults(func=cmd_validate)

    sp = sub.add_parser("analyze", help="classify all facial and dihedral angles")
    sp.add_argument("path")
    sp.set_defaults(func=cmd_analyze)

    sp = sub.add_parser("check-ortho", help="decide orthogonality")
    sp.add_argument("path")
    sp.add_argument("--propagate", action="store_true",
                    help="use the constructive propagation decider")
    sp.set_defaults(func=cmd_check_ortho)

    sp = sub.add_parser("reconstruct", help="realize a CPA instance")
    sp.add_argument("path")
    sp.set_defaults(func=cmd_reconstruct)

    sp = sub.add_parser("extract", help="extract a CPA instance from a mesh")
    sp.add_argument("path")
    sp.set_defaults(func=cmd_extract)

    sp = sub.add_parser("gallery", help="emit a built-in shape after checking it")
    sp.add_argument("name")
    sp.set_defaults(func=cmd_gallery)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (OSError, MeshError, CPAError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR
    except SolverInternalError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return INTERNAL


def entry():
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
