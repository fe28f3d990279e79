"""Command-line front end: analyze, crosscheck, generate, version.

Exit codes: 0 success, 1 validation or file error, 2 criterion/oracle
mismatch.  JSON and text reports are byte-identical across runs and job
counts; timing goes to stderr only.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import __version__
from .bc import (
    FaceStructure,
    POLYTOPAL,
    PUNCTURED,
    link_correspondence_check,
    orbit_space_e2,
)
from .corpus import (
    cube_structure,
    fan_punctured_cube,
    punctured_cube_structure,
    punctured_product_structure,
    simplex_structure,
)
from .exactla import GradedDims, series_window
from .fan import Fan, validate
from .formats import FormatError, load, write_facestruct, write_fan
from .gkm import GkmGraph, cs_kernel_dims
from .simplicial import SimplicialComplex, is_acyclic, reduced_homology
from .stanley import (
    depth_pd,
    ext_decomposition_check,
    ext_table,
    face_ring_presentation,
    stanley_reisner_ideal,
    syzygy_order_oracle,
)
from .syzygy import (
    syzygy_order_faces,
    syzygy_order_links,
    syzygy_order_links_strict_bound,
    torus_manifold_report,
)

OK, INVALID, MISMATCH = 0, 1, 2


def _gd(dims: GradedDims) -> dict:
    return {str(d): v for d, v in dims.items()}


def _report_syzygy(rep) -> dict:
    return {
        "method": rep.method,
        "order": rep.order,
        "rank": rep.rank,
        "torsion_free": rep.torsion_free,
        "free": rep.free,
        "per_face": [
            {
                "face": d.label,
                "rank": d.rank,
                "max_j": d.max_j,
                "cohomology": [_gd(h) for h in d.cohomology],
            }
            for d in rep.per_face
        ],
    }


def _face_ring_json(pres) -> dict:
    return {
        "generators": [{"face": g, "degree": deg} for g, deg in pres.generators],
        "relations": [r.render() for r in pres.relations],
    }


def _e2_json(e2) -> dict:
    out = {
        "cells": {f"{p},{q}": d for (p, q), d in sorted(e2.cells.items())},
        "degenerate": e2.degenerate,
    }
    if e2.hc is not None:
        out["hc_orbit_space"] = _gd(e2.hc)
    if e2.bound is not None:
        out["vanishing_bound"] = e2.bound
        out["vanishing_ok"] = e2.bound_ok
    if e2.note:
        out["note"] = e2.note
    return out


def analyze_fan(f: Fan, oracle: bool, max_degree: int) -> tuple[dict, int]:
    report: dict = {"kind": "fan", "rank": f.rank, "rays": len(f.rays),
                    "maximal_cones": len(f.maximal_cones)}
    v = validate(f)
    report["valid"] = v.ok
    if not v.ok:
        report["validation_issues"] = [str(i) for i in v.issues]
        return report, INVALID
    faces_rep = syzygy_order_faces(f)
    links_rep = syzygy_order_links(f)
    orders = {"faces": faces_rep.order, "links": links_rep.order}
    report["syzygy"] = _report_syzygy(faces_rep)
    report["links"] = _report_syzygy(links_rep)
    if oracle:
        oracle_rep = syzygy_order_oracle(f)
        orders["oracle"] = oracle_rep.order
        report["oracle"] = _report_syzygy(oracle_rep)
        I = stanley_reisner_ideal(f)
        table = ext_table(I)
        depth, pd = depth_pd(I)
        report["stanley_reisner"] = {
            "variables": I.n,
            "generators": [sorted(g) for g in I.gens],
            "depth": depth,
            "projective_dimension": pd,
            "ext_cells": [
                {"i": i, "pattern": list(N), "dim": d} for i, N, d in table.cells()
            ],
            "ext_windows_scaled_by_q^n": {
                str(i): _gd(series_window(table.hilbert_series(i), max_degree // 2))
                for i in range(table.max_index() + 1)
            },
        }
    link_ok = all(link_correspondence_check(f, s) for s in f.cones())
    report["link_correspondence"] = link_ok
    report["orders"] = orders
    agreement = len(set(orders.values())) == 1
    report["agreement"] = agreement and link_ok
    report["order"] = faces_rep.order
    strict = syzygy_order_links_strict_bound(f)
    if strict != links_rep.order:
        report["strict_link_bound_differs"] = strict
    report["face_ring"] = _face_ring_json(face_ring_presentation(f))
    report["e2"] = _e2_json(orbit_space_e2(f, faces_rep.order))
    return report, OK if report["agreement"] else MISMATCH


def analyze_facestruct(s: FaceStructure, oracle: bool, max_degree: int) -> tuple[dict, int]:
    report: dict = {"kind": "facestruct", "rank": s.rank, "faces": len(s.faces),
                    "removed": sorted(s.removed)}
    v = s.validate()
    report["valid"] = v.ok
    if not v.ok:
        report["validation_issues"] = [str(i) for i in v.issues]
        return report, INVALID
    rep = syzygy_order_faces(s)
    report["syzygy"] = _report_syzygy(rep)
    report["order"] = rep.order
    report["orders"] = {"faces": rep.order}
    agreement = True
    tags = {f.tag for f in s.faces.values()}
    if tags <= {POLYTOPAL, PUNCTURED}:
        tm = torus_manifold_report(s)
        report["torus_manifold"] = {
            "torsion_free_test": tm.torsion_free_test,
            "freeness_test": tm.freeness_test,
            "failures": tm.failures,
            "agrees_with_order": tm.agrees_with_order,
        }
        agreement = agreement and tm.agrees_with_order
    if tags == {POLYTOPAL}:
        report["face_ring"] = _face_ring_json(face_ring_presentation(s))
    report["e2"] = _e2_json(orbit_space_e2(s, rep.order))
    report["agreement"] = agreement
    return report, OK if agreement else MISMATCH


def analyze_complex(k: SimplicialComplex, oracle: bool, max_degree: int) -> tuple[dict, int]:
    report: dict = {"kind": "complex", "vertices": k.vertex_count,
                    "facets": sorted(sorted(f) for f in k.facets)}
    report["reduced_homology"] = _gd(reduced_homology(k))
    report["acyclic"] = is_acyclic(k)
    code = OK
    if k.is_void:
        report["note"] = "VOID complex has no face ring"
        return report, code
    I = stanley_reisner_ideal(k)
    depth, pd = depth_pd(I)
    report["stanley_reisner"] = {
        "variables": I.n,
        "generators": [sorted(g) for g in I.gens],
        "depth": depth,
        "projective_dimension": pd,
    }
    if oracle:
        table = ext_table(I)
        report["stanley_reisner"]["ext_cells"] = [
            {"i": i, "pattern": list(N), "dim": d} for i, N, d in table.cells()
        ]
        check = ext_decomposition_check(k)
        report["ext_decomposition_ok"] = check.ok
        if not check.ok:
            report["ext_decomposition_mismatches"] = [list(m) for m in check.cell_mismatches]
            code = MISMATCH
    return report, code


def analyze_gkm(g: GkmGraph, oracle: bool, max_degree: int) -> tuple[dict, int]:
    report: dict = {"kind": "gkm", "rank": g.rank, "vertices": len(g.vertices),
                    "edges": len(g.edges)}
    dims = cs_kernel_dims(g, max_degree)
    report["cs_kernel_dims"] = _gd(dims)
    # one q-step per topological degree-2 step
    report["cs_kernel_dims_q"] = {str(d // 2): v for d, v in dims.items()}
    report["note"] = (
        "kernel dimensions equal equivariant cohomology only when the module "
        "is a second syzygy; certify the order separately"
    )
    return report, OK


_ANALYZERS = {
    "fan": analyze_fan,
    "facestruct": analyze_facestruct,
    "complex": analyze_complex,
    "gkm": analyze_gkm,
}


def cmd_analyze(args) -> int:
    try:
        obj = load(args.path, args.kind)
    except FormatError as e:
        print(f"error: {e}", file=sys.stderr)
        return INVALID
    t0 = time.perf_counter()
    report, code = _ANALYZERS[args.kind](obj, args.oracle, args.max_degree)
    elapsed = time.perf_counter() - t0
    report["input"] = str(args.path)
    _emit(report, args.json)
    print(f"analyzed {args.path} in {elapsed:.3f}s", file=sys.stderr)
    return code


def _emit(report: dict, as_json: bool) -> None:
    if as_json:
        print(json.dumps(report, indent=1, sort_keys=True))
        return
    for line in _render_text(report):
        print(line)


def _render_text(report: dict, indent: str = "") -> list[str]:
    lines = []
    for key in sorted(report):
        value = report[key]
        if isinstance(value, dict):
            lines.append(f"{indent}{key}:")
            lines.extend(_render_text(value, indent + "  "))
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f"{indent}{key}:")
            for item in value:
                lines.append(f"{indent}  -")
                lines.extend(_render_text(item, indent + "    "))
        else:
            lines.append(f"{indent}{key}: {value}")
    return lines


def crosscheck_file(path: str) -> dict:
    """Full agreement battery for one fan file (used by crosscheck)."""
    out: dict = {"file": Path(path).name}
    try:
        f = load(path, "fan")
    except FormatError as e:
        out["error"] = str(e)
        return out
    v = validate(f)
    if not v.ok:
        out["error"] = f"{path}: " + "; ".join(str(i) for i in v.issues)
        return out
    faces_rep = syzygy_order_faces(f)
    links_rep = syzygy_order_links(f)
    oracle_rep = syzygy_order_oracle(f)
    out["orders"] = {
        "faces": faces_rep.order,
        "links": links_rep.order,
        "oracle": oracle_rep.order,
    }
    out["agree"] = len(set(out["orders"].values())) == 1
    out["link_correspondence"] = all(link_correspondence_check(f, s) for s in f.cones())
    from .fan import underlying_complex
    from .stanley import ext_decomposition_ok

    out["ext_decomposition"] = ext_decomposition_ok(underlying_complex(f))
    e2 = orbit_space_e2(f, faces_rep.order)
    out["e2_bound_ok"] = bool(e2.degenerate and e2.bound_ok)
    strict = syzygy_order_links_strict_bound(f)
    if strict != links_rep.order:
        out["strict_link_bound"] = strict
    out["ok"] = bool(
        out["agree"] and out["link_correspondence"] and out["ext_decomposition"]
        and out["e2_bound_ok"]
    )
    return out


def cmd_crosscheck(args) -> int:
    root = Path(args.corpus_dir)
    if not root.is_dir():
        print(f"error: {root} is not a directory", file=sys.stderr)
        return INVALID
    files = sorted(str(p) for p in root.glob("*.fan")) + sorted(
        str(p) for p in root.glob("*.fan.json")
    )
    if not files:
        print(f"warning: no fan files in {root}", file=sys.stderr)
        _emit({"corpus": str(root), "fans": 0, "ok": True}, args.json)
        return OK
    t0 = time.perf_counter()
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as ex:
            results = list(ex.map(crosscheck_file, files))
    else:
        results = [crosscheck_file(p) for p in files]
    results.sort(key=lambda r: r["file"])
    elapsed = time.perf_counter() - t0
    errors = [r for r in results if "error" in r]
    bad = [r for r in results if not r.get("ok", False) and "error" not in r]
    strict_diffs = [r["file"] for r in results if "strict_link_bound" in r]
    summary = {
        "corpus": str(root),
        "fans": len(files),
        "errors": [r["error"] for r in errors],
        "disagreements": [r["file"] for r in bad],
        "strict_link_bound_differs_on": strict_diffs,
        "ok": not errors and not bad,
    }
    if args.verbose:
        summary["results"] = results
    _emit(summary, args.json)
    print(f"crosschecked {len(files)} fans in {elapsed:.3f}s", file=sys.stderr)
    if errors:
        return INVALID
    if bad:
        return MISMATCH
    return OK


def cmd_generate(args) -> int:
    kind = args.what
    json_variant = args.json
    try:
        distance = args.distance or None
        if kind == "cube":
            obj = cube_structure(args.r)
            text = write_facestruct(obj, json_variant)
        elif kind == "simplex":
            obj = simplex_structure(args.r)
            text = write_facestruct(obj, json_variant)
        elif kind == "punctured_cube":
            if args.as_facestruct:
                obj = punctured_cube_structure(args.r, distance)
                text = write_facestruct(obj, json_variant)
            else:
                obj = fan_punctured_cube(args.r, distance)
                text = write_fan(obj, json_variant)
        elif kind == "punctured_product":
            dims = [int(x) for x in args.dims.split(",")] if args.dims else [1] * args.r
            distance = distance or len(dims)
            v1 = tuple(0 for _ in dims)
            v2 = tuple(1 if i < distance else 0 for i in range(len(dims)))
            obj = punctured_product_structure(dims, v1, v2)
            text = write_facestruct(obj, json_variant)
        else:
            print(f"error: unsupported kind {kind!r}", file=sys.stderr)
            return INVALID
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return INVALID
    out = Path(args.out)
    out.write_text(text)
    print(f"wrote {out}", file=sys.stderr)
    return OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="facesyz", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="analyze one input file")
    a.add_argument("kind", choices=("fan", "complex", "facestruct", "gkm"))
    a.add_argument("path")
    a.add_argument("--oracle", action="store_true", help="add the depth/Ext oracle")
    a.add_argument("--json", action="store_true", help="machine-readable output")
    a.add_argument("--max-degree", type=int, default=20,
                   help="top topological degree for windows (default 20)")
    a.add_argument("--jobs", type=int, default=1)
    a.set_defaults(func=cmd_analyze)

    c = sub.add_parser("crosscheck", help="run the agreement battery on a fan corpus")
    c.add_argument("corpus_dir")
    c.add_argument("--json", action="store_true")
    c.add_argument("--jobs", type=int, default=1)
    c.add_argument("--verbose", action="store_true", help="include per-file results")
    c.set_defaults(func=cmd_crosscheck)

    g = sub.add_parser("generate", help="write fixture files")
    g.add_argument("what", choices=("cube", "punctured_cube", "punctured_product", "simplex"))
    g.add_argument("out")
    g.add_argument("--r", type=int, default=2)
    g.add_argument("--dims", default="", help="comma-separated simplex dimensions")
    g.add_argument("--distance", type=int, default=0,
                   help="join dimension of the two punctures (default: opposite)")
    g.add_argument("--as-facestruct", action="store_true",
                   help="emit the face-structure form of punctured_cube")
    g.add_argument("--json", action="store_true")
    g.set_defaults(func=cmd_generate)

    v = sub.add_parser("version", help="print version")
    v.set_defaults(func=lambda args: print(__version__) or OK)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
