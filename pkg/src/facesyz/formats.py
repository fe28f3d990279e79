"""Line-oriented text formats (with JSON variants) for fans, simplicial
complexes, face structures and moment graphs.

All numbers are exact: integers, or rationals written p/q.  '#' starts a
comment.  Parse errors carry file name and line number.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .bc import Face, FaceStructure
from .exactla import CochainComplex, GradedDims, Matrix
from .fan import Fan
from .gkm import GkmGraph
from .simplicial import SimplicialComplex


class FormatError(ValueError):
    pass


def _lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def _fail(path: str, lineno: int, message: str):
    raise FormatError(f"{path}:{lineno}: {message}")


def _ints(path, lineno, tokens):
    out = []
    for t in tokens:
        try:
            out.append(int(t))
        except ValueError:
            _fail(path, lineno, f"expected integer, got {t!r}")
    return out


def _rationals(path, lineno, tokens):
    out = []
    for t in tokens:
        try:
            out.append(Fraction(t))
        except (ValueError, ZeroDivisionError):
            _fail(path, lineno, f"expected rational, got {t!r}")
    return out


def looks_like_json(text: str, path: str = "") -> bool:
    if str(path).endswith(".json"):
        return True
    stripped = text.lstrip()
    return stripped.startswith("{")


# ---------------------------------------------------------------- fans


def parse_fan(text: str, path: str = "<fan>") -> Fan:
    if looks_like_json(text, path):
        return fan_from_json(json.loads(text), path)
    rank = None
    rays: dict[int, tuple[int, ...]] = {}
    cones: list[frozenset[int]] = []
    for lineno, line in _lines(text):
        tokens = line.replace(":", " : ").split()
        head = tokens[0]
        if head == "rank":
            if rank is not None:
                _fail(path, lineno, "duplicate rank line")
            (rank,) = _ints(path, lineno, tokens[1:2])
        elif head == "ray":
            if rank is None:
                _fail(path, lineno, "ray before rank")
            if ":" not in tokens:
                _fail(path, lineno, "ray line needs a colon")
            sep = tokens.index(":")
            (idx,) = _ints(path, lineno, tokens[1:sep])
            vec = tuple(_ints(path, lineno, tokens[sep + 1:]))
            if idx in rays:
                _fail(path, lineno, f"duplicate ray {idx}")
            rays[idx] = vec
        elif head == "cone":
            sep = tokens.index(":") if ":" in tokens else 0
            cones.append(frozenset(_ints(path, lineno, tokens[sep + 1:])))
        else:
            _fail(path, lineno, f"unknown directive {head!r}")
    if rank is None:
        _fail(path, 1, "missing rank line")
    if sorted(rays) != list(range(len(rays))):
        _fail(path, 1, "ray indices must be exactly 0..n-1")
    ray_list = [rays[i] for i in range(len(rays))]
    return Fan(rank, ray_list, cones)


def fan_from_json(data: dict, path: str = "<fan>") -> Fan:
    try:
        if data.get("kind", "fan") != "fan":
            raise FormatError(f"{path}: kind is not fan")
        return Fan(data["rank"], data["rays"], data.get("maximal_cones", []))
    except (KeyError, TypeError) as e:
        raise FormatError(f"{path}: malformed fan json ({e})") from None


def write_fan(f: Fan, json_variant: bool = False) -> str:
    if json_variant:
        return json.dumps(fan_to_json(f), indent=1, sort_keys=True) + "\n"
    out = [f"rank {f.rank}"]
    for i, r in enumerate(f.rays):
        out.append(f"ray {i}: " + " ".join(str(x) for x in r))
    for c in sorted(f.maximal_cones, key=lambda c: (len(c), sorted(c))):
        out.append("cone: " + " ".join(str(i) for i in sorted(c)))
    return "\n".join(out) + "\n"


def fan_to_json(f: Fan) -> dict:
    return {
        "kind": "fan",
        "rank": f.rank,
        "rays": [list(r) for r in f.rays],
        "maximal_cones": sorted([sorted(c) for c in f.maximal_cones]),
    }


# ----------------------------------------------------- simplicial complexes


def parse_complex(text: str, path: str = "<complex>") -> SimplicialComplex:
    if looks_like_json(text, path):
        return complex_from_json(json.loads(text), path)
    vertices = None
    facets = []
    special = None
    for lineno, line in _lines(text):
        tokens = line.replace(":", " : ").split()
        head = tokens[0]
        if head == "vertices":
            (vertices,) = _ints(path, lineno, tokens[1:2])
        elif head == "facet":
            sep = tokens.index(":") if ":" in tokens else 0
            facets.append(_ints(path, lineno, tokens[sep + 1:]))
        elif head in ("VOID", "EMPTY"):
            special = head
        else:
            _fail(path, lineno, f"unknown directive {head!r}")
    if special == "VOID":
        if facets:
            _fail(path, 1, "VOID complex cannot list facets")
        return SimplicialComplex.void(vertices or 0)
    if special == "EMPTY":
        if facets:
            _fail(path, 1, "EMPTY complex cannot list facets")
        return SimplicialComplex.empty(vertices or 0)
    if vertices is None:
        vertices = max((max(f) + 1 for f in facets if f), default=0)
    try:
        return SimplicialComplex(vertices, facets)
    except ValueError as e:
        raise FormatError(f"{path}: {e}") from None


def complex_from_json(data: dict, path: str = "<complex>") -> SimplicialComplex:
    try:
        if data.get("kind", "complex") != "complex":
            raise FormatError(f"{path}: kind is not complex")
        special = data.get("special")
        n = data.get("vertices", 0)
        if special == "VOID":
            return SimplicialComplex.void(n)
        if special == "EMPTY":
            return SimplicialComplex.empty(n)
        facets = data["facets"]
        if "vertices" not in data:
            n = max((max(f) + 1 for f in facets if f), default=0)
        return SimplicialComplex(n, facets)
    except (KeyError, TypeError) as e:
        raise FormatError(f"{path}: malformed complex json ({e})") from None


def write_complex(k: SimplicialComplex, json_variant: bool = False) -> str:
    if json_variant:
        return json.dumps(complex_to_json(k), indent=1, sort_keys=True) + "\n"
    out = [f"vertices {k.vertex_count}"]
    if k.is_void:
        out.append("VOID")
    elif k.is_empty:
        out.append("EMPTY")
    else:
        for f in sorted(k.facets, key=lambda f: (len(f), sorted(f))):
            out.append("facet: " + " ".join(str(v) for v in sorted(f)))
    return "\n".join(out) + "\n"


def complex_to_json(k: SimplicialComplex) -> dict:
    data = {"kind": "complex", "vertices": k.vertex_count}
    if k.is_void:
        data["special"] = "VOID"
    elif k.is_empty:
        data["special"] = "EMPTY"
    else:
        data["facets"] = sorted([sorted(f) for f in k.facets])
    return data


# ----------------------------------------------------------- face structures


def parse_facestruct(text: str, path: str = "<facestruct>") -> FaceStructure:
    if looks_like_json(text, path):
        return facestruct_from_json(json.loads(text), path)
    faces: list[Face] = []
    covers: list[tuple[str, str]] = []
    removed: list[str] = []
    raw: dict[str, CochainComplex] = {}
    # RAW payload parser state
    cur_face: str | None = None
    cols: dict[tuple[int, int], int] = {}
    diffs: dict[tuple[int, int], list[list[Fraction]]] = {}
    pending_rows: list[list[Fraction]] | None = None
    pending_shape: tuple[int, int] | None = None
    pending_where: tuple[int, int] | None = None

    def close_matrix(lineno):
        nonlocal pending_rows, pending_shape, pending_where
        if pending_rows is None:
            return
        rows, cols_ = pending_shape
        if len(pending_rows) != rows:
            _fail(path, lineno, f"expected {rows} matrix rows, got {len(pending_rows)}")
        diffs[pending_where] = pending_rows
        pending_rows = None
        pending_shape = None
        pending_where = None

    def close_complex(lineno):
        nonlocal cur_face, cols, diffs
        close_matrix(lineno)
        if cur_face is None:
            return
        if not cols:
            _fail(path, lineno, f"complex {cur_face} has no columns")
        max_col = max(c for c, _ in cols)
        positions = []
        for c in range(max_col + 1):
            positions.append(GradedDims({q: d for (cc, q), d in cols.items() if cc == c}))
        blocks: list[dict[int, Matrix]] = [{} for _ in range(max_col)]
        for (c, q), rows in diffs.items():
            tgt = positions[c + 1].get(q)
            src = positions[c].get(q)
            blocks[c][q] = Matrix(tgt, src, rows)
        raw[cur_face] = CochainComplex(positions, blocks)
        cur_face = None
        cols = {}
        diffs = {}

    for lineno, line in _lines(text):
        tokens = line.replace(":", " : ").split()
        head = tokens[0]
        if pending_rows is not None and head not in ("face", "facet", "removed", "complex", "col", "d"):
            vals = _rationals(path, lineno, tokens)
            if len(vals) != pending_shape[1]:
                _fail(path, lineno, f"expected {pending_shape[1]} entries per row")
            pending_rows.append(vals)
            if len(pending_rows) == pending_shape[0]:
                close_matrix(lineno)
            continue
        if head == "face":
            close_complex(lineno)
            if len(tokens) != 5:
                _fail(path, lineno, "face line needs: face <id> <rank> <compact?> <class>")
            _, fid, rank, compact, tag = tokens
            if compact not in ("compact", "noncompact"):
                _fail(path, lineno, f"compact flag must be compact|noncompact, got {compact!r}")
            (rank_i,) = _ints(path, lineno, [rank])
            faces.append(Face(fid, rank_i, compact == "compact", tag))
        elif head == "facet":
            close_complex(lineno)
            if len(tokens) != 3:
                _fail(path, lineno, "facet line needs: facet <lower> <upper>")
            covers.append((tokens[1], tokens[2]))
        elif head == "removed":
            close_complex(lineno)
            sep = tokens.index(":") if ":" in tokens else 0
            removed.extend(tokens[sep + 1:])
        elif head == "complex":
            close_complex(lineno)
            if len(tokens) != 2:
                _fail(path, lineno, "complex line needs: complex <face-id>")
            cur_face = tokens[1]
        elif head == "col":
            if cur_face is None:
                _fail(path, lineno, "col outside a complex block")
            close_matrix(lineno)
            c, q, d = _ints(path, lineno, tokens[1:4])
            cols[(c, q)] = d
        elif head == "d":
            if cur_face is None:
                _fail(path, lineno, "d outside a complex block")
            close_matrix(lineno)
            c, q = _ints(path, lineno, tokens[1:3])
            tgt = cols.get((c + 1, q), 0)
            src = cols.get((c, q), 0)
            pending_shape = (tgt, src)
            pending_where = (c, q)
            pending_rows = []
            if tgt == 0:
                close_matrix(lineno)
        else:
            _fail(path, lineno, f"unknown directive {head!r}")
    close_complex(0)
    try:
        return FaceStructure(faces, covers, removed, raw)
    except ValueError as e:
        raise FormatError(f"{path}: {e}") from None


def facestruct_from_json(data: dict, path: str = "<facestruct>") -> FaceStructure:
    try:
        if data.get("kind", "facestruct") != "facestruct":
            raise FormatError(f"{path}: kind is not facestruct")
        faces = [Face(str(f["id"]), int(f["rank"]), bool(f["compact"]), str(f["class"]))
                 for f in data["faces"]]
        covers = [(str(a), str(b)) for a, b in data.get("facets", [])]
        removed = [str(x) for x in data.get("removed", [])]
        raw = {}
        for fid, payload in data.get("complexes", {}).items():
            positions = [GradedDims({int(q): d for q, d in p.items()}) for p in payload["columns"]]
            blocks: list[dict[int, Matrix]] = [{} for _ in range(max(len(positions) - 1, 0))]
            for key, rows in payload.get("differentials", {}).items():
                c_s, q_s = key.split(",")
                c, q = int(c_s), int(q_s)
                blocks[c][q] = Matrix(positions[c + 1].get(q), positions[c].get(q),
                                      [[Fraction(x) for x in row] for row in rows])
            raw[str(fid)] = CochainComplex(positions, blocks)
        return FaceStructure(faces, covers, removed, raw)
    except (KeyError, TypeError, ValueError) as e:
        if isinstance(e, FormatError):
            raise
        raise FormatError(f"{path}: malformed facestruct json ({e})") from None


def write_facestruct(s: FaceStructure, json_variant: bool = False) -> str:
    if json_variant:
        return json.dumps(facestruct_to_json(s), indent=1, sort_keys=True) + "\n"
    out = []
    for fid in s.sorted_ids():
        f = s.faces[fid]
        flag = "compact" if f.compact else "noncompact"
        out.append(f"face {f.id} {f.rank} {flag} {f.tag}")
    for a, b in sorted(s.covers):
        out.append(f"facet {a} {b}")
    if s.removed:
        out.append("removed: " + " ".join(sorted(s.removed, key=lambda x: (len(x), x))))
    for fid in sorted(s.raw):
        c = s.raw[fid]
        out.append(f"complex {fid}")
        for ci, p in enumerate(c.positions):
            for q, d in p.items():
                out.append(f"col {ci} {q} {d}")
        for ci, block in enumerate(c.differentials):
            for q, m in sorted(block.items()):
                out.append(f"d {ci} {q}")
                for row in m.entries:
                    out.append(" ".join(_fmt_rat(x) for x in row))
    return "\n".join(out) + "\n"


def _fmt_rat(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def facestruct_to_json(s: FaceStructure) -> dict:
    data = {
        "kind": "facestruct",
        "faces": [
            {"id": f.id, "rank": f.rank, "compact": f.compact, "class": f.tag}
            for f in (s.faces[i] for i in s.sorted_ids())
        ],
        "facets": sorted([list(p) for p in s.covers]),
    }
    if s.removed:
        data["removed"] = sorted(s.removed)
    if s.raw:
        complexes = {}
        for fid, c in s.raw.items():
            payload = {
                "columns": [{str(q): d for q, d in p.items()} for p in c.positions],
                "differentials": {},
            }
            for ci, block in enumerate(c.differentials):
                for q, m in block.items():
                    payload["differentials"][f"{ci},{q}"] = [
                        [_fmt_rat(x) for x in row] for row in m.entries
                    ]
            complexes[fid] = payload
        data["complexes"] = complexes
    return data


# ---------------------------------------------------------------- gkm graphs


def parse_gkm(text: str, path: str = "<gkm>") -> GkmGraph:
    if looks_like_json(text, path):
        return gkm_from_json(json.loads(text), path)
    rank = None
    vertices: list[str] = []
    edges: list[tuple[str, str, tuple[int, ...]]] = []
    for lineno, line in _lines(text):
        tokens = line.replace(":", " : ").split()
        head = tokens[0]
        if head == "rank":
            (rank,) = _ints(path, lineno, tokens[1:2])
        elif head == "vertex":
            if len(tokens) != 2:
                _fail(path, lineno, "vertex line needs one label")
            vertices.append(tokens[1])
        elif head == "edge":
            if ":" not in tokens:
                _fail(path, lineno, "edge line needs a colon before the weight")
            sep = tokens.index(":")
            if sep != 3:
                _fail(path, lineno, "edge line needs: edge <u> <v>: w1 ... wr")
            weight = tuple(_ints(path, lineno, tokens[sep + 1:]))
            edges.append((tokens[1], tokens[2], weight))
        else:
            _fail(path, lineno, f"unknown directive {head!r}")
    if rank is None:
        _fail(path, 1, "missing rank line")
    try:
        return GkmGraph(rank, vertices, edges)
    except ValueError as e:
        raise FormatError(f"{path}: {e}") from None


def gkm_from_json(data: dict, path: str = "<gkm>") -> GkmGraph:
    try:
        if data.get("kind", "gkm") != "gkm":
            raise FormatError(f"{path}: kind is not gkm")
        edges = [(str(u), str(v), tuple(w)) for u, v, w in data.get("edges", [])]
        return GkmGraph(data["rank"], [str(v) for v in data["vertices"]], edges)
    except (KeyError, TypeError, ValueError) as e:
        if isinstance(e, FormatError):
            raise
        raise FormatError(f"{path}: malformed gkm json ({e})") from None


def write_gkm(g: GkmGraph, json_variant: bool = False) -> str:
    if json_variant:
        return json.dumps(gkm_to_json(g), indent=1, sort_keys=True) + "\n"
    out = [f"rank {g.rank}"]
    for v in g.vertices:
        out.append(f"vertex {v}")
    for e in g.edges:
        out.append(f"edge {e.u} {e.v}: " + " ".join(str(x) for x in e.weight))
    return "\n".join(out) + "\n"


def gkm_to_json(g: GkmGraph) -> dict:
    return {
        "kind": "gkm",
        "rank": g.rank,
        "vertices": list(g.vertices),
        "edges": [[e.u, e.v, list(e.weight)] for e in g.edges],
    }


# ---------------------------------------------------------------- dispatch

PARSERS = {
    "fan": parse_fan,
    "complex": parse_complex,
    "facestruct": parse_facestruct,
    "gkm": parse_gkm,
}

WRITERS = {
    "fan": write_fan,
    "complex": write_complex,
    "facestruct": write_facestruct,
    "gkm": write_gkm,
}


def load(path: str | Path, kind: str):
    p = Path(path)
    if kind not in PARSERS:
        raise FormatError(f"unknown input kind {kind!r}")
    try:
        text = p.read_text()
    except OSError as e:
        raise FormatError(f"{p}: {e}") from None
    try:
        return PARSERS[kind](text, str(p))
    except json.JSONDecodeError as e:
        raise FormatError(f"{p}: invalid json ({e})") from None
