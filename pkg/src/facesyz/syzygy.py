"""Syzygy order of the equivariant cohomology module attached to a fan or
face structure.

The criterion: the module is a j-th syzygy iff for every face P the face
complex of P has vanishing cohomology in positions above max(rank P - j, 0).
Order 0 means the module has torsion (every module is trivially a 0-th
syzygy); order 1 is torsion-freeness, order r freeness.

Two independent pipelines are provided for fans: the face-complex route
and the link-homology route; they must agree, and the stanley module adds
a third (depth) route.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .bc import (
    FaceStructure,
    RAW,
    bc_cohomology,
    bc_for_face,
    bc_from_fan,
    cone_label,
)
from .exactla import GradedDims
from .fan import Fan, cone_link
from .simplicial import SimplicialComplex, is_acyclic, reduced_homology


@dataclass
class FaceDiagnostic:
    label: str
    rank: int
    cohomology: list[GradedDims]
    max_j: int  # largest j this face permits


@dataclass
class SyzygyReport:
    order: int
    rank: int
    per_face: list[FaceDiagnostic] = field(default_factory=list)
    method: str = "faces"

    @property
    def torsion_free(self) -> bool:
        return self.order >= 1

    @property
    def free(self) -> bool:
        return self.order == self.rank


def _permitted_j(face_rank: int, cohomology: list[GradedDims], r: int) -> int:
    """Largest j for which positions above max(face_rank - j, 0) all vanish."""
    m = 0
    for i, dims in enumerate(cohomology):
        if i >= 1 and not dims.is_zero():
            m = i
    return r if m == 0 else face_rank - m


def syzygy_order_faces(obj: Fan | FaceStructure) -> SyzygyReport:
    """Syzygy order from per-face cochain complexes (the main criterion)."""
    diags: list[FaceDiagnostic] = []
    if isinstance(obj, Fan):
        r = obj.rank
        for sigma in obj.cones():
            b = bc_from_fan(obj, sigma)
            h = bc_cohomology(b)
            diags.append(FaceDiagnostic(b.owner, b.rank, h, _permitted_j(b.rank, h, r)))
    else:
        r = obj.rank
        for fid in obj.surviving_ids():
            b = bc_for_face(obj, fid)
            h = bc_cohomology(b)
            diags.append(FaceDiagnostic(fid, b.rank, h, _permitted_j(b.rank, h, r)))
    order = min((d.max_j for d in diags), default=r)
    return SyzygyReport(min(order, r), r, diags, method="faces")


def _link_blocking_degree(lk_h: GradedDims, codim: int) -> int | None:
    """Smallest degree -1 <= l <= codim-2 with nonvanishing link homology."""
    blocked = [l for l, d in lk_h.items() if -1 <= l <= codim - 2 and d]
    return min(blocked) if blocked else None


def syzygy_order_links(f: Fan) -> SyzygyReport:
    """Syzygy order from link homology.

    A cone of codimension c permits j iff the reduced homology of its link
    vanishes in all degrees -1 <= l <= min(j, c) - 2.  Must agree with
    syzygy_order_faces on every fan.
    """
    r = f.rank
    diags: list[FaceDiagnostic] = []
    for sigma in f.cones():
        c = f.codim(sigma)
        lk_h = reduced_homology(cone_link(f, sigma))
        l0 = _link_blocking_degree(lk_h, c)
        max_j = r if l0 is None else l0 + 1
        diags.append(FaceDiagnostic(cone_label(sigma), c, [lk_h], max_j))
    order = min((d.max_j for d in diags), default=r)
    return SyzygyReport(min(order, r), r, diags, method="links")


def syzygy_order_links_strict_bound(f: Fan) -> int:
    """Variant bounding link homology degrees by min(j, codim-1), exclusive.

    Kept for comparison only: on some fans (e.g. the punctured square) it
    is strictly smaller than the main bound, and the crosscheck command
    surfaces every fan where the two differ.
    """
    r = f.rank
    order = r
    for sigma in f.cones():
        c = f.codim(sigma)
        lk_h = reduced_homology(cone_link(f, sigma))
        l0 = _link_blocking_degree(lk_h, c)
        if l0 is not None:
            order = min(order, max(l0, 0))
    return order


def order_complex(ids: list[str], leq) -> SimplicialComplex:
    """Simplicial complex of chains of a finite poset (barycentric model)."""
    ids = sorted(ids)
    index = {x: i for i, x in enumerate(ids)}
    n = len(ids)
    if n == 0:
        return SimplicialComplex.empty(0)
    faces = []
    # grow chains; fine at desk scale
    chains = [[x] for x in ids]
    faces.extend(chains)
    frontier = chains
    while frontier:
        nxt = []
        for ch in frontier:
            top = ch[-1]
            for y in ids:
                if y != top and leq(top, y):
                    nxt.append(ch + [y])
        faces.extend(nxt)
        frontier = nxt
    return SimplicialComplex.from_faces(n, [{index[x] for x in ch} for ch in faces])


@dataclass
class TorusManifoldReport:
    """Acyclicity-style characterizations for polytopal face structures.

    torsion_free_test: every surviving face is acyclic and contains a
    surviving vertex (equivalent to order >= 1).
    freeness_test: additionally the boundary of every non-compact surviving
    face is acyclic (equivalent to order = rank).
    """

    torsion_free_test: bool
    freeness_test: bool
    order: int
    rank: int
    failures: list[str] = field(default_factory=list)

    @property
    def agrees_with_order(self) -> bool:
        return (self.torsion_free_test == (self.order >= 1)) and (
            self.freeness_test == (self.order == self.rank)
        )


def torus_manifold_report(s: FaceStructure) -> TorusManifoldReport:
    """Evaluate the vertex/acyclicity characterizations on a face structure.

    Face realizations are modelled through the surviving part of the poset:
    a face is the order complex of its surviving down-set (a cone, hence
    acyclic, whenever it survives), and the boundary of a face is the order
    complex of its surviving strict down-set.
    """
    for f in s.faces.values():
        if f.tag == RAW:
            raise ValueError("torus_manifold_report supports POLYTOPAL/PUNCTURED only")
    failures: list[str] = []
    surviving = set(s.surviving_ids())
    test1 = True
    for fid in s.surviving_ids():
        down = [q for q in s.down_set(fid) if q in surviving]
        has_vertex = any(s.faces[q].rank == 0 for q in down)
        if not has_vertex:
            test1 = False
            failures.append(f"face {fid} contains no surviving vertex")
        if not is_acyclic(order_complex(down, s.leq)):
            test1 = False
            failures.append(f"face {fid} is not acyclic")
    test2 = test1
    for fid in s.surviving_ids():
        if s.faces[fid].compact:
            continue
        boundary = [q for q in s.down_set(fid) if q in surviving and q != fid]
        if not is_acyclic(order_complex(boundary, s.leq)):
            test2 = False
            failures.append(f"boundary of non-compact face {fid} is not acyclic")
    order = syzygy_order_faces(s).order
    return TorusManifoldReport(test1, test2, order, s.rank, failures)


@dataclass
class DichotomyResult:
    ok: bool
    order: int
    rank: int
    detail: str = ""


def compact_dichotomy_check(s: FaceStructure) -> DichotomyResult:
    """For all-compact structures the order must be 0 (torsion) or r (free)."""
    not_compact = [f.id for f in s.faces.values() if not f.compact]
    if not_compact:
        raise ValueError(f"non-compact faces present: {sorted(not_compact)}")
    rep = syzygy_order_faces(s)
    ok = rep.order in (0, s.rank)
    detail = "" if ok else f"order {rep.order} is strictly between 0 and {s.rank}"
    return DichotomyResult(ok, rep.order, s.rank, detail)
