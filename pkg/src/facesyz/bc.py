"""Face complexes of graded face posets and their cohomology.

A FaceStructure is an abstract orbit-space face poset.  For every face P
the package builds a cochain complex whose column i gathers the surviving
rank-i faces below P, with incidence-sign differentials; its cohomology
drives the syzygy criterion.  Three input classes are supported:

  POLYTOPAL  face lattice only, every face an acyclic ball,
  PUNCTURED  polytopal with a set of rank-0 faces removed,
  RAW        an explicit per-face complex (published tables, exotic faces).

Toric cells contribute a single k in internal degree 0, so for fans and
polytopal structures the complexes are concentrated in degree 0; RAW
payloads may populate several internal degrees.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Mapping

from .exactla import CochainComplex, GradedDims, Matrix, cohomology_dims
from .fan import Fan, ValidationIssue, ValidationReport, cone_link
from .simplicial import reduced_homology

POLYTOPAL = "POLYTOPAL"
PUNCTURED = "PUNCTURED"
RAW = "RAW"
_TAGS = (POLYTOPAL, PUNCTURED, RAW)


class LatticeOrientationError(ValueError):
    """No consistent incidence signs exist for the given facet relation."""


def cone_label(sigma: Iterable[int]) -> str:
    return "{" + ",".join(str(i) for i in sorted(sigma)) + "}"


def face_sort_key(face_id: str):
    return (0, int(face_id), "") if face_id.isdigit() else (1, 0, face_id)


@dataclass(frozen=True)
class Face:
    id: str
    rank: int
    compact: bool
    tag: str


class FaceStructure:
    """Graded face poset with per-face payload class tags.

    The facet relation holds pairs (lower, upper) with rank difference 1
    and must have a unique maximal face.  PUNCTURED structures list the
    removed rank-0 face ids; RAW faces carry an explicit cochain complex.
    """

    def __init__(
        self,
        faces: Iterable[Face | tuple],
        covers: Iterable[tuple[str, str]],
        removed: Iterable[str] = (),
        raw: Mapping[str, CochainComplex] | None = None,
    ):
        self.faces: dict[str, Face] = {}
        for f in faces:
            if not isinstance(f, Face):
                f = Face(str(f[0]), int(f[1]), bool(f[2]), str(f[3]))
            if f.id in self.faces:
                raise ValueError(f"duplicate face id {f.id}")
            if f.tag not in _TAGS:
                raise ValueError(f"unknown class tag {f.tag}")
            self.faces[f.id] = f
        self.covers = frozenset((str(a), str(b)) for a, b in covers)
        self.removed = frozenset(str(x) for x in removed)
        self.raw = dict(raw or {})
        self._sign_cache: dict[int, dict[tuple[str, str], int]] = {}
        self._down_cache: dict[str, frozenset[str]] = {}

    # -- basic structure ------------------------------------------------

    @property
    def rank(self) -> int:
        return max((f.rank for f in self.faces.values()), default=0)

    def sorted_ids(self) -> list[str]:
        return sorted(self.faces, key=lambda i: (self.faces[i].rank, face_sort_key(i)))

    def surviving_ids(self) -> list[str]:
        return [i for i in self.sorted_ids() if i not in self.removed]

    def parents(self, fid: str) -> list[str]:
        return sorted((b for a, b in self.covers if a == fid), key=face_sort_key)

    def children(self, fid: str) -> list[str]:
        return sorted((a for a, b in self.covers if b == fid), key=face_sort_key)

    def down_set(self, fid: str) -> frozenset[str]:
        """All faces <= fid, removed ones included."""
        cached = self._down_cache.get(fid)
        if cached is not None:
            return cached
        seen = {fid}
        stack = [fid]
        while stack:
            cur = stack.pop()
            for c in self.children(cur):
                if c not in seen:
                    seen.add(c)
                    stack.append(c)
        out = frozenset(seen)
        self._down_cache[fid] = out
        return out

    def leq(self, a: str, b: str) -> bool:
        return a in self.down_set(b)

    def top_face(self) -> str:
        tops = [i for i in self.sorted_ids() if not self.parents(i)]
        if len(tops) != 1:
            raise ValueError(f"structure has {len(tops)} maximal faces, expected 1")
        return tops[0]

    # -- validation -----------------------------------------------------

    def validate(self) -> ValidationReport:
        issues: list[ValidationIssue] = []
        checks = [
            "ids", "rank grading", "unique maximal face", "removed ranks",
            "raw payload shapes", "raw d o d = 0",
        ]
        r = self.rank
        for f in self.faces.values():
            if not 0 <= f.rank <= r:
                issues.append(ValidationIssue(f"face {f.id}", f"rank {f.rank} out of range"))
        for a, b in sorted(self.covers):
            if a not in self.faces or b not in self.faces:
                issues.append(ValidationIssue(f"facet {a} {b}", "unknown face id"))
            elif self.faces[b].rank != self.faces[a].rank + 1:
                issues.append(ValidationIssue(f"facet {a} {b}", "rank difference is not 1"))
        if issues:
            return ValidationReport(False, issues, checks)
        tops = [i for i in self.sorted_ids() if not self.parents(i)]
        if len(tops) != 1:
            issues.append(ValidationIssue("poset", f"{len(tops)} maximal faces, expected 1"))
        elif self.faces[tops[0]].rank != r:
            issues.append(ValidationIssue("poset", "maximal face does not have maximal rank"))
        for x in sorted(self.removed):
            if x not in self.faces:
                issues.append(ValidationIssue(f"removed {x}", "unknown face id"))
            elif self.faces[x].rank != 0:
                issues.append(ValidationIssue(f"removed {x}", "only rank-0 faces may be removed"))
        for fid, f in self.faces.items():
            if f.tag == RAW and fid not in self.raw:
                issues.append(ValidationIssue(f"face {fid}", "RAW face without payload"))
            if f.tag != RAW and fid in self.raw:
                issues.append(ValidationIssue(f"face {fid}", "payload on non-RAW face"))
        for fid in sorted(self.raw, key=face_sort_key):
            c = self.raw[fid]
            if len(c.positions) > self.faces[fid].rank + 1:
                issues.append(ValidationIssue(f"face {fid}", "payload has more columns than rank+1"))
                continue
            try:
                c.check_d_squared()
            except ValueError as e:
                issues.append(ValidationIssue(f"face {fid}", str(e)))
        return ValidationReport(not issues, issues, checks)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FaceStructure)
            and self.faces == other.faces
            and self.covers == other.covers
            and self.removed == other.removed
            and self._raw_key() == other._raw_key()
        )

    def _raw_key(self):
        out = {}
        for fid, c in self.raw.items():
            out[fid] = (
                tuple(tuple(p.items()) for p in c.positions),
                tuple(tuple(sorted((q, m.entries) for q, m in d.items())) for d in c.differentials),
            )
        return out

    def __repr__(self) -> str:
        return (
            f"FaceStructure({len(self.faces)} faces, rank {self.rank}, "
            f"{len(self.removed)} removed)"
        )

    # -- incidence signs -------------------------------------------------

    def orientation_signs(self, free_choice: Callable[[int], int] | None = None) -> dict[tuple[str, str], int]:
        """Signs for every cover pair among non-RAW faces so that d o d = 0.

        Solved as a GF(2) system with one parity constraint per rank-2
        interval; such intervals must be diamonds (exactly two intermediate
        faces).  The solution is deterministic; free_choice lets tests
        randomize the free variables, which must not change any cohomology.
        """
        if free_choice is None and 0 in self._sign_cache:
            return self._sign_cache[0]
        covers = sorted(
            ((a, b) for a, b in self.covers
             if self.faces[a].tag != RAW and self.faces[b].tag != RAW),
            key=lambda p: (face_sort_key(p[0]), face_sort_key(p[1])),
        )
        var = {p: i for i, p in enumerate(covers)}
        ups: dict[str, list[str]] = {}
        for a, b in covers:
            ups.setdefault(a, []).append(b)
        rows: list[tuple[int, int]] = []
        for q in self.sorted_ids():
            mids = ups.get(q, ())
            two_up: dict[str, list[str]] = {}
            for m in mids:
                for s in ups.get(m, ()):
                    two_up.setdefault(s, []).append(m)
            for s, through in sorted(two_up.items(), key=lambda kv: face_sort_key(kv[0])):
                if len(through) == 1:
                    raise LatticeOrientationError(
                        f"interval [{q}, {s}] has a single intermediate face; "
                        "no sign assignment can satisfy d o d = 0"
                    )
                if len(through) != 2:
                    raise LatticeOrientationError(
                        f"interval [{q}, {s}] has {len(through)} intermediate faces; "
                        "the diamond sign solver does not apply"
                    )
                m1, m2 = through
                mask = (1 << var[(q, m1)]) | (1 << var[(m1, s)]) | (1 << var[(q, m2)]) | (1 << var[(m2, s)])
                rows.append((mask, 1))
        solution = _solve_gf2(rows, len(covers), free_choice)
        signs = {p: (-1 if solution[i] else 1) for p, i in var.items()}
        if free_choice is None:
            self._sign_cache[0] = signs
        return signs


def _solve_gf2(rows: list[tuple[int, int]], nvars: int, free_choice: Callable[[int], int] | None) -> list[int]:
    pivots: list[tuple[int, int, int]] = []  # (pivot bit index, mask, parity)
    pivot_of: dict[int, tuple[int, int]] = {}
    for mask, parity in rows:
        for bit, (pmask, pparity) in sorted(pivot_of.items()):
            if mask >> bit & 1:
                mask ^= pmask
                parity ^= pparity
        if mask == 0:
            if parity:
                raise LatticeOrientationError("inconsistent lattice: parity system unsolvable")
            continue
        bit = (mask & -mask).bit_length() - 1
        pivot_of[bit] = (mask, parity)
        pivots.append((bit, mask, parity))
    x = [0] * nvars
    pivot_bits = set(pivot_of)
    for i in range(nvars):
        if i not in pivot_bits:
            x[i] = (free_choice(i) & 1) if free_choice else 0
    for bit, mask, parity in reversed(pivots):
        acc = parity
        m = mask & ~(1 << bit)
        while m:
            b = (m & -m).bit_length() - 1
            acc ^= x[b]
            m &= m - 1
        x[bit] = acc
    return x


@dataclass
class BcComplex:
    """Cochain complex attached to one face: column i holds the surviving
    rank-i faces below the owner; RAW payloads are stored verbatim."""

    owner: str
    rank: int
    complex: CochainComplex
    column_labels: tuple[tuple[str, ...], ...] | None = None

    def cohomology(self) -> list[GradedDims]:
        return cohomology_dims(self.complex)


def bc_from_fan(f: Fan, sigma: Iterable[int]) -> BcComplex:
    """Face complex of the orbit-space face of a cone.

    Column i has one basis vector per cone containing sigma of codimension
    i; the differential removes one ray at a time with the position-parity
    sign in the fixed ray ordering, which forces d o d = 0.
    """
    s = frozenset(sigma)
    if not f.has_cone(s):
        raise ValueError(f"unknown cone {sorted(s)}")
    rank = f.codim(s)
    cols: list[list[tuple[int, ...]]] = [[] for _ in range(rank + 1)]
    for tau in f.cones():
        if s <= tau:
            cols[f.codim(tau)].append(tuple(sorted(tau)))
    for c in cols:
        c.sort()
    positions = [GradedDims({0: len(c)}) for c in cols]
    diffs = []
    for i in range(rank):
        src, tgt = cols[i], cols[i + 1]
        index = {t: k for k, t in enumerate(tgt)}
        rows = [[0] * len(src) for _ in tgt]
        for j, tau in enumerate(src):
            for pos in range(len(tau)):
                smaller = tau[:pos] + tau[pos + 1:]
                k = index.get(smaller)
                if k is not None:
                    rows[k][j] = -1 if pos % 2 else 1
        if tgt and src:
            diffs.append({0: Matrix(len(tgt), len(src), rows)})
        else:
            diffs.append({})
    return BcComplex(
        owner=cone_label(s),
        rank=rank,
        complex=CochainComplex(positions, diffs),
        column_labels=tuple(tuple(cone_label(t) for t in c) for c in cols),
    )


def bc_from_polytopal(
    s: FaceStructure,
    face_id: str,
    free_choice: Callable[[int], int] | None = None,
) -> BcComplex:
    """Face complex of a POLYTOPAL or PUNCTURED face.

    Column i has one k (internal degree 0) per surviving rank-i face below
    the owner; differentials carry the deterministic incidence signs from
    the orientation solver.  Fails loudly if no consistent signs exist.
    """
    face_id = str(face_id)
    f = s.faces.get(face_id)
    if f is None:
        raise ValueError(f"unknown face {face_id}")
    if f.tag == RAW:
        raise ValueError(f"face {face_id} is RAW; use bc_from_raw")
    if face_id in s.removed:
        raise ValueError(f"face {face_id} was removed")
    signs = s.orientation_signs(free_choice)
    down = s.down_set(face_id)
    cols: list[list[str]] = [[] for _ in range(f.rank + 1)]
    for q in s.sorted_ids():
        if q in down and q not in s.removed:
            if s.faces[q].tag == RAW:
                raise ValueError(f"RAW face {q} below polytopal face {face_id}")
            cols[s.faces[q].rank].append(q)
    positions = [GradedDims({0: len(c)}) for c in cols]
    diffs = []
    for i in range(f.rank):
        src, tgt = cols[i], cols[i + 1]
        index = {t: k for k, t in enumerate(tgt)}
        rows = [[0] * len(src) for _ in tgt]
        for j, q in enumerate(src):
            for up in s.parents(q):
                k = index.get(up)
                if k is not None:
                    rows[k][j] = signs[(q, up)]
        if tgt and src:
            diffs.append({0: Matrix(len(tgt), len(src), rows)})
        else:
            diffs.append({})
    out = BcComplex(face_id, f.rank, CochainComplex(positions, diffs),
                    tuple(tuple(c) for c in cols))
    out.complex.check_d_squared()
    return out


def bc_from_raw(s: FaceStructure, face_id: str) -> BcComplex:
    """Return the stored complex of a RAW face verbatim, after validation."""
    face_id = str(face_id)
    f = s.faces.get(face_id)
    if f is None:
        raise ValueError(f"unknown face {face_id}")
    payload = s.raw.get(face_id)
    if payload is None:
        raise ValueError(f"face {face_id} has no RAW payload")
    if len(payload.positions) > f.rank + 1:
        raise ValueError(f"payload of {face_id} has more columns than rank+1")
    payload.check_d_squared()
    if len(payload.positions) < f.rank + 1:
        pad = [GradedDims()] * (f.rank + 1 - len(payload.positions))
        payload = CochainComplex(list(payload.positions) + pad, payload.differentials)
    return BcComplex(face_id, f.rank, payload)


def bc_for_face(s: FaceStructure, face_id: str) -> BcComplex:
    if s.faces[str(face_id)].tag == RAW:
        return bc_from_raw(s, face_id)
    return bc_from_polytopal(s, face_id)


def bc_cohomology(b: BcComplex) -> list[GradedDims]:
    return b.cohomology()


def link_correspondence_check(f: Fan, sigma: Iterable[int]) -> bool:
    """Compare cone-face cohomology with link homology.

    The position-i cohomology of the face complex, re-indexed by
    i -> codim(sigma) - i - 1, must equal the reduced homology of the
    cone's link; both sides must be concentrated in internal degree 0.
    """
    s = frozenset(sigma)
    h = bc_cohomology(bc_from_fan(f, s))
    lk_h = reduced_homology(cone_link(f, s))
    c = f.codim(s)
    for i, dims in enumerate(h):
        for q, d in dims.items():
            if q != 0:
                return False
            if d != lk_h.get(c - i - 1):
                return False
    for ell, d in lk_h.items():
        i = c - ell - 1
        if not 0 <= i <= c or h[i].get(0) != d:
            return False
    return True


@dataclass
class E2Report:
    """E2 page of the orbit-space spectral sequence plus the vanishing check.

    cells maps (p, q) to a dimension.  When no higher differential can hit
    or leave a nonzero cell the sequence degenerates and hc gives the
    compact-support cohomology of the orbit space by total degree; the
    vanishing bound (degrees above r - j must vanish) is asserted for fans.
    """

    cells: dict[tuple[int, int], int]
    degenerate: bool
    hc: GradedDims | None = None
    bound: int | None = None
    bound_ok: bool | None = None
    note: str = ""


def _degenerate(cells: Mapping[tuple[int, int], int]) -> bool:
    live = [pq for pq, d in cells.items() if d]
    for p, q in live:
        for p2, q2 in live:
            k = p2 - p
            if k >= 2 and q2 == q - k + 1:
                return False
    return True


def orbit_space_e2(obj, order: int) -> E2Report:
    """E2 table of the whole orbit space, given the computed syzygy order."""
    if isinstance(obj, Fan):
        b = bc_from_fan(obj, frozenset())
        rank = obj.rank
        toric = True
    else:
        b = bc_for_face(obj, obj.top_face())
        rank = obj.rank
        toric = False
    h = bc_cohomology(b)
    cells = {}
    for p, dims in enumerate(h):
        for q, d in dims.items():
            cells[(p, q)] = d
    if not _degenerate(cells):
        return E2Report(cells, False, note="degeneration unknown; higher differentials possible")
    hc = {}
    for (p, q), d in cells.items():
        hc[p + q] = hc.get(p + q, 0) + d
    hc_dims = GradedDims(hc)
    bound = bound_ok = None
    if toric:
        bound = rank - order
        bound_ok = all(deg <= bound for deg in hc_dims.degrees())
    return E2Report(cells, True, hc_dims, bound, bound_ok)
