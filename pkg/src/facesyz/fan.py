"""Rational simplicial fans as combinatorial stand-ins for smooth toric
varieties.

Only simplicial fans whose cones are unimodular are accepted; singular
input is rejected, not approximated.  Validation is combinatorial plus
per-cone lattice checks; the full convex-geometric intersection axiom is
deliberately not verified (see validate).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import gcd
from typing import Iterable, Sequence

from .exactla import Matrix
from .simplicial import SimplicialComplex, link_with_vertices

ConeRef = frozenset


def _vector_gcd(v: Iterable[int]) -> int:
    g = 0
    for x in v:
        g = gcd(g, abs(x))
    return g


def _max_minor_gcd(rays: Sequence[Sequence[int]], rank: int) -> int:
    """gcd of all maximal minors of the rank x k matrix with the rays as columns."""
    k = len(rays)
    g = 0
    for rowsel in combinations(range(rank), k):
        m = Matrix(k, k, [[rays[j][i] for j in range(k)] for i in rowsel])
        det = _det_int(m)
        g = gcd(g, abs(det))
    return g


def _det_int(m: Matrix) -> int:
    n = m.rows
    if n == 0:
        return 1
    a = [[int(x) for x in row] for row in m.entries]
    # fraction-free elimination keeps everything integral
    sign = 1
    prev = 1
    for col in range(n - 1):
        pivot = next((i for i in range(col, n) if a[i][col] != 0), -1)
        if pivot < 0:
            return 0
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            sign = -sign
        p = a[col][col]
        for i in range(col + 1, n):
            for j in range(col + 1, n):
                a[i][j] = (p * a[i][j] - a[i][col] * a[col][j]) // prev
            a[i][col] = 0
        prev = p
    return sign * a[n - 1][n - 1]


@dataclass(frozen=True)
class ValidationIssue:
    where: str
    message: str

    def __str__(self) -> str:
        return f"{self.where}: {self.message}"


@dataclass
class ValidationReport:
    ok: bool
    issues: list[ValidationIssue]
    checks_run: list[str] = field(default_factory=list)

    def __str__(self) -> str:
        if self.ok:
            return "valid (" + ", ".join(self.checks_run) + ")"
        return "invalid: " + "; ".join(str(i) for i in self.issues)


class Fan:
    """Simplicial fan: ambient rank, primitive integer rays, maximal cones.

    Cones are referenced by frozensets of ray indices.  The derived cone
    poset is closed under faces (every subset of a maximal cone is a cone);
    the zero cone is always present.
    """

    def __init__(self, rank: int, rays: Sequence[Sequence[int]], maximal_cones: Iterable[Iterable[int]]):
        self.rank = int(rank)
        self.rays = tuple(tuple(int(x) for x in r) for r in rays)
        self.maximal_cones = frozenset(frozenset(int(i) for i in c) for c in maximal_cones)
        self._cones: frozenset[ConeRef] | None = None

    def cones(self) -> list[ConeRef]:
        """All cones (every face of every maximal cone), sorted deterministically."""
        if self._cones is None:
            out = {frozenset()}
            for c in self.maximal_cones:
                s = sorted(c)
                for r in range(1, len(s) + 1):
                    out.update(frozenset(x) for x in combinations(s, r))
            self._cones = frozenset(out)
        return sorted(self._cones, key=lambda c: (len(c), sorted(c)))

    def has_cone(self, sigma: Iterable[int]) -> bool:
        s = frozenset(sigma)
        return s == frozenset() or any(s <= c for c in self.maximal_cones)

    def codim(self, sigma: Iterable[int]) -> int:
        return self.rank - len(frozenset(sigma))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Fan)
            and self.rank == other.rank
            and self.rays == other.rays
            and self.maximal_cones == other.maximal_cones
        )

    def __repr__(self) -> str:
        cones = sorted(sorted(c) for c in self.maximal_cones)
        return f"Fan(rank={self.rank}, rays={list(self.rays)}, maximal_cones={cones})"


def validate(f: Fan) -> ValidationReport:
    """Validate a fan.

    Checks: ray shape and primitivity, distinctness, ray usage, listed-cone
    maximality, simpliciality (linear independence), unimodularity of every
    maximal cone (all maximal minors of its ray matrix have gcd 1), and the
    combinatorial intersection condition (the common rays of two cones form
    a cone, automatic here because the cone poset is subset-closed).  The
    convex-geometric axiom that cones meet along common faces pointwise is
    NOT checked.
    """
    issues: list[ValidationIssue] = []
    checks = [
        "ray shape", "primitivity", "distinctness", "ray usage",
        "listed-cone maximality", "simpliciality", "unimodularity",
        "face closure (by construction)", "combinatorial intersection",
    ]
    structural = False
    for i, r in enumerate(f.rays):
        if len(r) != f.rank:
            issues.append(ValidationIssue(f"ray {i}", f"length {len(r)} != rank {f.rank}"))
            structural = True
        elif _vector_gcd(r) != 1:
            issues.append(ValidationIssue(f"ray {i}", f"not primitive: {list(r)}"))
    if len(set(f.rays)) != len(f.rays):
        issues.append(ValidationIssue("rays", "duplicate ray vectors"))
    used = set().union(*f.maximal_cones) if f.maximal_cones else set()
    for i in range(len(f.rays)):
        if i not in used:
            issues.append(ValidationIssue(f"ray {i}", "not used in any maximal cone"))
    for c in f.maximal_cones:
        for v in c:
            if not 0 <= v < len(f.rays):
                issues.append(ValidationIssue(f"cone {sorted(c)}", f"unknown ray index {v}"))
                structural = True
    if structural:
        return ValidationReport(False, issues, checks)
    for c in f.maximal_cones:
        for d in f.maximal_cones:
            if c != d and c <= d:
                issues.append(ValidationIssue(f"cone {sorted(c)}", f"contained in listed cone {sorted(d)}"))
    for c in sorted(f.maximal_cones, key=lambda c: (len(c), sorted(c))):
        if not c:
            continue
        vecs = [f.rays[i] for i in sorted(c)]
        m = Matrix(f.rank, len(vecs), [[v[i] for v in vecs] for i in range(f.rank)])
        if m.rank() != len(vecs):
            issues.append(ValidationIssue(f"cone {sorted(c)}", "rays linearly dependent (not simplicial)"))
            continue
        g = _max_minor_gcd(vecs, f.rank)
        if g != 1:
            issues.append(ValidationIssue(f"cone {sorted(c)}", f"not unimodular (minor gcd {g})"))
    # Common-ray intersection condition.  With the subset-closed cone poset
    # the common-ray set of two cones is always a cone; assert anyway.
    for c in f.maximal_cones:
        for d in f.maximal_cones:
            if not f.has_cone(c & d):
                issues.append(ValidationIssue(f"cones {sorted(c)},{sorted(d)}", "common rays not a cone"))
    return ValidationReport(not issues, issues, checks)


def underlying_complex(f: Fan) -> SimplicialComplex:
    """The abstract simplicial complex whose faces are the cones' ray sets."""
    if not f.maximal_cones or f.maximal_cones == frozenset({frozenset()}):
        return SimplicialComplex.empty(len(f.rays))
    return SimplicialComplex(len(f.rays), [c for c in f.maximal_cones if c])


def cone_link(f: Fan, sigma: Iterable[int]) -> SimplicialComplex:
    """Link of a cone's ray set in the underlying complex."""
    s = frozenset(sigma)
    if not f.has_cone(s):
        raise ValueError(f"unknown cone {sorted(s)}")
    lk, _ = link_with_vertices(underlying_complex(f), s)
    return lk


@dataclass(frozen=True)
class FacePoset:
    """Face poset of the orbit space: one face per cone, rank = codim.

    The face of sigma lies below the face of tau iff sigma contains tau.
    """

    rank: int
    elements: tuple[ConeRef, ...]

    def face_rank(self, sigma: ConeRef) -> int:
        return self.rank - len(sigma)

    def leq(self, sigma: ConeRef, tau: ConeRef) -> bool:
        """P_sigma <= P_tau iff tau is a subset of sigma."""
        return tau <= sigma

    def covers(self) -> list[tuple[ConeRef, ConeRef]]:
        """Pairs (sigma, tau) with P_sigma a facet of P_tau (tau ⊂ sigma, one ray less)."""
        out = []
        elems = set(self.elements)
        for s in self.elements:
            for v in sorted(s):
                t = s - {v}
                if t in elems:
                    out.append((s, t))
        return sorted(out, key=lambda p: (sorted(p[0]), sorted(p[1])))


def face_poset(f: Fan) -> FacePoset:
    return FacePoset(f.rank, tuple(f.cones()))
