"""Abstract simplicial complexes, links, and reduced homology over the
rationals.

The two degenerate complexes are kept rigorously apart: VOID has no faces
at all, EMPTY has exactly the empty face.  The distinction matters because
reduced homology of EMPTY is one-dimensional in degree -1, and that degree
is what detects missing cofaces downstream.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable

from .exactla import GradedDims, Matrix


class SimplicialComplex:
    """Abstract simplicial complex given by vertex count and maximal faces.

    facets == frozenset()            -> VOID (no faces at all)
    facets == {frozenset()}          -> EMPTY (only the empty face)

    Invariants: no facet contains another, vertex indices < vertex_count.
    """

    __slots__ = ("vertex_count", "facets")

    def __init__(self, vertex_count: int, facets: Iterable[Iterable[int]]):
        fs = {frozenset(int(v) for v in f) for f in facets}
        for f in fs:
            for v in f:
                if not 0 <= v < vertex_count:
                    raise ValueError(f"vertex {v} out of range 0..{vertex_count - 1}")
        for f in fs:
            for g in fs:
                if f != g and f < g:
                    raise ValueError(f"facet {sorted(f)} contained in {sorted(g)}")
        self.vertex_count = int(vertex_count)
        self.facets = frozenset(fs)

    @classmethod
    def void(cls, vertex_count: int = 0) -> "SimplicialComplex":
        return cls(vertex_count, [])

    @classmethod
    def empty(cls, vertex_count: int = 0) -> "SimplicialComplex":
        return cls(vertex_count, [frozenset()])

    @classmethod
    def from_faces(cls, vertex_count: int, faces: Iterable[Iterable[int]]) -> "SimplicialComplex":
        """Build from an arbitrary generating set, pruning non-maximal faces."""
        fs = [frozenset(f) for f in faces]
        maximal = [f for f in fs if not any(f < g for g in fs)]
        return cls(vertex_count, maximal)

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def is_empty(self) -> bool:
        return self.facets == frozenset({frozenset()})

    def dim(self) -> int:
        """Dimension; -1 for EMPTY, -2 for VOID by convention."""
        if self.is_void:
            return -2
        return max(len(f) for f in self.facets) - 1

    def __contains__(self, face: Iterable[int]) -> bool:
        f = frozenset(face)
        return any(f <= g for g in self.facets)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SimplicialComplex)
            and self.vertex_count == other.vertex_count
            and self.facets == other.facets
        )

    def __hash__(self):
        return hash((self.vertex_count, self.facets))

    def __repr__(self) -> str:
        if self.is_void:
            return f"SimplicialComplex(VOID, n={self.vertex_count})"
        if self.is_empty:
            return f"SimplicialComplex(EMPTY, n={self.vertex_count})"
        fs = sorted(tuple(sorted(f)) for f in self.facets)
        return f"SimplicialComplex(n={self.vertex_count}, facets={fs})"

    def key(self) -> tuple:
        """Deterministic structural key, used for caching."""
        return (self.vertex_count, tuple(sorted(tuple(sorted(f)) for f in self.facets)))


def faces(k: SimplicialComplex, dim: int) -> set[frozenset[int]]:
    """All faces of the given dimension; the empty face sits at dim -1."""
    if dim < -1:
        raise ValueError("dimension must be >= -1")
    if k.is_void:
        return set()
    if dim == -1:
        return {frozenset()}
    out: set[frozenset[int]] = set()
    for f in k.facets:
        if len(f) >= dim + 1:
            out.update(frozenset(c) for c in combinations(sorted(f), dim + 1))
    return out


def all_faces(k: SimplicialComplex) -> set[frozenset[int]]:
    out: set[frozenset[int]] = set()
    if k.is_void:
        return out
    for f in k.facets:
        s = sorted(f)
        for r in range(len(s) + 1):
            out.update(frozenset(c) for c in combinations(s, r))
    return out


def _boundary_matrix(lower: list[tuple[int, ...]], upper: list[tuple[int, ...]]) -> Matrix:
    # faces ordered by increasing vertex index; boundary signs by position parity
    index = {f: i for i, f in enumerate(lower)}
    rows = [[0] * len(upper) for _ in lower]
    for j, f in enumerate(upper):
        for pos in range(len(f)):
            g = f[:pos] + f[pos + 1:]
            rows[index[g]][j] = -1 if pos % 2 else 1
    return Matrix(len(lower), len(upper), rows)


def reduced_homology(k: SimplicialComplex) -> GradedDims:
    """Reduced rational homology, degrees -1 .. dim.

    EMPTY has a single k in degree -1; VOID returns all zeros by convention.
    """
    if k.is_void:
        return GradedDims()
    top = k.dim()
    by_dim: list[list[tuple[int, ...]]] = []
    for d in range(-1, top + 1):
        by_dim.append(sorted(tuple(sorted(f)) for f in faces(k, d)))
    # by_dim[i] holds the (i-1)-dimensional faces
    boundaries = [
        _boundary_matrix(by_dim[i], by_dim[i + 1]) for i in range(len(by_dim) - 1)
    ]
    dims = {}
    for d in range(-1, top + 1):
        i = d + 1
        n = len(by_dim[i])
        rk_out = boundaries[i - 1].rank() if i >= 1 else 0
        rk_in = boundaries[i].rank() if i < len(boundaries) else 0
        h = n - rk_out - rk_in
        if h:
            dims[d] = h
    return GradedDims(dims)


def link(k: SimplicialComplex, face: Iterable[int]) -> SimplicialComplex:
    """Link of a face: all g disjoint from f with g | f in the complex.

    The result is re-indexed onto its own vertices in increasing order, so
    vertices of the original complex that do not appear in the link are
    dropped.  The link of a facet is EMPTY.
    """
    c, _ = link_with_vertices(k, face)
    return c


def link_with_vertices(
    k: SimplicialComplex, face: Iterable[int]
) -> tuple[SimplicialComplex, tuple[int, ...]]:
    """Link together with the original labels of its re-indexed vertices."""
    f = frozenset(face)
    if f not in k:
        raise ValueError(f"face {sorted(f)} not in the complex")
    cofacets = [g - f for g in k.facets if f <= g]
    vertices = tuple(sorted(set().union(*cofacets))) if cofacets else ()
    idx = {v: i for i, v in enumerate(vertices)}
    lk = SimplicialComplex(len(vertices), [{idx[v] for v in g} for g in cofacets])
    return lk, vertices


def is_acyclic(k: SimplicialComplex) -> bool:
    """True iff all reduced homology vanishes.

    EMPTY is not acyclic (its degree -1 homology is k) and VOID is not
    acyclic by convention, even though its homology is identically zero.
    """
    if k.is_void or k.is_empty:
        return False
    return reduced_homology(k).is_zero()


def cone(k: SimplicialComplex) -> SimplicialComplex:
    """Cone over a complex (test utility): join with one new vertex."""
    apex = k.vertex_count
    if k.is_void or k.is_empty:
        return SimplicialComplex(apex + 1, [{apex}])
    return SimplicialComplex(apex + 1, [set(f) | {apex} for f in k.facets])


def euler_characteristic_reduced(k: SimplicialComplex) -> int:
    """Alternating face count including the empty face (0 for VOID)."""
    if k.is_void:
        return 0
    total = 0
    for d in range(-1, k.dim() + 1):
        sign = 1 if d % 2 == 0 else -1
        total += sign * len(faces(k, d))
    return total
