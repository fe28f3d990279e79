"""Chang-Skjelbred kernels of moment graphs.

The kernel {(f_v) : f_u - f_v divisible by the edge weight for every edge}
computes the equivariant cohomology of the underlying space exactly when
that module is a second syzygy; callers are expected to certify the order
separately (the punctured-product examples with order >= 2 are the target
use).  Dimensions only, degree by degree, by exact linear algebra.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .exactla import GradedDims
from .sparseq import sparse_rank


@dataclass(frozen=True)
class GkmEdge:
    u: str
    v: str
    weight: tuple[int, ...]


class GkmGraph:
    """Moment graph: vertex labels and edges with primitive integer weights."""

    def __init__(self, rank: int, vertices, edges):
        self.rank = int(rank)
        self.vertices = tuple(str(v) for v in vertices)
        es = []
        for e in edges:
            if isinstance(e, GkmEdge):
                es.append(e)
            else:
                u, v, w = e
                es.append(GkmEdge(str(u), str(v), tuple(int(x) for x in w)))
        self.edges = tuple(es)
        self._validate()

    def _validate(self) -> None:
        if self.rank < 1:
            raise ValueError("rank must be >= 1")
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("duplicate vertex labels")
        names = set(self.vertices)
        seen = set()
        for e in self.edges:
            if e.u not in names or e.v not in names:
                raise ValueError(f"edge {e.u}-{e.v} references unknown vertex")
            if e.u == e.v:
                raise ValueError(f"loop at {e.u}")
            key = frozenset((e.u, e.v))
            if key in seen:
                raise ValueError(f"duplicate edge {e.u}-{e.v}")
            seen.add(key)
            if len(e.weight) != self.rank:
                raise ValueError(f"edge {e.u}-{e.v} weight length != rank")
            g = 0
            for x in e.weight:
                g = gcd(g, abs(x))
            if g != 1:
                raise ValueError(f"edge {e.u}-{e.v} weight not primitive")

    def __repr__(self) -> str:
        return f"GkmGraph(rank={self.rank}, {len(self.vertices)} vertices, {len(self.edges)} edges)"


def from_punctured_cube(r: int) -> GkmGraph:
    """Moment graph of the r-fold product of projective lines with the two
    fixed points at opposite vertices removed.

    Surviving vertices are the 0/1 words other than all-zeros and all-ones;
    edges join words differing in one coordinate i, with weight e_i.  Edges
    incident to a removed vertex are dropped entirely.
    """
    if r < 1:
        raise ValueError("r must be >= 1")
    words = []
    for x in range(2 ** r):
        bits = tuple((x >> i) & 1 for i in range(r))
        if all(bits) or not any(bits):
            continue
        words.append(bits)
    words.sort()
    label = lambda bits: "".join(str(b) for b in bits)
    edges = []
    have = set(words)
    for bits in words:
        for i in range(r):
            if bits[i] == 0:
                other = bits[:i] + (1,) + bits[i + 1:]
                if other in have:
                    weight = tuple(1 if j == i else 0 for j in range(r))
                    edges.append((label(bits), label(other), weight))
    return GkmGraph(r, [label(b) for b in words], edges)


def _monomials(r: int, m: int) -> list[tuple[int, ...]]:
    if m < 0:
        return []
    if r == 1:
        return [(m,)]
    out = []
    for first in range(m, -1, -1):
        for rest in _monomials(r - 1, m - first):
            out.append((first,) + rest)
    return out


def cs_kernel_dims(g: GkmGraph, max_degree: int) -> GradedDims:
    """Kernel dimensions per even topological degree up to max_degree.

    The divisibility condition f_u - f_v in (weight) is linearized with one
    unknown cofactor polynomial per edge and solved exactly on monomial
    coefficients, degree by degree.
    """
    if max_degree < 0 or max_degree % 2:
        raise ValueError("max_degree must be even and >= 0")
    if not g.vertices:
        raise ValueError("degenerate moment graph with no vertices")
    dims = {}
    vidx = {v: i for i, v in enumerate(g.vertices)}
    for m in range(max_degree // 2 + 1):
        mons = _monomials(g.rank, m)
        midx = {mu: i for i, mu in enumerate(mons)}
        lower = _monomials(g.rank, m - 1)
        lidx = {mu: i for i, mu in enumerate(lower)}
        nf = len(g.vertices) * len(mons)
        rows = []
        for ei, e in enumerate(g.edges):
            base_g = nf + ei * len(lower)
            fu = vidx[e.u] * len(mons)
            fv = vidx[e.v] * len(mons)
            for mu in mons:
                row = {fu + midx[mu]: 1, fv + midx[mu]: -1}
                for i, wi in enumerate(e.weight):
                    if wi and mu[i] >= 1:
                        nu = mu[:i] + (mu[i] - 1,) + mu[i + 1:]
                        col = base_g + lidx[nu]
                        row[col] = row.get(col, 0) - wi
                rows.append(row)
        nvars = nf + len(g.edges) * len(lower)
        dim = nvars - sparse_rank(rows)
        # cofactors are uniquely determined by the section, so the kernel
        # projects isomorphically onto the f-part
        dims[2 * m] = dim
    return GradedDims(dims)
