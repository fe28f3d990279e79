"""Independent commutative-algebra oracle: squarefree monomial ideals,
Taylor resolutions, multigraded Ext tables, depth, and face rings.

The oracle computes the syzygy order of a fan a third way, through
depth of the link face rings, and double-checks the face-complex pipeline
against classical Ext decompositions of face rings.  Everything is exact;
per-multidegree evaluations reduce Ext computations to small 0/+-1
complexes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations
from math import comb

from .bc import FaceStructure, POLYTOPAL, cone_label
from .exactla import GradedDims, HilbertSeries, series_add
from .fan import Fan, cone_link
from .simplicial import SimplicialComplex, all_faces, link, reduced_homology
from .sparseq import sparse_rank
from .syzygy import FaceDiagnostic, SyzygyReport


@dataclass(frozen=True)
class MonomialIdeal:
    """Squarefree monomial ideal given by the supports of its minimal
    generators (pairwise incomparable subsets of range(n))."""

    n: int
    gens: tuple[frozenset[int], ...]

    def __post_init__(self):
        for g in self.gens:
            for v in g:
                if not 0 <= v < self.n:
                    raise ValueError(f"variable {v} out of range")
        for g in self.gens:
            for h in self.gens:
                if g != h and g <= h:
                    raise ValueError("generators not pairwise incomparable")

    @classmethod
    def from_supports(cls, n: int, supports) -> "MonomialIdeal":
        gens = sorted({frozenset(s) for s in supports}, key=lambda g: (len(g), sorted(g)))
        return cls(n, tuple(gens))

    def is_zero(self) -> bool:
        return not self.gens

    def key(self):
        return (self.n, tuple(tuple(sorted(g)) for g in self.gens))


def stanley_reisner_ideal(obj: SimplicialComplex | Fan) -> MonomialIdeal:
    """Ideal of minimal non-faces of a complex (or of a fan's ray complex)."""
    if isinstance(obj, Fan):
        from .fan import underlying_complex

        k = underlying_complex(obj)
    else:
        k = obj
    if k.is_void:
        raise ValueError("VOID complex has no face ring")
    n = k.vertex_count
    fc = all_faces(k)
    non_faces: list[frozenset[int]] = []
    for size in range(1, n + 1):
        for c in combinations(range(n), size):
            s = frozenset(c)
            if s in fc:
                continue
            if any(nf <= s for nf in non_faces):
                continue
            non_faces.append(s)
    return MonomialIdeal.from_supports(n, non_faces)


@dataclass
class TaylorComplex:
    """Taylor resolution of R/I: basis e_S for subsets S of the generator
    list, labelled by lcm_S (union of supports), with +-monomial-ratio
    differential entries.  Length = number of generators."""

    ideal: MonomialIdeal

    @property
    def length(self) -> int:
        return len(self.ideal.gens)

    def lcm(self, subset) -> frozenset[int]:
        out: frozenset[int] = frozenset()
        for i in subset:
            out |= self.ideal.gens[i]
        return out

    def basis(self, i: int) -> list[tuple[int, ...]]:
        return sorted(combinations(range(self.length), i))

    def boundary(self, subset: tuple[int, ...]):
        """d(e_S) = sum over removals of (sign, smaller subset, monomial support ratio)."""
        out = []
        big = self.lcm(subset)
        for pos in range(len(subset)):
            smaller = subset[:pos] + subset[pos + 1:]
            sign = -1 if pos % 2 else 1
            out.append((sign, smaller, big - self.lcm(smaller)))
        return out

    def check_d_squared(self) -> None:
        # monomial factors along both removal orders agree, so d o d = 0
        # reduces to sign cancellation per codimension-2 pair
        for i in range(2, self.length + 1):
            for subset in self.basis(i):
                acc: dict[tuple[int, ...], int] = {}
                for s1, mid, _ in self.boundary(subset):
                    for s2, small, _ in self.boundary(mid):
                        acc[small] = acc.get(small, 0) + s1 * s2
                if any(acc.values()):
                    raise ValueError(f"Taylor d o d != 0 at {subset}")

    def evaluate_at(self, multidegree: tuple[int, ...]) -> list[int]:
        """Dimensions of the cohomology of the dual complex Hom(T, R) in one
        multidegree.  Entry i is dim Ext^i in that multidegree."""
        alive_pred = _alive_predicate(self, multidegree)
        return _dual_cohomology(self, alive_pred)


def taylor_complex(I: MonomialIdeal) -> TaylorComplex:
    return TaylorComplex(I)


def _alive_predicate(t: TaylorComplex, multidegree: tuple[int, ...]):
    n = t.ideal.n

    def alive(subset) -> bool:
        lcm = t.lcm(subset)
        for v in range(n):
            a = multidegree[v] + (1 if v in lcm else 0)
            if a < 0:
                return False
        return True

    return alive


def _dual_cohomology(t: TaylorComplex, alive) -> list[int]:
    g = t.length
    bases: list[list[tuple[int, ...]]] = []
    for i in range(g + 1):
        bases.append([s for s in t.basis(i) if alive(s)])
    ranks = []
    for i in range(g):
        src = {s: k for k, s in enumerate(bases[i])}
        rows = []
        for big in bases[i + 1]:
            row: dict[int, int] = {}
            for pos in range(len(big)):
                small = big[:pos] + big[pos + 1:]
                k = src.get(small)
                if k is not None:
                    row[k] = -1 if pos % 2 else 1
            if row:
                rows.append(row)
        ranks.append(sparse_rank(rows))
    out = []
    for i in range(g + 1):
        rk_in = ranks[i - 1] if i >= 1 else 0
        rk_out = ranks[i] if i < g else 0
        out.append(len(bases[i]) - rk_in - rk_out)
    return out


@dataclass
class ExtTable:
    """Multigraded dimensions f_i(N) of Ext^i(R/I, R) over the squarefree
    negative-support patterns N in {0,-1}^n.  Only nonzero cells are stored;
    f_i(N) = 0 for i > n always holds (checked by the test suite)."""

    n: int
    entries: dict[tuple[int, frozenset[int]], int] = field(default_factory=dict)

    def f(self, i: int, pattern) -> int:
        return self.entries.get((i, frozenset(pattern)), 0)

    def max_index(self) -> int:
        return max((i for i, _ in self.entries), default=0)

    def cells(self) -> list[tuple[int, tuple[int, ...], int]]:
        out = [(i, tuple(sorted(N)), d) for (i, N), d in self.entries.items()]
        return sorted(out)

    def hilbert_series(self, i: int) -> HilbertSeries:
        """Total-degree series of Ext^i scaled by q^n (q per degree-2 step).

        q^n * sum over N of f_i(N) q^(-|N|) (1-q)^(-(n-|N|)), which the
        scaling turns into sum of f_i(N) q^(n-|N|) / (1-q)^(n-|N|).
        """
        out = HilbertSeries.zero()
        for (j, N), d in sorted(self.entries.items(), key=lambda kv: (kv[0][0], sorted(kv[0][1]))):
            if j != i:
                continue
            e = self.n - len(N)
            out = series_add(out, HilbertSeries([0] * e + [d], e))
        return out


_ext_cache: dict[tuple, ExtTable] = {}


def ext_table(I: MonomialIdeal) -> ExtTable:
    """Ext table by evaluating the dualized Taylor complex one squarefree
    negative pattern at a time: e_S* survives at pattern N iff N is
    contained in the support of lcm_S, and the surviving differential
    entries are +-1."""
    cached = _ext_cache.get(I.key())
    if cached is not None:
        return cached
    t = taylor_complex(I)
    table = ExtTable(I.n)
    for size in range(I.n + 1):
        for c in combinations(range(I.n), size):
            N = frozenset(c)
            multidegree = tuple(-1 if v in N else 0 for v in range(I.n))
            dims = t.evaluate_at(multidegree)
            for i, d in enumerate(dims):
                if d:
                    table.entries[(i, N)] = d
    _ext_cache[I.key()] = table
    return table


def depth_pd(I: MonomialIdeal) -> tuple[int, int]:
    """(depth, projective dimension) of R/I.

    pd is the largest i with a nonzero Ext cell (0 for the zero ideal);
    depth = n - pd.
    """
    if I.is_zero():
        return (I.n, 0)
    pd = ext_table(I).max_index()
    return (I.n - pd, pd)


_depth_cache: dict[tuple, tuple[int, int]] = {}
_depth_raw_cache: dict[tuple, tuple[int, int]] = {}


def _iso_key(k: SimplicialComplex) -> tuple:
    """Structural key up to vertex relabelling (small vertex counts only)."""
    if k.vertex_count > 6:
        return k.key()
    best = None
    facets = [tuple(sorted(f)) for f in k.facets]
    for perm in permutations(range(k.vertex_count)):
        cand = tuple(sorted(tuple(sorted(perm[v] for v in f)) for f in facets))
        if best is None or cand < best:
            best = cand
    return (k.vertex_count, best)


def depth_of_complex(k: SimplicialComplex) -> tuple[int, int]:
    """(depth, pd) of the face ring of a complex, cached up to isomorphism."""
    raw = k.key()
    got = _depth_raw_cache.get(raw)
    if got is None:
        key = _iso_key(k)
        got = _depth_cache.get(key)
        if got is None:
            got = depth_pd(stanley_reisner_ideal(k))
            _depth_cache[key] = got
        _depth_raw_cache[raw] = got
    return got


def syzygy_order_oracle(f: Fan) -> SyzygyReport:
    """Syzygy order via depth: a cone of codimension c permits j iff the
    depth of its link's face ring is at least min(j, c).  Depth is intrinsic
    (over the link's own vertex polynomial ring)."""
    r = f.rank
    diags = []
    for sigma in f.cones():
        c = f.codim(sigma)
        depth, pd = depth_of_complex(cone_link(f, sigma))
        max_j = r if depth >= c else depth
        diags.append(FaceDiagnostic(cone_label(sigma), c, [GradedDims({0: depth})], max_j))
    order = min((d.max_j for d in diags), default=r)
    return SyzygyReport(min(order, r), r, diags, method="oracle")


@dataclass
class DecompositionCheck:
    ok: bool
    cell_mismatches: list[tuple] = field(default_factory=list)
    series_ok: bool = True

    def __bool__(self) -> bool:
        return self.ok


def ext_decomposition_check(k: SimplicialComplex) -> DecompositionCheck:
    """Cross-validate the Ext table of a face ring against link homology.

    For every subset M of the vertices, with N its complement: when M is a
    face, f_i(N) must equal dim of reduced homology of link(M) in degree
    n - i - |M| - 1; when M is not a face, every f_i(N) must vanish.  The
    total-degree Hilbert series of both sides (with the q^n scaling) must
    agree as well.  Both sides are computed by independent pipelines.
    """
    I = stanley_reisner_ideal(k)
    table = ext_table(I)
    n = k.vertex_count
    fc = all_faces(k)
    max_i = max(table.max_index(), n)
    mismatches = []
    link_h: dict[frozenset[int], GradedDims] = {}
    for size in range(n + 1):
        for c in combinations(range(n), size):
            M = frozenset(c)
            N = frozenset(range(n)) - M
            if M in fc:
                h = reduced_homology(link(k, M))
                link_h[M] = h
            for i in range(max_i + 1):
                expected = link_h[M].get(n - i - len(M) - 1) if M in fc else 0
                got = table.f(i, N)
                if got != expected:
                    mismatches.append((i, tuple(sorted(N)), got, expected))
    series_ok = True
    for i in range(max_i + 1):
        lhs = table.hilbert_series(i)
        rhs = HilbertSeries.zero()
        for M in sorted(link_h, key=lambda m: (len(m), sorted(m))):
            d = link_h[M].get(n - i - len(M) - 1)
            if d:
                rhs = series_add(rhs, HilbertSeries([0] * len(M) + [d], len(M)))
        if lhs != rhs:
            series_ok = False
    return DecompositionCheck(not mismatches and series_ok, mismatches, series_ok)


_decomp_cache: dict[tuple, bool] = {}


def ext_decomposition_ok(k: SimplicialComplex) -> bool:
    """Cached pass/fail wrapper around ext_decomposition_check (corpus use)."""
    key = _iso_key(k)
    got = _decomp_cache.get(key)
    if got is None:
        got = bool(ext_decomposition_check(k).ok)
        _decomp_cache[key] = got
    return got


@dataclass
class FaceRingRelation:
    """t_p * t_q = t_join * sum of t_o over the terms (empty sum = zero)."""

    p: str
    q: str
    join: str
    join_is_top: bool
    terms: tuple[str, ...]

    def render(self) -> str:
        lhs = f"t[{self.p}]*t[{self.q}]"
        if not self.terms:
            return f"{lhs} = 0"
        j = "" if self.join_is_top else f"t[{self.join}]*"
        rhs = " + ".join(f"{j}t[{o}]" for o in self.terms)
        return f"{lhs} = {rhs}"


@dataclass
class FaceRingPresentation:
    """Generators t_P (degree 2 codim P, top face excluded as the unit) and
    the pairwise product relations of the face ring of the poset."""

    generators: tuple[tuple[str, int], ...]
    relations: tuple[FaceRingRelation, ...]


def face_ring_presentation(obj: FaceStructure | Fan) -> FaceRingPresentation:
    """Face ring of the face poset.

    The join P v Q is the unique minimal common upper bound (non-unique
    joins are an error); the intersection terms are the maximal common
    lower bounds of complementary codimension, making every relation
    homogeneous.  For fans this specializes to the Stanley-Reisner
    presentation on the codimension-1 faces.
    """
    if isinstance(obj, Fan):
        return _face_ring_fan(obj)
    return _face_ring_structure(obj)


def _face_ring_fan(f: Fan) -> FaceRingPresentation:
    cones = [c for c in f.cones() if c]
    gens = tuple((cone_label(c), 2 * len(c)) for c in cones)
    rels = []
    for a, b in combinations(cones, 2):
        if a <= b or b <= a:
            continue  # comparable faces give tautological relations
        join = a & b
        union = a | b
        terms = (cone_label(union),) if f.has_cone(union) else ()
        rels.append(
            FaceRingRelation(cone_label(a), cone_label(b), cone_label(join), not join, terms)
        )
    return FaceRingPresentation(gens, tuple(rels))


def _face_ring_structure(s: FaceStructure) -> FaceRingPresentation:
    for face in s.faces.values():
        if face.tag != POLYTOPAL:
            raise ValueError("face ring presentations require an unpunctured POLYTOPAL structure")
    top = s.top_face()
    r = s.rank
    ids = [i for i in s.sorted_ids() if i != top]
    gens = tuple((i, 2 * (r - s.faces[i].rank)) for i in ids)
    rels = []
    for a, b in combinations(ids, 2):
        if s.leq(a, b) or s.leq(b, a):
            continue
        uppers = [u for u in s.sorted_ids() if s.leq(a, u) and s.leq(b, u)]
        minimal_uppers = [u for u in uppers if not any(s.leq(v, u) and v != u for v in uppers)]
        if len(minimal_uppers) != 1:
            raise ValueError(f"faces {a}, {b} have {len(minimal_uppers)} minimal joins")
        join = minimal_uppers[0]
        lowers = [o for o in s.sorted_ids() if s.leq(o, a) and s.leq(o, b)]
        maximal_lowers = [o for o in lowers if not any(s.leq(o, v) and v != o for v in lowers)]
        want_rank = s.faces[a].rank + s.faces[b].rank - s.faces[join].rank
        terms = tuple(o for o in maximal_lowers if s.faces[o].rank == want_rank)
        rels.append(FaceRingRelation(a, b, join, join == top, terms))
    return FaceRingPresentation(gens, tuple(rels))


def koszul_syzygy_hilbert(r: int, j: int) -> HilbertSeries:
    """Hilbert series of the j-th syzygy module in the Koszul resolution of
    the residue field of an r-variable polynomial ring (K_0 = k)."""
    if not 0 <= j <= r:
        raise ValueError("need 0 <= j <= r")
    coeffs = [0] * (r + 1)
    for i in range(j, r + 1):
        coeffs[i] = (-1) ** (i - j) * comb(r, i)
    return HilbertSeries(coeffs, r)


def face_count_series(k: SimplicialComplex) -> HilbertSeries:
    """Hilbert series of a face ring from face counts:
    sum over faces of q^|F| / (1-q)^|F|."""
    out = HilbertSeries.zero()
    for fface in sorted(all_faces(k), key=lambda x: (len(x), sorted(x))):
        m = len(fface)
        out = series_add(out, HilbertSeries([0] * m + [1], m))
    return out


def resolution_alternating_series(I: MonomialIdeal) -> HilbertSeries:
    """Hilbert series of R/I from the Taylor resolution's alternating sum."""
    t = taylor_complex(I)
    out = HilbertSeries.zero()
    for i in range(t.length + 1):
        for subset in t.basis(i):
            m = len(t.lcm(subset))
            sign = 1 if i % 2 == 0 else -1
            out = series_add(out, HilbertSeries([0] * m + [sign], I.n))
    return out
