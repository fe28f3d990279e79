"""Named fixtures, parametric generators, and the enumerated fan corpus.

The enumerated corpus consists of the fans whose rays are drawn from the
signed unit-vector pool in ambient rank <= 3 (at most 5 rays, every ray
used, every cone a set of pairwise independent pool vectors, which makes
all cones unimodular and the collection a genuine fan).  Named fixtures
add the 6-ray complete and punctured cubes and a few non-axis fans.
"""

from __future__ import annotations

from itertools import combinations, product

from .bc import Face, FaceStructure, POLYTOPAL, PUNCTURED, RAW
from .exactla import CochainComplex, GradedDims, Matrix
from .fan import Fan
from .simplicial import SimplicialComplex

# ------------------------------------------------------------ named fans


def zero_fan(rank: int) -> Fan:
    return Fan(rank, [], [])


def fan_line(negative: bool = False) -> Fan:
    """Fan of the affine line: one ray in rank 1."""
    return Fan(1, [(-1,) if negative else (1,)], [[0]])


def fan_p1() -> Fan:
    return Fan(1, [(1,), (-1,)], [[0], [1]])


def fan_affine_plane() -> Fan:
    """One unimodular 2-cone (the plane C^2)."""
    return Fan(2, [(1, 0), (0, 1)], [[0, 1]])


def fan_plane_minus_origin() -> Fan:
    """Two rays of the quadrant without the 2-cone."""
    return Fan(2, [(1, 0), (0, 1)], [[0], [1]])


def _signed_units(r: int) -> list[tuple[int, ...]]:
    out = []
    for i in range(r):
        for s in (1, -1):
            out.append(tuple(s if j == i else 0 for j in range(r)))
    return sorted(out)


def fan_product_p1(r: int) -> Fan:
    """Complete fan of the r-fold product of projective lines."""
    rays = _signed_units(r)
    idx = {v: i for i, v in enumerate(rays)}
    cones = []
    for signs in product((1, -1), repeat=r):
        cone = [idx[tuple(s if j == i else 0 for j in range(r))] for i, s in enumerate(signs)]
        cones.append(cone)
    return Fan(r, rays, cones)


def fan_punctured_cube(r: int, distance: int | None = None) -> Fan:
    """Product-of-lines fan with two maximal cones removed.

    The removed orthants differ in `distance` signs (default r, the
    opposite pair).  distance >= 2 is required: for adjacent orthants a
    shared facet would drop out of the fan as well, which models a
    different space than removing two fixed points.
    """
    if distance is None:
        distance = r
    if not 2 <= distance <= r:
        raise ValueError("puncture distance must satisfy 2 <= distance <= r")
    rays = _signed_units(r)
    idx = {v: i for i, v in enumerate(rays)}
    removed = {
        tuple(1 for _ in range(r)),
        tuple(-1 if i < distance else 1 for i in range(r)),
    }
    cones = []
    for signs in product((1, -1), repeat=r):
        if signs in removed:
            continue
        cones.append([idx[tuple(s if j == i else 0 for j in range(r))] for i, s in enumerate(signs)])
    return Fan(r, rays, cones)


def fan_punctured_square() -> Fan:
    return fan_punctured_cube(2)


def fan_hirzebruch(k: int) -> Fan:
    rays = [(1, 0), (0, 1), (-1, k), (0, -1)]
    return Fan(2, rays, [[0, 1], [1, 2], [2, 3], [3, 0]])


def fan_blowup_plane() -> Fan:
    """Affine plane with the origin blown up."""
    return Fan(2, [(1, 0), (1, 1), (0, 1)], [[0, 1], [1, 2]])


# ----------------------------------------------- products of simplices


def _factor_faces(d: int) -> list[tuple[int, ...]]:
    verts = range(d + 1)
    out = []
    for size in range(1, d + 2):
        out.extend(combinations(verts, size))
    return out


def _face_id(face: tuple[tuple[int, ...], ...]) -> str:
    return "|".join("".join(str(v) for v in part) for part in face)


def simplex_product_structure(dims: list[int]) -> FaceStructure:
    """Face poset of a product of simplices (all faces compact POLYTOPAL).

    dims = [1]*r gives the r-cube lattice.  A face is a tuple of nonempty
    vertex subsets, one per factor; its rank is the sum of the factor
    dimensions.
    """
    if not dims or any(d < 1 for d in dims):
        raise ValueError("dims must be a nonempty list of positive integers")
    all_faces = list(product(*[_factor_faces(d) for d in dims]))
    faces = []
    for f in all_faces:
        rank = sum(len(part) - 1 for part in f)
        faces.append(Face(_face_id(f), rank, True, POLYTOPAL))
    covers = []
    for f in all_faces:
        # covers of f: grow exactly one factor by one vertex
        for j, part in enumerate(f):
            others = set(range(dims[j] + 1)) - set(part)
            for v in sorted(others):
                bigger = tuple(sorted(set(part) | {v}))
                g = f[:j] + (bigger,) + f[j + 1:]
                covers.append((_face_id(f), _face_id(g)))
    return FaceStructure(faces, covers)


def cube_structure(r: int) -> FaceStructure:
    return simplex_product_structure([1] * r)


def vertex_id(dims: list[int], coords: tuple[int, ...]) -> str:
    return _face_id(tuple((c,) for c in coords))


def punctured_product_structure(dims: list[int], v1: tuple[int, ...], v2: tuple[int, ...]) -> FaceStructure:
    """Product of simplices with two vertices removed.

    Faces containing a removed vertex become non-compact; every face is
    retagged PUNCTURED.  The join of the two vertices has dimension equal
    to the number of coordinates where they differ (for the cube: Hamming
    distance), and that join controls the syzygy order.
    """
    base = simplex_product_structure(dims)
    if v1 == v2:
        raise ValueError("punctures must be distinct vertices")
    removed = {vertex_id(dims, v1), vertex_id(dims, v2)}
    for x in removed:
        if x not in base.faces or base.faces[x].rank != 0:
            raise ValueError(f"{x} is not a vertex of the product")
    faces = []
    for fid in base.sorted_ids():
        f = base.faces[fid]
        compact = not any(x in base.down_set(fid) for x in removed)
        faces.append(Face(f.id, f.rank, compact, PUNCTURED))
    return FaceStructure(faces, base.covers, removed)


def punctured_cube_structure(r: int, distance: int | None = None) -> FaceStructure:
    if distance is None:
        distance = r
    if not 1 <= distance <= r:
        raise ValueError("need 1 <= distance <= r")
    dims = [1] * r
    v1 = tuple(0 for _ in range(r))
    v2 = tuple(1 if i < distance else 0 for i in range(r))
    return punctured_product_structure(dims, v1, v2)


def simplex_structure(d: int) -> FaceStructure:
    return simplex_product_structure([d])


# ------------------------------------------------------------ raw fixtures


def _const_rows(rows):
    return Matrix(len(rows), len(rows[0]) if rows else 0, rows)


def mutant_structure() -> FaceStructure:
    """Face structure of the 7-dimensional rank-3 example with circle fixed
    components: two rank-0, three rank-1, three rank-2 faces and the top
    4-ball, all with explicit per-face complexes.

    Every proper face is exact in positive positions; the top complex has
    column dimensions (2,3,3,0) in internal degree 0 and (2,3,3,1) in
    degree 1, with differential ranks (1,2,0) and (1,2,1).  Those ranks are
    forced: they are the unique ranks reproducing the published cohomology
    table (k,0,k,0)/(k,0,0,0) from the column dimensions.
    """
    faces = []
    for i in range(2):
        faces.append(Face(f"v{i}", 0, True, RAW))
    for i in range(3):
        faces.append(Face(f"e{i}", 1, True, RAW))
    for i in range(3):
        faces.append(Face(f"s{i}", 2, True, RAW))
    faces.append(Face("t", 3, True, RAW))
    covers = []
    for i in range(2):
        for j in range(3):
            covers.append((f"v{i}", f"e{j}"))
    for i in range(3):
        for j in range(3):
            covers.append((f"e{i}", f"s{j}"))
    for i in range(3):
        covers.append((f"s{i}", "t"))

    circle = GradedDims({0: 1, 1: 1})

    raw = {}
    for i in range(2):
        raw[f"v{i}"] = CochainComplex([circle])
    d_edge = _const_rows([[1, -1]])
    for i in range(3):
        raw[f"e{i}"] = CochainComplex(
            [GradedDims({0: 2, 1: 2}), circle],
            [{0: d_edge, 1: d_edge}],
        )
    d0_s = _const_rows([[1, 0], [0, 1], [0, 0]])
    d1_s = _const_rows([[0, 0, 1]])
    for i in range(3):
        raw[f"s{i}"] = CochainComplex(
            [GradedDims({0: 2, 1: 2}), GradedDims({0: 3, 1: 3}), circle],
            [{0: d0_s, 1: d0_s}, {0: d1_s, 1: d1_s}],
        )
    d0_t = _const_rows([[1, 0], [0, 0], [0, 0]])          # rank 1
    d1_t = _const_rows([[0, 0, 0], [0, 1, 0], [0, 0, 1]])  # rank 2, kills im(d0)
    d2_t = _const_rows([[1, 0, 0]])                        # rank 1, kills im(d1)
    raw["t"] = CochainComplex(
        [
            GradedDims({0: 2, 1: 2}),
            GradedDims({0: 3, 1: 3}),
            GradedDims({0: 3, 1: 3}),
            GradedDims({1: 1}),
        ],
        [{0: d0_t, 1: d0_t}, {0: d1_t, 1: d1_t}, {1: d2_t}],
    )
    return FaceStructure(faces, covers, raw=raw)


def sphere_like_structure() -> FaceStructure:
    """Compact rank-2 structure whose top face is sphere-like: two squares
    glued along all four edges, encoded as a RAW top complex whose last
    column is two-dimensional.  Its order is 0, respecting the compact
    dichotomy (order in {0, r}) in the torsion branch."""
    faces = [Face(f"v{i}", 0, True, POLYTOPAL) for i in range(4)]
    faces += [Face(f"e{i}", 1, True, POLYTOPAL) for i in range(4)]
    faces.append(Face("s", 2, True, RAW))
    covers = []
    for i in range(4):
        covers.append((f"v{i}", f"e{i}"))
        covers.append((f"v{(i + 1) % 4}", f"e{i}"))
    for i in range(4):
        covers.append((f"e{i}", "s"))
    d0 = _const_rows([
        [-1, 1, 0, 0],
        [0, -1, 1, 0],
        [0, 0, -1, 1],
        [1, 0, 0, -1],
    ])
    d1 = _const_rows([[1, 1, 1, 1], [-1, -1, -1, -1]])
    raw = {
        "s": CochainComplex(
            [GradedDims({0: 4}), GradedDims({0: 4}), GradedDims({0: 2})],
            [{0: d0}, {0: d1}],
        )
    }
    return FaceStructure(faces, covers, raw=raw)


def vertexless_structure() -> FaceStructure:
    """A single rank-1 face with no vertices below it (a circle stratum)."""
    return FaceStructure([Face("c", 1, True, POLYTOPAL)], [])


# ------------------------------------------------------------ gkm fixtures


def gkm_p1():
    from .gkm import GkmGraph

    return GkmGraph(1, ["p", "q"], [("p", "q", (1,))])


# ------------------------------------------------------- fan enumeration


def _antichains_covering(elements: list[frozenset[int]], universe: frozenset[int]):
    """All antichains (by inclusion) whose union is the universe."""
    elements = sorted(elements, key=lambda s: (len(s), sorted(s)))
    out: list[tuple[frozenset[int], ...]] = []
    chosen: list[frozenset[int]] = []

    def rec(i: int, covered: frozenset[int]):
        remaining = frozenset().union(*elements[i:]) if i < len(elements) else frozenset()
        if not universe <= covered | remaining:
            return
        if i == len(elements):
            if covered == universe:
                out.append(tuple(chosen))
            return
        rec(i + 1, covered)
        e = elements[i]
        if all(not (e <= c or c <= e) for c in chosen):
            chosen.append(e)
            rec(i + 1, covered | e)
            chosen.pop()

    rec(0, frozenset())
    return out


def enumerate_unit_fans(max_rank: int = 3, max_rays: int = 5) -> list[Fan]:
    """Every fan with rays from the signed unit pool, at most max_rays rays,
    every ray used.  Cones are sets of pairwise independent pool vectors,
    hence automatically unimodular; the collection is a genuine fan."""
    fans = []
    for r in range(1, max_rank + 1):
        pool = _signed_units(r)
        fans.append(zero_fan(r))
        for nrays in range(1, min(len(pool), max_rays) + 1):
            for ray_subset in combinations(pool, nrays):
                idx = {v: i for i, v in enumerate(ray_subset)}
                universe = frozenset(range(nrays))
                indep = []
                for size in range(1, r + 1):
                    for c in combinations(range(nrays), size):
                        vecs = [ray_subset[i] for i in c]
                        support = [next(j for j, x in enumerate(v) if x) for v in vecs]
                        if len(set(support)) == len(vecs):
                            indep.append(frozenset(c))
                for antichain in _antichains_covering(indep, universe):
                    fans.append(Fan(r, ray_subset, antichain))
    return fans


def named_fan_fixtures() -> dict[str, Fan]:
    return {
        "p1": fan_p1(),
        "line": fan_line(),
        "affine_plane": fan_affine_plane(),
        "plane_minus_origin": fan_plane_minus_origin(),
        "punctured_square": fan_punctured_square(),
        "p1xp1": fan_product_p1(2),
        "p1_cubed": fan_product_p1(3),
        "punctured_cube_3": fan_punctured_cube(3),
        "punctured_cube_3_d2": fan_punctured_cube(3, distance=2),
        "hirzebruch_0": fan_hirzebruch(0),
        "hirzebruch_1": fan_hirzebruch(1),
        "hirzebruch_2": fan_hirzebruch(2),
        "blowup_plane": fan_blowup_plane(),
    }


# --------------------------------------------------------- complex corpus


def enumerate_complexes(max_vertices: int = 4) -> list[SimplicialComplex]:
    """All simplicial complexes (as facet antichains, EMPTY included) on
    0..max_vertices labeled vertices."""
    out = []
    for n in range(max_vertices + 1):
        subsets = []
        for size in range(1, n + 1):
            subsets.extend(frozenset(c) for c in combinations(range(n), size))
        subsets.sort(key=lambda s: (len(s), sorted(s)))
        chosen: list[frozenset[int]] = []

        def rec(i: int):
            if i == len(subsets):
                # the empty antichain is the EMPTY complex, not VOID
                out.append(SimplicialComplex(n, list(chosen) or [frozenset()]))
                return
            rec(i + 1)
            e = subsets[i]
            if all(not (e <= c or c <= e) for c in chosen):
                chosen.append(e)
                rec(i + 1)
                chosen.pop()

        rec(0)
    return out


def named_complexes() -> dict[str, SimplicialComplex]:
    return {
        "pentagon": SimplicialComplex(5, [{i, (i + 1) % 5} for i in range(5)]),
        "hexagon": SimplicialComplex(6, [{i, (i + 1) % 6} for i in range(6)]),
        "two_edges": SimplicialComplex(4, [{0, 1}, {2, 3}]),
        "two_triangles": SimplicialComplex(6, [{0, 1, 2}, {3, 4, 5}]),
        "octahedron": SimplicialComplex(
            6,
            [
                {0, 2, 4}, {0, 2, 5}, {0, 3, 4}, {0, 3, 5},
                {1, 2, 4}, {1, 2, 5}, {1, 3, 4}, {1, 3, 5},
            ],
        ),
        "projective_plane_6": SimplicialComplex(
            6,
            [
                {0, 1, 3}, {0, 1, 4}, {0, 2, 3}, {0, 2, 5}, {0, 4, 5},
                {1, 2, 4}, {1, 2, 5}, {1, 3, 5}, {2, 3, 4}, {3, 4, 5},
            ],
        ),
    }
