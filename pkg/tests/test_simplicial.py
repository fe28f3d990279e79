import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from facesyz.simplicial import (
    SimplicialComplex,
    cone,
    euler_characteristic_reduced,
    faces,
    is_acyclic,
    link,
    link_with_vertices,
    reduced_homology,
)

TRIANGLE_BOUNDARY = SimplicialComplex(3, [{0, 1}, {1, 2}, {0, 2}])
HEXAGON = SimplicialComplex(6, [{i, (i + 1) % 6} for i in range(6)])


def test_faces_triangle_vertices():
    assert len(faces(TRIANGLE_BOUNDARY, 0)) == 3


def test_faces_empty_complex():
    assert faces(SimplicialComplex.empty(0), -1) == {frozenset()}


def test_faces_void():
    v = SimplicialComplex.void()
    assert faces(v, -1) == set()
    assert faces(v, 0) == set()


def test_homology_empty_complex():
    assert reduced_homology(SimplicialComplex.empty(0)) == {-1: 1}


def test_homology_two_points():
    assert reduced_homology(SimplicialComplex(2, [{0}, {1}])) == {0: 1}


def _connected_components(k: SimplicialComplex) -> int:
    # union-find over edges; independent of the homology code
    parent = list(range(k.vertex_count))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    verts = {v for f in k.facets for v in f}
    for f in k.facets:
        f = sorted(f)
        for a, b in zip(f, f[1:]):
            parent[find(a)] = find(b)
    return len({find(v) for v in verts})


def test_homology_hexagon_cycle():
    # independent oracle: connected graph, no 2-faces, so the only unknown
    # is b1, pinned by the reduced Euler characteristic
    assert _connected_components(HEXAGON) == 1
    chi = euler_characteristic_reduced(HEXAGON)
    assert chi == -1 + 6 - 6
    b1 = 0 - chi  # b0_reduced - b1 = chi with b0_reduced = 0
    assert b1 == 1
    assert reduced_homology(HEXAGON) == {1: 1}


def test_link_of_vertex_in_triangle_boundary():
    lk, verts = link_with_vertices(TRIANGLE_BOUNDARY, {0})
    # the two other vertices, no edge between them
    assert verts == (1, 2)
    assert lk == SimplicialComplex(2, [{0}, {1}])


def test_link_of_vertex_in_filled_triangle():
    filled = SimplicialComplex(3, [{0, 1, 2}])
    lk, verts = link_with_vertices(filled, {0})
    assert verts == (1, 2)
    assert lk == SimplicialComplex(2, [{0, 1}])  # the opposite edge


def test_link_of_empty_face_is_identity():
    assert link(TRIANGLE_BOUNDARY, frozenset()) == TRIANGLE_BOUNDARY


def test_link_of_facet_is_empty():
    lk = link(TRIANGLE_BOUNDARY, {0, 1})
    assert lk.is_empty


def test_link_unknown_face():
    with pytest.raises(ValueError):
        link(TRIANGLE_BOUNDARY, {0, 1, 2})


def test_is_acyclic_point():
    assert is_acyclic(SimplicialComplex(1, [{0}]))


def test_is_acyclic_empty_false():
    assert not is_acyclic(SimplicialComplex.empty(0))


def test_is_acyclic_void_false():
    assert not is_acyclic(SimplicialComplex.void())


def test_is_acyclic_two_points_false():
    assert not is_acyclic(SimplicialComplex(2, [{0}, {1}]))


def test_facet_containment_rejected():
    with pytest.raises(ValueError):
        SimplicialComplex(3, [{0, 1}, {0, 1, 2}])


@st.composite
def complexes(draw):
    n = draw(st.integers(1, 5))
    nfaces = draw(st.integers(1, 6))
    gen = [
        draw(st.sets(st.integers(0, n - 1), min_size=1, max_size=n))
        for _ in range(nfaces)
    ]
    return SimplicialComplex.from_faces(n, gen)


@given(complexes())
@settings(max_examples=60, deadline=None)
def test_euler_characteristic_matches_homology(k):
    h = reduced_homology(k)
    chi_h = sum((1 if d % 2 == 0 else -1) * v for d, v in h.items())
    assert chi_h == euler_characteristic_reduced(k)


@given(complexes())
@settings(max_examples=40, deadline=None)
def test_cone_is_acyclic(k):
    assert reduced_homology(cone(k)).is_zero()
    assert is_acyclic(cone(k))


def test_cone_over_empty():
    assert cone(SimplicialComplex.empty(0)) == SimplicialComplex(1, [{0}])


@given(complexes(), st.data())
@settings(max_examples=50, deadline=None)
def test_link_composition(k, data):
    fs = sorted(
        {f for facet in k.facets for f in _subsets(facet) if f},
        key=lambda f: (len(f), sorted(f)),
    )
    if not fs:
        return
    f = data.draw(st.sampled_from(fs))
    lk1, verts1 = link_with_vertices(k, f)
    sub = sorted(
        {g for facet in lk1.facets for g in _subsets(facet)},
        key=lambda g: (len(g), sorted(g)),
    )
    g_new = data.draw(st.sampled_from(sub))
    g_old = frozenset(verts1[v] for v in g_new)
    left, _ = link_with_vertices(lk1, g_new)
    right, _ = link_with_vertices(k, f | g_old)
    # both re-index onto sorted vertex labels, so equality is structural
    assert left.facets == right.facets


def _subsets(s):
    s = sorted(s)
    out = [frozenset()]
    for v in s:
        out += [f | {v} for f in out]
    return out
