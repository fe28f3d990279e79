import pytest

from facesyz.corpus import (
    fan_affine_plane,
    fan_p1,
    fan_plane_minus_origin,
    fan_product_p1,
    fan_punctured_square,
    zero_fan,
)
from facesyz.fan import Fan, cone_link, face_poset, underlying_complex, validate
from facesyz.simplicial import SimplicialComplex, link, reduced_homology


def test_validate_p1():
    assert validate(fan_p1()).ok


def test_validate_nonprimitive_ray():
    rep = validate(Fan(1, [(2,)], [[0]]))
    assert not rep.ok
    assert any("not primitive" in str(i) for i in rep.issues)


def test_validate_nonunimodular_cone():
    rep = validate(Fan(2, [(1, 0), (1, 2)], [[0, 1]]))
    assert not rep.ok
    assert any("not unimodular" in str(i) and "gcd 2" in str(i) for i in rep.issues)


def test_validate_dependent_rays():
    rep = validate(Fan(2, [(1, 0), (-1, 0)], [[0, 1]]))
    assert not rep.ok
    assert any("not simplicial" in str(i) for i in rep.issues)


def test_validate_unused_ray():
    rep = validate(Fan(2, [(1, 0), (0, 1)], [[0]]))
    assert not rep.ok
    assert any("not used" in str(i) for i in rep.issues)


def test_validate_redundant_listed_cone():
    rep = validate(Fan(2, [(1, 0), (0, 1)], [[0, 1], [0]]))
    assert not rep.ok
    assert any("contained in listed cone" in str(i) for i in rep.issues)


def test_underlying_complex_p1():
    k = underlying_complex(fan_p1())
    assert k == SimplicialComplex(2, [{0}, {1}])


def test_underlying_complex_affine_plane():
    assert underlying_complex(fan_affine_plane()) == SimplicialComplex(2, [{0, 1}])


def test_underlying_complex_punctured_square():
    k = underlying_complex(fan_punctured_square())
    assert k.vertex_count == 4
    assert len(k.facets) == 2
    assert all(len(f) == 2 for f in k.facets)
    assert not (set.intersection(*[set(f) for f in k.facets]))


def test_cone_link_zero_cone_p1():
    lk = cone_link(fan_p1(), frozenset())
    assert lk == SimplicialComplex(2, [{0}, {1}])


def test_cone_link_punctured_square():
    lk = cone_link(fan_punctured_square(), frozenset())
    assert reduced_homology(lk) == {0: 1}


def test_cone_link_maximal_cone_is_empty():
    f = fan_affine_plane()
    assert cone_link(f, {0, 1}).is_empty


def test_cone_link_unknown_cone():
    with pytest.raises(ValueError):
        cone_link(fan_p1(), {0, 1})


def test_face_poset_p1():
    p = face_poset(fan_p1())
    zero = frozenset()
    assert p.face_rank(zero) == 1
    assert p.face_rank(frozenset({0})) == 0
    # vertices lie below the top face
    assert p.leq(frozenset({0}), zero)
    assert p.leq(frozenset({1}), zero)
    assert not p.leq(zero, frozenset({0}))
    assert p.covers() == [(frozenset({0}), zero), (frozenset({1}), zero)]


def test_face_poset_affine_plane_chain():
    p = face_poset(fan_affine_plane())
    bottom = frozenset({0, 1})
    assert p.face_rank(bottom) == 0
    for mid in (frozenset({0}), frozenset({1})):
        assert p.leq(bottom, mid)
        assert p.leq(mid, frozenset())


def test_face_poset_zero_fan():
    p = face_poset(zero_fan(3))
    assert p.elements == (frozenset(),)
    assert p.face_rank(frozenset()) == 3


def test_rank_plus_cone_size(unit_corpus):
    for f in unit_corpus[:300]:
        p = face_poset(f)
        for sigma in f.cones():
            assert p.face_rank(sigma) + len(sigma) == f.rank


def test_cone_link_delegation(unit_corpus):
    for f in unit_corpus[:200]:
        k = underlying_complex(f)
        for sigma in f.cones():
            assert cone_link(f, sigma) == link(k, sigma)


def _is_complete_combinatorially(f: Fan) -> bool:
    """Rank <= 3 completeness: the underlying complex triangulates the
    (rank-1)-sphere: pure, every ridge in exactly two facets, connected,
    with the sphere's Euler characteristic."""
    if f.rank > 3:
        raise ValueError("test helper limited to rank <= 3")
    k = underlying_complex(f)
    if k.is_empty or k.is_void:
        return False
    top = f.rank - 1
    facets = [c for c in f.maximal_cones]
    if any(len(c) != f.rank for c in facets):
        return False
    from itertools import combinations

    ridge_count: dict = {}
    for c in facets:
        for r in combinations(sorted(c), f.rank - 1):
            ridge_count[r] = ridge_count.get(r, 0) + 1
    if any(v != 2 for v in ridge_count.values()):
        return False
    chi = sum(
        (1 if d % 2 == 0 else -1) * len({fr for fc in facets for fr in combinations(sorted(fc), d + 1)})
        for d in range(top + 1)
    )
    return chi == (2 if top % 2 == 0 else 0)


def test_complete_fans_have_nonempty_links(unit_corpus):
    complete = [f for f in unit_corpus if f.rank <= 3 and f.maximal_cones and _is_complete_combinatorially(f)]
    assert complete, "corpus should contain complete fans"
    for f in complete:
        for sigma in f.cones():
            if len(sigma) < f.rank:
                assert not cone_link(f, sigma).is_empty


def test_complete_examples_recognized():
    assert _is_complete_combinatorially(fan_p1())
    assert _is_complete_combinatorially(fan_product_p1(2))
    assert _is_complete_combinatorially(fan_product_p1(3))
    assert not _is_complete_combinatorially(fan_punctured_square())
    assert not _is_complete_combinatorially(fan_plane_minus_origin())
