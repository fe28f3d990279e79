import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from facesyz.bc import (
    FaceStructure,
    Face,
    LatticeOrientationError,
    bc_cohomology,
    bc_for_face,
    bc_from_fan,
    bc_from_polytopal,
    bc_from_raw,
    link_correspondence_check,
    orbit_space_e2,
)
from facesyz.corpus import (
    cube_structure,
    fan_line,
    fan_p1,
    fan_punctured_cube,
    fan_punctured_square,
    mutant_structure,
    punctured_cube_structure,
    punctured_product_structure,
    simplex_product_structure,
)
from facesyz.exactla import CochainComplex, GradedDims, Matrix
from facesyz.syzygy import syzygy_order_faces


def _h0(b):
    return [h.get(0) for h in bc_cohomology(b)]


def test_bc_fan_half_line():
    b = bc_from_fan(fan_line(), frozenset())
    assert [p.get(0) for p in b.complex.positions] == [1, 1]
    assert _h0(b) == [0, 0]


def test_bc_fan_p1():
    b = bc_from_fan(fan_p1(), frozenset())
    assert [p.get(0) for p in b.complex.positions] == [2, 1]
    assert _h0(b) == [1, 0]


def test_bc_fan_punctured_square():
    b = bc_from_fan(fan_punctured_square(), frozenset())
    assert [p.get(0) for p in b.complex.positions] == [2, 4, 1]
    assert _h0(b) == [0, 1, 0]


def test_bc_fan_d_squared_validated_on_cohomology():
    for sigma in fan_punctured_cube(3).cones():
        bc_cohomology(bc_from_fan(fan_punctured_cube(3), sigma))


def test_bc_polytopal_square():
    s = cube_structure(2)
    b = bc_from_polytopal(s, s.top_face())
    assert [p.get(0) for p in b.complex.positions] == [4, 4, 1]
    assert _h0(b) == [1, 0, 0]


def test_bc_polytopal_punctured_square():
    s = punctured_cube_structure(2)
    b = bc_from_polytopal(s, s.top_face())
    assert [p.get(0) for p in b.complex.positions] == [2, 4, 1]
    assert _h0(b) == [0, 1, 0]


def test_bc_polytopal_half_open_edge():
    # edge with one vertex removed: both cohomology groups vanish
    base = simplex_product_structure([1])
    s1 = FaceStructure(
        [Face(f.id, f.rank, f.id != "0", "PUNCTURED") for f in base.faces.values()],
        base.covers,
        removed=["0"],
    )
    b = bc_from_polytopal(s1, "01")
    assert [p.get(0) for p in b.complex.positions] == [1, 1]
    assert _h0(b) == [0, 0]


def test_bc_polytopal_open_edge():
    # both vertices removed: the single surviving column sits in position 1
    s = punctured_product_structure([1], (0,), (1,))
    b = bc_from_polytopal(s, "01")
    assert [p.get(0) for p in b.complex.positions] == [0, 1]
    assert _h0(b) == [0, 1]


def test_bc_punctured_cube_matches_fan():
    # the polytopal route on the punctured cube lattice agrees with the
    # toric route on the punctured fan, face by rank
    s = punctured_cube_structure(3)
    fan = fan_punctured_cube(3)
    top = bc_for_face(s, s.top_face())
    toric = bc_from_fan(fan, frozenset())
    assert [p.get(0) for p in top.complex.positions] == [
        p.get(0) for p in toric.complex.positions
    ]
    assert _h0(top) == _h0(toric) == [0, 1, 0, 0]


def test_bc_raw_mutant_accepted():
    m = mutant_structure()
    b = bc_from_raw(m, "t")
    table = bc_cohomology(b)
    assert [h.get(0) for h in table] == [1, 0, 1, 0]
    assert [h.get(1) for h in table] == [1, 0, 0, 0]


def test_bc_raw_single_column():
    s = FaceStructure(
        [Face("p", 0, True, "RAW")],
        [],
        raw={"p": CochainComplex([GradedDims({0: 2})])},
    )
    b = bc_from_raw(s, "p")
    assert bc_cohomology(b)[0] == {0: 2}


def test_bc_raw_broken_rejected():
    c = CochainComplex(
        [GradedDims({0: 1}), GradedDims({0: 1}), GradedDims({0: 1})],
        [{0: Matrix.from_rows([[1]])}, {0: Matrix.from_rows([[1]])}],
    )
    s = FaceStructure(
        [Face("a", 0, True, "RAW"), Face("b", 1, True, "RAW"), Face("p", 2, True, "RAW")],
        [("a", "b"), ("b", "p")],
        raw={"p": c, "a": CochainComplex([GradedDims({0: 1})]),
             "b": CochainComplex([GradedDims({0: 1}), GradedDims({0: 1})])},
    )
    with pytest.raises(ValueError):
        bc_from_raw(s, "p")
    assert not s.validate().ok


def test_orientation_failure_single_intermediate():
    # rank-2 interval with exactly one intermediate face cannot carry signs
    faces = [Face("v", 0, True, "POLYTOPAL"), Face("e", 1, True, "POLYTOPAL"),
             Face("s", 2, True, "POLYTOPAL")]
    s = FaceStructure(faces, [("v", "e"), ("e", "s")])
    with pytest.raises(LatticeOrientationError):
        bc_from_polytopal(s, "s")


def test_link_correspondence_examples():
    assert link_correspondence_check(fan_p1(), frozenset())
    assert link_correspondence_check(fan_p1(), frozenset({0}))
    assert link_correspondence_check(fan_punctured_square(), frozenset())


def test_link_correspondence_corpus_sample(unit_corpus):
    for f in unit_corpus[:150]:
        for sigma in f.cones():
            assert link_correspondence_check(f, sigma)


@given(st.integers(0, 10 ** 9))
@settings(max_examples=20, deadline=None)
def test_orientation_free_choice_does_not_change_dims(seed):
    s = punctured_cube_structure(3)
    state = [seed]

    def choice(i):
        state[0] = (state[0] * 6364136223846793005 + 1442695040888963407) % 2 ** 63
        return state[0] & 1

    for fid in s.surviving_ids():
        base = bc_cohomology(bc_from_polytopal(s, fid))
        randomized = bc_cohomology(bc_from_polytopal(s, fid, free_choice=choice))
        assert base == randomized


@st.composite
def simplex_products(draw):
    k = draw(st.integers(1, 3))
    dims = []
    for _ in range(k):
        if sum(dims) >= 3:
            break
        dims.append(draw(st.integers(1, 2)))
    return simplex_product_structure(dims)


@given(simplex_products())
@settings(max_examples=25, deadline=None)
def test_acyclic_compact_faces_concentrated_in_position_zero(s):
    # polytopal faces are acyclic with vertices: positions > 0 vanish
    for fid in s.surviving_ids():
        h = bc_cohomology(bc_for_face(s, fid))
        assert h[0] == {0: 1}
        assert all(x.is_zero() for x in h[1:])


@given(simplex_products())
@settings(max_examples=25, deadline=None)
def test_column_bookkeeping(s):
    for fid in s.surviving_ids():
        b = bc_for_face(s, fid)
        total = sum(p.total() for p in b.complex.positions)
        assert total == len(s.down_set(fid))


@pytest.mark.parametrize("distance", [2, 3])
def test_punctured_cube_nonvanishing_localizes_at_join(distance):
    # the faces with cohomology above position 0 are exactly the faces
    # containing the join of the two punctures, each with a single k in
    # position 1 (computed, not assumed)
    s = punctured_cube_structure(3, distance)
    join_id = "|".join(["01"] * distance + ["0"] * (3 - distance))
    assert join_id in s.faces
    for fid in s.surviving_ids():
        h = bc_cohomology(bc_for_face(s, fid))
        above = {i: dims for i, dims in enumerate(h) if i >= 1 and not dims.is_zero()}
        if s.leq(join_id, fid):
            assert above == {1: GradedDims({0: 1})}
        else:
            assert above == {}


def test_e2_p1():
    e2 = orbit_space_e2(fan_p1(), 1)
    assert e2.degenerate
    assert e2.hc == {0: 1}
    assert e2.bound == 0 and e2.bound_ok


def test_e2_punctured_square():
    e2 = orbit_space_e2(fan_punctured_square(), 1)
    assert e2.degenerate
    assert e2.hc == {1: 1}
    # bound r - j = 1: nothing above degree 1
    assert e2.bound == 1 and e2.bound_ok


def test_e2_mutant_flag():
    m = mutant_structure()
    e2 = orbit_space_e2(m, syzygy_order_faces(m).order)
    assert not e2.degenerate
    assert e2.hc is None
    assert e2.cells == {(0, 0): 1, (0, 1): 1, (2, 0): 1}
