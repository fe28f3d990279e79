from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from facesyz.exactla import (
    CochainComplex,
    GradedDims,
    HilbertSeries,
    Matrix,
    cohomology_dims,
    kernel_basis,
    rank,
    series_add,
    series_scale,
    series_shift,
    series_window,
)


def test_rank_identity():
    assert rank(Matrix.identity(3)) == 3


def test_rank_zero():
    assert rank(Matrix.zero(2, 2)) == 0


def test_rank_proportional_rows():
    assert rank(Matrix.from_rows([[1, 2], [2, 4]])) == 1


def test_rank_fractions():
    m = Matrix.from_rows([[Fraction(1, 2), Fraction(1, 3)], [1, 1]])
    assert rank(m) == 2
    singular = Matrix.from_rows([[Fraction(1, 2), Fraction(1, 3)], [Fraction(3, 2), 1]])
    assert rank(singular) == 1


def test_kernel_identity():
    assert kernel_basis(Matrix.identity(4)).cols == 0


def test_kernel_zero_matrix():
    k = kernel_basis(Matrix.zero(2, 3))
    assert k.cols == 3 and k.rows == 3


def test_kernel_one_dimensional():
    k = kernel_basis(Matrix.from_rows([[1, 1]]))
    assert k.cols == 1
    # spans (1, -1)
    v = [k[0, 0], k[1, 0]]
    assert v[0] == -v[1] != 0


small_matrices = st.integers(0, 4).flatmap(
    lambda r: st.integers(0, 4).flatmap(
        lambda c: st.lists(
            st.lists(st.integers(-4, 4), min_size=c, max_size=c),
            min_size=r,
            max_size=r,
        ).map(lambda rows: Matrix(r, c, rows))
    )
)


@given(small_matrices)
@settings(max_examples=60, deadline=None)
def test_rank_nullity(m):
    assert rank(m) + kernel_basis(m).cols == m.cols


def test_kernel_columns_annihilated():
    m = Matrix.from_rows([[1, 2, 3], [2, 4, 6], [0, 1, 1]])
    k = kernel_basis(m)
    assert (m * k).is_zero()


# ---------------------------------------------------------------- complexes


def two_term(d: Matrix, dims0: int, dims1: int) -> CochainComplex:
    return CochainComplex(
        [GradedDims({0: dims0}), GradedDims({0: dims1})],
        [{0: d}] if dims0 and dims1 else [{}],
    )


def test_cohomology_isomorphism_complex():
    c = two_term(Matrix.from_rows([[1]]), 1, 1)
    h = cohomology_dims(c)
    assert h[0].is_zero() and h[1].is_zero()


def test_cohomology_surjection():
    c = two_term(Matrix.from_rows([[1, 1]]), 2, 1)
    h = cohomology_dims(c)
    assert h[0] == {0: 1}
    assert h[1].is_zero()


def _mutant_row(dims, d0_rows, d1_rows, d2_rows):
    positions = [GradedDims({0: d}) if d else GradedDims() for d in dims]
    diffs = []
    for i, rows in enumerate((d0_rows, d1_rows, d2_rows)):
        if rows and dims[i] and dims[i + 1]:
            diffs.append({0: Matrix(dims[i + 1], dims[i], rows)})
        else:
            diffs.append({})
    return CochainComplex(positions, diffs)


def test_cohomology_rank_forced_rows():
    # rows with column dims (2,3,3,0) and (2,3,3,1); differential ranks
    # (1,2,0) and (1,2,1) force the cohomology tables (1,0,1,0) and (1,0,0,0)
    d0 = [[1, 0], [0, 0], [0, 0]]
    d1 = [[0, 0, 0], [0, 1, 0], [0, 0, 1]]
    row0 = _mutant_row([2, 3, 3, 0], d0, d1, None)
    h0 = [h.get(0) for h in cohomology_dims(row0)]
    assert h0 == [1, 0, 1, 0]
    row1 = _mutant_row([2, 3, 3, 1], d0, d1, [[1, 0, 0]])
    h1 = [h.get(0) for h in cohomology_dims(row1)]
    assert h1 == [1, 0, 0, 0]


def test_rejects_broken_differential():
    c = CochainComplex(
        [GradedDims({0: 1}), GradedDims({0: 1}), GradedDims({0: 1})],
        [{0: Matrix.from_rows([[1]])}, {0: Matrix.from_rows([[1]])}],
    )
    with pytest.raises(ValueError):
        cohomology_dims(c)


def _random_invertible(n, seed):
    # product of elementary operations applied to the identity
    m = [[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)]
    state = seed
    for _ in range(3 * n):
        state = (state * 1103515245 + 12345) % (2 ** 31)
        i = state % n
        state = (state * 1103515245 + 12345) % (2 ** 31)
        j = state % n
        if i == j:
            continue
        c = Fraction((state >> 8) % 5 - 2, 1 + (state >> 16) % 3)
        for k in range(n):
            m[i][k] += c * m[j][k]
    return Matrix(n, n, m)


@given(st.integers(0, 10 ** 6))
@settings(max_examples=25, deadline=None)
def test_cohomology_invariant_under_basis_change(seed):
    # positions of dims 3 -> 2 -> 2 with d1 * d0 = 0
    d0 = Matrix.from_rows([[1, 0, 1], [0, 0, 0]])
    d1 = Matrix.from_rows([[0, 0], [0, 0]])
    c = CochainComplex(
        [GradedDims({0: 3}), GradedDims({0: 2}), GradedDims({0: 2})],
        [{0: d0}, {0: d1}],
    )
    base = [h.get(0) for h in cohomology_dims(c)]
    b0 = _random_invertible(3, seed + 1)
    b1 = _random_invertible(2, seed + 2)
    b2 = _random_invertible(2, seed + 3)
    conj = CochainComplex(
        [GradedDims({0: 3}), GradedDims({0: 2}), GradedDims({0: 2})],
        [{0: b1 * d0 * b0.inverse()}, {0: b2 * d1 * b1.inverse()}],
    )
    assert [h.get(0) for h in cohomology_dims(conj)] == base


@given(small_matrices)
@settings(max_examples=40, deadline=None)
def test_euler_characteristic_conservation(m):
    c = two_term(m, m.cols, m.rows) if m.rows and m.cols else None
    if c is None:
        return
    h = cohomology_dims(c)
    assert m.cols - m.rows == h[0].get(0) - h[1].get(0)


# ------------------------------------------------------------------- series


def test_series_shift():
    assert series_shift(HilbertSeries([1], 1), 1) == HilbertSeries([0, 1], 1)


def test_series_add_polynomials():
    assert series_add(HilbertSeries([1]), HilbertSeries([0, 1])) == HilbertSeries([1, 1])


def test_series_scale():
    assert series_scale(HilbertSeries([1], 3), 3) == HilbertSeries([3], 3)


def test_series_canonical_form():
    # (1-q)/(1-q)^2 reduces to 1/(1-q)
    assert HilbertSeries([1, -1], 2) == HilbertSeries([1], 1)


def test_window_geometric():
    assert series_window(HilbertSeries([1], 1), 3) == {0: 1, 1: 1, 2: 1, 3: 1}


def test_window_binomials():
    assert series_window(HilbertSeries([1], 3), 2) == {0: 1, 1: 3, 2: 6}


def _convolve_window(num, e, top):
    # independent expansion: multiply the numerator with e geometric factors
    coeffs = list(num) + [0] * (top + 1 - len(num))
    coeffs = coeffs[: top + 1]
    for _ in range(e):
        out = []
        acc = 0
        for c in coeffs:
            acc += c
            out.append(acc)
        coeffs = out
    return {k: v for k, v in enumerate(coeffs) if v}


def test_window_derived_example():
    # (3q^2 - q^3)/(1-q)^3, expanded independently by convolution
    expected = _convolve_window([0, 0, 3, -1], 3, 4)
    assert expected == {2: 3, 3: 8, 4: 15}
    assert series_window(HilbertSeries([0, 0, 3, -1], 3), 4) == expected


series_strategy = st.tuples(
    st.lists(st.integers(-3, 3), min_size=0, max_size=4),
    st.integers(0, 3),
).map(lambda t: HilbertSeries(*t))


@given(series_strategy, series_strategy)
@settings(max_examples=60, deadline=None)
def test_window_additivity(a, b):
    wa = _convolve_window(list(a.numerator), a.denominator_exponent, 6)
    wb = _convolve_window(list(b.numerator), b.denominator_exponent, 6)
    total = {k: wa.get(k, 0) + wb.get(k, 0) for k in range(7)}
    total = {k: v for k, v in total.items() if v}
    s = series_add(a, b)
    got = _convolve_window(list(s.numerator), s.denominator_exponent, 6)
    assert got == total
    if all(v >= 0 for v in total.values()):
        assert series_window(s, 6) == total


def test_graded_dims_drops_zeros():
    d = GradedDims({0: 1, 2: 0, -1: 3})
    assert d.degrees() == [-1, 0]
    assert d.get(2) == 0
    assert d.total() == 4
