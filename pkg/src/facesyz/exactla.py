"""Exact rational linear algebra, graded dimensions, cochain complexes and
Hilbert series.

Everything here is immutable after construction and computed over the
rationals with exact arithmetic.  No floats anywhere.  The grading
convention used throughout the package: polynomial generators live in
topological degree 2, and the Hilbert series variable q advances by one
per degree-2 step.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping, Sequence

# The coefficient field: arbitrary-precision rationals, always reduced,
# denominator positive.  fractions.Fraction guarantees both invariants.
Rational = Fraction


def _as_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not an exact rational: {x!r}")


class Matrix:
    """Dense matrix over the rationals, row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Sequence[Sequence]):
        if rows < 0 or cols < 0:
            raise ValueError("negative matrix dimensions")
        data = tuple(tuple(_as_rational(x) for x in row) for row in entries)
        if len(data) != rows or any(len(r) != cols for r in data):
            raise ValueError(f"entry grid is not {rows}x{cols}")
        self.rows = rows
        self.cols = cols
        self.entries = data

    @classmethod
    def zero(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, [[0] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_rows(cls, entries: Sequence[Sequence]) -> "Matrix":
        rows = len(entries)
        cols = len(entries[0]) if rows else 0
        return cls(rows, cols, entries)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Matrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self) -> str:
        return f"Matrix({self.rows}x{self.cols})"

    def __getitem__(self, ij) -> Fraction:
        i, j = ij
        return self.entries[i][j]

    def transpose(self) -> "Matrix":
        return Matrix(
            self.cols, self.rows,
            [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)],
        )

    def __mul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch in matrix product")
        out = []
        for i in range(self.rows):
            row = self.entries[i]
            out.append(
                [
                    sum((row[k] * other.entries[k][j] for k in range(self.cols)), Fraction(0))
                    for j in range(other.cols)
                ]
            )
        return Matrix(self.rows, other.cols, out)

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.entries for x in row)

    def _integer_rows(self) -> list[list[int]]:
        # Row scaling does not change the rank; clear denominators per row.
        out = []
        for row in self.entries:
            m = 1
            for x in row:
                m = m * x.denominator // gcd(m, x.denominator)
            out.append([int(x * m) for x in row])
        return out

    def rank(self) -> int:
        """Rank over the rationals by fraction-free (Bareiss) elimination."""
        a = self._integer_rows()
        nr, nc = self.rows, self.cols
        rank = 0
        prev = 1
        row = 0
        for col in range(nc):
            if row >= nr:
                break
            # deterministic pivot: smallest absolute value, then lowest index
            pivot = -1
            best = None
            for i in range(row, nr):
                v = a[i][col]
                if v != 0 and (best is None or abs(v) < best):
                    best = abs(v)
                    pivot = i
                    if best == 1:
                        break
            if pivot < 0:
                continue
            a[row], a[pivot] = a[pivot], a[row]
            p = a[row][col]
            # every lower row is updated, including pivot-column zeros: the
            # p/prev rescaling keeps later divisions exact (Sylvester)
            for i in range(row + 1, nr):
                v = a[i][col]
                ai = a[i]
                ar = a[row]
                for j in range(col, nc):
                    ai[j] = (p * ai[j] - v * ar[j]) // prev
            prev = p
            row += 1
            rank += 1
        return rank

    def rref(self) -> tuple["Matrix", list[int]]:
        """Reduced row echelon form and the list of pivot columns."""
        a = [list(row) for row in self.entries]
        nr, nc = self.rows, self.cols
        pivots: list[int] = []
        row = 0
        for col in range(nc):
            if row >= nr:
                break
            pivot = next((i for i in range(row, nr) if a[i][col] != 0), -1)
            if pivot < 0:
                continue
            a[row], a[pivot] = a[pivot], a[row]
            pv = a[row][col]
            a[row] = [x / pv for x in a[row]]
            for i in range(nr):
                if i != row and a[i][col] != 0:
                    f = a[i][col]
                    a[i] = [x - f * y for x, y in zip(a[i], a[row])]
            pivots.append(col)
            row += 1
        return Matrix(nr, nc, a), pivots

    def kernel_basis(self) -> "Matrix":
        """Basis of the right kernel, one basis vector per column.

        rank(m) + number of returned columns = m.cols.
        """
        r, pivots = self.rref()
        free = [j for j in range(self.cols) if j not in pivots]
        cols = []
        for f in free:
            v = [Fraction(0)] * self.cols
            v[f] = Fraction(1)
            for i, p in enumerate(pivots):
                v[p] = -r.entries[i][f]
            cols.append(v)
        return Matrix(self.cols, len(cols), [[cols[k][i] for k in range(len(cols))] for i in range(self.cols)])

    def inverse(self) -> "Matrix":
        if self.rows != self.cols:
            raise ValueError("inverse of a non-square matrix")
        n = self.rows
        aug = Matrix(n, 2 * n, [list(self.entries[i]) + [1 if i == j else 0 for j in range(n)] for i in range(n)])
        r, pivots = aug.rref()
        if pivots[:n] != list(range(n)):
            raise ValueError("matrix is singular")
        return Matrix(n, n, [row[n:] for row in r.entries])


def rank(m: Matrix) -> int:
    return m.rank()


def kernel_basis(m: Matrix) -> Matrix:
    return m.kernel_basis()


class GradedDims:
    """Finitely supported map from integer degree to dimension.

    Zero values are never stored; degrees may be negative (reduced homology
    uses degree -1).
    """

    __slots__ = ("_dims",)

    def __init__(self, dims: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = dims.items() if isinstance(dims, Mapping) else dims
        d = {}
        for deg, dim in items:
            if dim < 0:
                raise ValueError("negative dimension")
            if dim:
                d[int(deg)] = int(dim)
        self._dims = dict(sorted(d.items()))

    def get(self, degree: int) -> int:
        return self._dims.get(degree, 0)

    def degrees(self) -> list[int]:
        return list(self._dims)

    def items(self) -> list[tuple[int, int]]:
        return list(self._dims.items())

    def total(self) -> int:
        return sum(self._dims.values())

    def is_zero(self) -> bool:
        return not self._dims

    def shift(self, by: int) -> "GradedDims":
        return GradedDims({d + by: v for d, v in self._dims.items()})

    def __add__(self, other: "GradedDims") -> "GradedDims":
        out = dict(self._dims)
        for d, v in other._dims.items():
            out[d] = out.get(d, 0) + v
        return GradedDims(out)

    def __eq__(self, other) -> bool:
        if isinstance(other, GradedDims):
            return self._dims == other._dims
        if isinstance(other, dict):
            return self._dims == {d: v for d, v in other.items() if v}
        return NotImplemented

    def __hash__(self):
        return hash(tuple(self._dims.items()))

    def __bool__(self) -> bool:
        return bool(self._dims)

    def __repr__(self) -> str:
        return f"GradedDims({self._dims})"


class CochainComplex:
    """A cochain complex of graded vector spaces.

    positions[i] is the graded dimension at position i; differentials[i]
    maps position i to position i+1 and preserves the internal degree, one
    matrix block per internal degree.  Missing blocks are zero maps.
    """

    def __init__(
        self,
        positions: Sequence[GradedDims],
        differentials: Sequence[Mapping[int, Matrix]] | None = None,
    ):
        self.positions = [p if isinstance(p, GradedDims) else GradedDims(p) for p in positions]
        n = len(self.positions)
        diffs: list[dict[int, Matrix]] = [{} for _ in range(max(n - 1, 0))]
        if differentials is not None:
            if len(differentials) > max(n - 1, 0):
                raise ValueError("too many differentials")
            for i, block in enumerate(differentials):
                for q, m in block.items():
                    src = self.positions[i].get(q)
                    tgt = self.positions[i + 1].get(q)
                    if m.rows != tgt or m.cols != src:
                        raise ValueError(
                            f"differential {i} at degree {q} has shape "
                            f"{m.rows}x{m.cols}, expected {tgt}x{src}"
                        )
                    if not m.is_zero():
                        diffs[i][q] = m
        self.differentials = diffs

    def __len__(self) -> int:
        return len(self.positions)

    def block(self, i: int, q: int) -> Matrix:
        """Differential block position i -> i+1 at internal degree q."""
        m = self.differentials[i].get(q)
        if m is None:
            return Matrix.zero(self.positions[i + 1].get(q), self.positions[i].get(q))
        return m

    def degrees(self) -> list[int]:
        degs = set()
        for p in self.positions:
            degs.update(p.degrees())
        return sorted(degs)

    def check_d_squared(self) -> None:
        for i in range(len(self.positions) - 2):
            for q in self.degrees():
                prod = self.block(i + 1, q) * self.block(i, q)
                if not prod.is_zero():
                    raise ValueError(f"d o d != 0 at position {i}, degree {q}")


def cohomology_dims(c: CochainComplex) -> list[GradedDims]:
    """Cohomology dimensions of a cochain complex, one GradedDims per position.

    Rejects complexes whose differentials do not compose to zero.
    """
    c.check_d_squared()
    n = len(c.positions)
    out = []
    for i in range(n):
        dims = {}
        for q in c.positions[i].degrees():
            dim = c.positions[i].get(q)
            rk_out = c.block(i, q).rank() if i < n - 1 else 0
            rk_in = c.block(i - 1, q).rank() if i > 0 else 0
            h = dim - rk_out - rk_in
            if h < 0:
                raise ValueError("negative cohomology dimension; broken complex")
            if h:
                dims[q] = h
        out.append(GradedDims(dims))
    return out


def _trim(coeffs: list[int]) -> tuple[int, ...]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def _poly_add(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def _poly_mul(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def _poly_one_minus_q_pow(e: int) -> tuple[int, ...]:
    p: tuple[int, ...] = (1,)
    for _ in range(e):
        p = _poly_mul(p, (1, -1))
    return p


class HilbertSeries:
    """numerator(q) / (1-q)**denominator_exponent with integer coefficients.

    Canonical form: the numerator is not divisible by (1-q) unless the
    denominator exponent is zero.
    """

    __slots__ = ("numerator", "denominator_exponent")

    def __init__(self, numerator: Sequence[int], denominator_exponent: int = 0):
        if denominator_exponent < 0:
            raise ValueError("negative denominator exponent")
        num = _trim([int(c) for c in numerator])
        # cancel common factors of (1-q): divisible iff numerator vanishes at q=1
        while denominator_exponent > 0 and num and sum(num) == 0:
            # quotient of num by (1-q): h_k = sum of num[0..k]
            acc = 0
            quot = []
            for c in num[:-1]:
                acc += c
                quot.append(acc)
            num = _trim(quot)
            denominator_exponent -= 1
        self.numerator = num
        self.denominator_exponent = denominator_exponent

    @classmethod
    def zero(cls) -> "HilbertSeries":
        return cls(())

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> "HilbertSeries":
        return cls([0] * degree + [coeff])

    @classmethod
    def free_module(cls, rank_vars: int, shift: int = 0, copies: int = 1) -> "HilbertSeries":
        """q**shift * copies / (1-q)**rank_vars."""
        return cls([0] * shift + [copies], rank_vars)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, HilbertSeries)
            and self.numerator == other.numerator
            and self.denominator_exponent == other.denominator_exponent
        )

    def __hash__(self):
        return hash((self.numerator, self.denominator_exponent))

    def __repr__(self) -> str:
        return f"HilbertSeries({list(self.numerator)}, {self.denominator_exponent})"

    def is_zero(self) -> bool:
        return not self.numerator


def series_add(a: HilbertSeries, b: HilbertSeries) -> HilbertSeries:
    e = max(a.denominator_exponent, b.denominator_exponent)
    na = _poly_mul(a.numerator, _poly_one_minus_q_pow(e - a.denominator_exponent))
    nb = _poly_mul(b.numerator, _poly_one_minus_q_pow(e - b.denominator_exponent))
    return HilbertSeries(_poly_add(na, nb), e)


def series_shift(h: HilbertSeries, by: int) -> HilbertSeries:
    """Multiply by q**by.  The shift must be non-negative."""
    if by < 0:
        raise ValueError("negative shift")
    return HilbertSeries([0] * by + list(h.numerator), h.denominator_exponent)


def series_scale(h: HilbertSeries, c: int) -> HilbertSeries:
    return HilbertSeries([c * x for x in h.numerator], h.denominator_exponent)


def series_mul(a: HilbertSeries, b: HilbertSeries) -> HilbertSeries:
    return HilbertSeries(
        _poly_mul(a.numerator, b.numerator),
        a.denominator_exponent + b.denominator_exponent,
    )


def series_window(h: HilbertSeries, max_degree: int) -> GradedDims:
    """Taylor coefficients of h in degrees 0..max_degree."""
    if max_degree < 0:
        raise ValueError("max_degree must be >= 0")
    coeffs = list(h.numerator[: max_degree + 1])
    coeffs += [0] * (max_degree + 1 - len(coeffs))
    for _ in range(h.denominator_exponent):
        acc = 0
        for k in range(max_degree + 1):
            acc += coeffs[k]
            coeffs[k] = acc
    return GradedDims({k: c for k, c in enumerate(coeffs)})
