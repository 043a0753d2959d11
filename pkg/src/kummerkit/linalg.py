"""Exact dense linear algebra over any tower field.

Everything here is deterministic: pivots are the first nonzero entry scanning
top-to-bottom in the leftmost unresolved column (magnitude heuristics are
meaningless in exact arithmetic), and nullspace bases use the standard RREF
free-column parametrization. Vectors are plain tuples of field elements.
"""

from __future__ import annotations

import itertools
from typing import NamedTuple

from .errors import DimensionMismatch, FieldMismatch
from .polynomials import Polynomial, poly_lcm
from .tower import ExtensionElement


class Matrix:
    """Immutable dense matrix; ``rows`` is a tuple of row tuples."""

    __slots__ = ("field", "rows")

    def __init__(self, field, rows):
        rows = tuple(tuple(field.coerce(c) for c in row) for row in rows)
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise DimensionMismatch("ragged rows")
        self.field = field
        self.rows = rows

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    @classmethod
    def identity(cls, field, n: int) -> "Matrix":
        one, zero = field.one(), field.zero()
        return cls(field, [[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, field, nrows: int, ncols: int) -> "Matrix":
        zero = field.zero()
        return cls(field, [[zero] * ncols for _ in range(nrows)])

    @classmethod
    def from_columns(cls, field, columns) -> "Matrix":
        columns = [tuple(col) for col in columns]
        if not columns:
            raise DimensionMismatch("no columns")
        n = len(columns[0])
        if any(len(c) != n for c in columns):
            raise DimensionMismatch("columns of unequal length")
        return cls(field, [[col[i] for col in columns] for i in range(n)])

    def column(self, j: int) -> tuple:
        return tuple(row[j] for row in self.rows)

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_compatible(other, same_shape=True)
        return Matrix(self.field, [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_compatible(other, same_shape=True)
        return Matrix(self.field, [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)])

    def __mul__(self, other: "Matrix") -> "Matrix":
        self._check_compatible(other)
        if self.ncols != other.nrows:
            raise DimensionMismatch(f"{self.nrows}x{self.ncols} times {other.nrows}x{other.ncols}")
        cols = [other.column(j) for j in range(other.ncols)]
        zero = self.field.zero()
        out = []
        for row in self.rows:
            out.append([sum((a * b for a, b in zip(row, col) if a and b), zero) for col in cols])
        return Matrix(self.field, out)

    def scale(self, k) -> "Matrix":
        k = self.field.coerce(k)
        return Matrix(self.field, [[a * k for a in row] for row in self.rows])

    def apply(self, v) -> tuple:
        return mat_apply(self, v)

    def power(self, e: int) -> "Matrix":
        if self.nrows != self.ncols:
            raise DimensionMismatch("power of a non-square matrix")
        result = Matrix.identity(self.field, self.nrows)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def is_zero(self) -> bool:
        return not any(any(row) for row in self.rows)

    def _check_compatible(self, other: "Matrix", same_shape: bool = False):
        if self.field != other.field:
            raise FieldMismatch(f"matrices over {self.field} and {other.field}")
        if same_shape and (self.nrows != other.nrows or self.ncols != other.ncols):
            raise DimensionMismatch(f"{self.nrows}x{self.ncols} vs {other.nrows}x{other.ncols}")

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.field == other.field and self.rows == other.rows

    def __hash__(self):
        return hash((self.field, self.rows))

    def __repr__(self):
        return f"Matrix({self.field!r}, {[list(r) for r in self.rows]!r})"


class RrefResult(NamedTuple):
    matrix: Matrix
    pivots: list[int]
    rank: int


def rref(m: Matrix) -> RrefResult:
    """Reduced row echelon form with leading 1s; fully deterministic."""
    rows = [list(r) for r in m.rows]
    nrows, ncols = m.nrows, m.ncols
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pivot_row = next((i for i in range(r, nrows) if rows[i][c]), None)
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        lead = rows[r][c]
        if lead != m.field.one():
            inv = m.field.one() / lead
            rows[r] = [a * inv for a in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return RrefResult(Matrix(m.field, rows), pivots, len(pivots))


def nullspace(m: Matrix) -> list[tuple]:
    """Basis of the right kernel, one vector per free column, ascending.

    Each basis vector carries the entry 1 at its own free column (standard
    RREF parametrization), which makes the basis canonical.
    """
    reduced, pivots, rank = rref(m)
    zero, one = m.field.zero(), m.field.one()
    pivot_set = set(pivots)
    free_cols = [c for c in range(m.ncols) if c not in pivot_set]
    basis = []
    for fc in free_cols:
        v = [zero] * m.ncols
        v[fc] = one
        for r, pc in enumerate(pivots):
            v[pc] = -reduced.rows[r][fc]
        basis.append(tuple(v))
    assert rank + len(basis) == m.ncols  # rank-nullity
    return basis


def mat_apply(m: Matrix, v) -> tuple:
    """Matrix-vector product."""
    v = tuple(m.field.coerce(c) for c in v)
    if len(v) != m.ncols:
        raise DimensionMismatch(f"vector of length {len(v)} against {m.nrows}x{m.ncols}")
    zero = m.field.zero()
    return tuple(sum((a * b for a, b in zip(row, v) if a and b), zero) for row in m.rows)


def operator_matrix(images: list[ExtensionElement]) -> Matrix:
    """Matrix over the base field whose column j is the coordinates of images[j].

    For an automorphism given on the power basis 1, a, ..., a^(n-1), pass the
    images of those basis elements in order.
    """
    if not images:
        raise DimensionMismatch("no images")
    ext = images[0].field
    if any(not isinstance(img, ExtensionElement) or img.field != ext for img in images):
        raise DimensionMismatch("images must all live in one extension field")
    if len(images) != ext.degree:
        raise DimensionMismatch(f"{len(images)} images for a degree-{ext.degree} extension")
    return Matrix.from_columns(ext.base, [img.coords for img in images])


def first_linear_dependency(field, vectors, limit: int) -> list:
    """Monic coefficients of the first dependency in a vector sequence.

    Consumes vectors v_0, v_1, ... until some v_k lies in the span of its
    predecessors, then returns [c_0, ..., c_{k-1}, 1] with
    sum(c_j * v_j) + v_k = 0. The caller guarantees a dependency occurs
    within ``limit`` vectors.
    """
    cols = []
    for v in itertools.islice(vectors, limit):
        cols.append(tuple(v))
        kernel = nullspace(Matrix.from_columns(field, cols))
        if kernel:
            return list(kernel[0])
    raise AssertionError("no linear dependency found within the promised bound")


def poly_at_matrix(p: Polynomial, m: Matrix) -> Matrix:
    """Substitute the matrix into the polynomial (Horner)."""
    if m.nrows != m.ncols:
        raise DimensionMismatch("polynomial of a non-square matrix")
    n = m.nrows
    result = Matrix.zeros(m.field, n, n)
    ident = Matrix.identity(m.field, n)
    for c in reversed(p.coeffs):
        result = result * m + ident.scale(c)
    return result


def operator_min_poly(m: Matrix) -> Polynomial:
    """Least-degree monic polynomial annihilating the matrix.

    LCM of the minimal annihilating polynomials of the Krylov sequences from
    each standard basis vector, stopping as soon as the accumulated candidate
    annihilates the matrix.
    """
    if m.nrows != m.ncols:
        raise DimensionMismatch("minimal polynomial of a non-square matrix")
    n = m.nrows
    field = m.field
    if n == 0:
        return Polynomial.one(field)
    zero, one = field.zero(), field.one()
    acc = Polynomial.one(field)
    for i in range(n):
        start = tuple(one if j == i else zero for j in range(n))

        def krylov(v=start):
            while True:
                yield v
                v = mat_apply(m, v)

        coeffs = first_linear_dependency(field, krylov(), n + 1)
        acc = poly_lcm(acc, Polynomial(field, coeffs))
        if poly_at_matrix(acc, m).is_zero():
            return acc
    raise AssertionError("Krylov LCM over a full basis must annihilate the matrix")


def element_min_poly(x: ExtensionElement) -> Polynomial:
    """Minimal polynomial of an extension element over the base field.

    Krylov on the coordinate vectors of 1, x, x^2, ...; the first linear
    dependency over the base field gives the monic minimal polynomial.
    """
    ext = x.field

    def powers():
        acc = ext.one()
        while True:
            yield acc.coords
            acc = acc * x

    coeffs = first_linear_dependency(ext.base, powers(), ext.degree + 1)
    return Polynomial(ext.base, coeffs)
