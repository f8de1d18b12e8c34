"""Exact linear algebra over a fixed scalar field.

Vectors and matrices are immutable containers of raw field values.  A
`Subspace` stores the reduced row echelon basis of its row span, which is the
unique canonical basis of the subspace: two subspaces are equal iff their
representations are equal, so `==` on `Subspace` is the subspace equality
predicate used throughout the package.  Sums, intersections, membership and
nullspaces are all computed by exact Gaussian elimination; there is no
floating point and no pivot-size heuristic.

Zero-dimensional ambients (length-0 vectors, 0x0 matrices) are supported so
quotients by the whole space behave like every other quotient.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import DimensionMismatch, FieldMismatch, IndexOutOfRange
from .fields import Field, ensure_same_field


def _rref(rows, ncols, field):
    """Reduce `rows` in place-ish; return (nonzero reduced rows, pivot cols)."""
    work = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        if r == len(work):
            break
        pr = None
        for i in range(r, len(work)):
            if not field.is_zero(work[i][c]):
                pr = i
                break
        if pr is None:
            continue
        work[r], work[pr] = work[pr], work[r]
        inv = field.inv(work[r][c])
        work[r] = [field.mul(inv, e) for e in work[r]]
        for i in range(len(work)):
            if i != r and not field.is_zero(work[i][c]):
                f = work[i][c]
                row_r = work[r]
                work[i] = [field.sub(e, field.mul(f, pe)) for e, pe in zip(work[i], row_r)]
        pivots.append(c)
        r += 1
    return [tuple(row) for row in work[:r]], tuple(pivots)


@dataclass(frozen=True)
class Vector:
    field: Field
    coords: tuple

    @staticmethod
    def make(field: Field, coords: Iterable) -> "Vector":
        return Vector(field, tuple(field.coerce(c) for c in coords))

    @staticmethod
    def zero(field: Field, n: int) -> "Vector":
        return Vector(field, (field.zero,) * n)

    @staticmethod
    def unit(field: Field, n: int, i: int) -> "Vector":
        if not 0 <= i < n:
            raise IndexOutOfRange(f"unit vector index {i} outside [0, {n})")
        return Vector(field, tuple(field.one if j == i else field.zero for j in range(n)))

    @property
    def dim(self) -> int:
        return len(self.coords)

    def _check(self, other: "Vector") -> None:
        ensure_same_field(self.field, other.field)
        if self.dim != other.dim:
            raise DimensionMismatch(f"vector lengths {self.dim} != {other.dim}")

    def __add__(self, other: "Vector") -> "Vector":
        self._check(other)
        f = self.field
        return Vector(f, tuple(f.add(a, b) for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Vector") -> "Vector":
        self._check(other)
        f = self.field
        return Vector(f, tuple(f.sub(a, b) for a, b in zip(self.coords, other.coords)))

    def scale(self, c) -> "Vector":
        f = self.field
        c = f.coerce(c)
        return Vector(f, tuple(f.mul(c, a) for a in self.coords))

    def __neg__(self) -> "Vector":
        f = self.field
        return Vector(f, tuple(f.neg(a) for a in self.coords))

    def is_zero(self) -> bool:
        f = self.field
        return all(f.is_zero(a) for a in self.coords)

    def render(self) -> tuple:
        return tuple(self.field.render(c) for c in self.coords)


@dataclass(frozen=True)
class Matrix:
    field: Field
    nrows: int
    ncols: int
    entries: tuple  # tuple of row tuples

    @staticmethod
    def from_rows(field: Field, rows: Sequence[Sequence]) -> "Matrix":
        coerced = tuple(tuple(field.coerce(e) for e in row) for row in rows)
        nrows = len(coerced)
        ncols = len(coerced[0]) if coerced else 0
        for row in coerced:
            if len(row) != ncols:
                raise DimensionMismatch("ragged matrix rows")
        return Matrix(field, nrows, ncols, coerced)

    @staticmethod
    def zeros(field: Field, nrows: int, ncols: int) -> "Matrix":
        return Matrix(field, nrows, ncols, ((field.zero,) * ncols,) * nrows)

    @staticmethod
    def identity(field: Field, n: int) -> "Matrix":
        return Matrix(
            field,
            n,
            n,
            tuple(
                tuple(field.one if i == j else field.zero for j in range(n))
                for i in range(n)
            ),
        )

    @staticmethod
    def from_columns(field: Field, cols: Sequence[Vector]) -> "Matrix":
        if not cols:
            return Matrix(field, 0, 0, ())
        n = cols[0].dim
        for v in cols:
            ensure_same_field(field, v.field)
            if v.dim != n:
                raise DimensionMismatch("columns of unequal length")
        return Matrix(
            field, n, len(cols), tuple(tuple(v.coords[i] for v in cols) for i in range(n))
        )

    def _check(self, other: "Matrix") -> None:
        ensure_same_field(self.field, other.field)

    def row(self, i: int) -> Vector:
        return Vector(self.field, self.entries[i])

    def column(self, j: int) -> Vector:
        return Vector(self.field, tuple(r[j] for r in self.entries))

    def apply(self, v: Vector) -> Vector:
        """Matrix-vector product (v as a column)."""
        ensure_same_field(self.field, v.field)
        if v.dim != self.ncols:
            raise DimensionMismatch(f"matrix is {self.nrows}x{self.ncols}, vector has {v.dim}")
        f = self.field
        out = []
        for row in self.entries:
            acc = f.zero
            for a, b in zip(row, v.coords):
                if not f.is_zero(a) and not f.is_zero(b):
                    acc = f.add(acc, f.mul(a, b))
            out.append(acc)
        return Vector(f, tuple(out))

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        if self.ncols != other.nrows:
            raise DimensionMismatch(
                f"cannot multiply {self.nrows}x{self.ncols} by {other.nrows}x{other.ncols}"
            )
        f = self.field
        ot = tuple(zip(*other.entries)) if other.entries else ()
        rows = []
        for row in self.entries:
            new_row = []
            for col in ot:
                acc = f.zero
                for a, b in zip(row, col):
                    if not f.is_zero(a) and not f.is_zero(b):
                        acc = f.add(acc, f.mul(a, b))
                new_row.append(acc)
            if not ot:
                new_row = [f.zero] * other.ncols
            rows.append(tuple(new_row))
        return Matrix(f, self.nrows, other.ncols, tuple(rows))

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check(other)
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise DimensionMismatch("matrix shapes differ")
        f = self.field
        return Matrix(
            f,
            self.nrows,
            self.ncols,
            tuple(
                tuple(f.add(a, b) for a, b in zip(r1, r2))
                for r1, r2 in zip(self.entries, other.entries)
            ),
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + other.scale(self.field.neg(self.field.one))

    def scale(self, c) -> "Matrix":
        f = self.field
        c = f.coerce(c)
        return Matrix(
            f,
            self.nrows,
            self.ncols,
            tuple(tuple(f.mul(c, e) for e in row) for row in self.entries),
        )

    def transpose(self) -> "Matrix":
        return Matrix(
            self.field,
            self.ncols,
            self.nrows,
            tuple(zip(*self.entries)) if self.entries else (),
        )

    def trace(self):
        if self.nrows != self.ncols:
            raise DimensionMismatch("trace of a non-square matrix")
        f = self.field
        acc = f.zero
        for i in range(self.nrows):
            acc = f.add(acc, self.entries[i][i])
        return acc

    def power(self, k: int) -> "Matrix":
        if self.nrows != self.ncols:
            raise DimensionMismatch("power of a non-square matrix")
        if k < 0:
            raise IndexOutOfRange("negative matrix power")
        result = Matrix.identity(self.field, self.nrows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base if k > 1 else base
            k >>= 1
        return result

    def is_zero(self) -> bool:
        f = self.field
        return all(f.is_zero(e) for row in self.entries for e in row)

    def rank(self) -> int:
        rows, _ = _rref(self.entries, self.ncols, self.field)
        return len(rows)

    def flatten(self) -> Vector:
        """Row-major flattening; pairs with `unflatten`."""
        return Vector(self.field, tuple(e for row in self.entries for e in row))

    @staticmethod
    def unflatten(field: Field, v: Vector, nrows: int, ncols: int) -> "Matrix":
        if v.dim != nrows * ncols:
            raise DimensionMismatch("flattened length does not match shape")
        return Matrix(
            field,
            nrows,
            ncols,
            tuple(tuple(v.coords[i * ncols + j] for j in range(ncols)) for i in range(nrows)),
        )


@dataclass(frozen=True)
class Subspace:
    """A subspace of F^n held in reduced row echelon form.

    `rows` is the canonical (RREF) basis, `pivots` the pivot columns.  The
    representation is unique per subspace, so dataclass equality and hashing
    decide subspace equality.
    """

    field: Field
    ambient: int
    rows: tuple
    pivots: tuple

    @staticmethod
    def span(field: Field, ambient: int, vectors: Iterable) -> "Subspace":
        raw = []
        for v in vectors:
            if isinstance(v, Vector):
                ensure_same_field(field, v.field)
                coords = v.coords
            else:
                coords = tuple(field.coerce(c) for c in v)
            if len(coords) != ambient:
                raise DimensionMismatch(
                    f"vector of length {len(coords)} in ambient dimension {ambient}"
                )
            raw.append(coords)
        rows, pivots = _rref(raw, ambient, field)
        return Subspace(field, ambient, tuple(rows), pivots)

    @staticmethod
    def zero(field: Field, ambient: int) -> "Subspace":
        return Subspace(field, ambient, (), ())

    @staticmethod
    def full(field: Field, ambient: int) -> "Subspace":
        eye = Matrix.identity(field, ambient)
        return Subspace(field, ambient, eye.entries, tuple(range(ambient)))

    @property
    def dim(self) -> int:
        return len(self.rows)

    def is_zero(self) -> bool:
        return self.dim == 0

    def is_full(self) -> bool:
        return self.dim == self.ambient

    def basis_vectors(self) -> list:
        return [Vector(self.field, r) for r in self.rows]

    def _reduce(self, v: Vector):
        """Residual of v after eliminating with the echelon basis."""
        ensure_same_field(self.field, v.field)
        if v.dim != self.ambient:
            raise DimensionMismatch("vector length differs from ambient dimension")
        f = self.field
        coords = list(v.coords)
        coeffs = []
        for row, p in zip(self.rows, self.pivots):
            c = coords[p]
            coeffs.append(c)
            if not f.is_zero(c):
                for idx in range(self.ambient):
                    if not f.is_zero(row[idx]):
                        coords[idx] = f.sub(coords[idx], f.mul(c, row[idx]))
        return Vector(f, tuple(coords)), coeffs

    def contains(self, v: Vector) -> bool:
        residual, _ = self._reduce(v)
        return residual.is_zero()

    def coords_of(self, v: Vector) -> Vector:
        """Coordinates of v in the canonical basis; v must lie in the space."""
        residual, coeffs = self._reduce(v)
        if not residual.is_zero():
            raise DimensionMismatch("vector not in subspace")
        return Vector(self.field, tuple(coeffs))

    def from_coords(self, coeffs: Vector) -> Vector:
        ensure_same_field(self.field, coeffs.field)
        if coeffs.dim != self.dim:
            raise DimensionMismatch("coordinate length differs from subspace dimension")
        f = self.field
        out = [f.zero] * self.ambient
        for c, row in zip(coeffs.coords, self.rows):
            if not f.is_zero(c):
                for idx in range(self.ambient):
                    if not f.is_zero(row[idx]):
                        out[idx] = f.add(out[idx], f.mul(c, row[idx]))
        return Vector(f, tuple(out))

    def __le__(self, other: "Subspace") -> bool:
        ensure_same_field(self.field, other.field)
        if self.ambient != other.ambient:
            raise DimensionMismatch("subspaces of different ambient dimension")
        if self.dim > other.dim:
            return False
        return all(other.contains(Vector(self.field, r)) for r in self.rows)

    def __add__(self, other: "Subspace") -> "Subspace":
        ensure_same_field(self.field, other.field)
        if self.ambient != other.ambient:
            raise DimensionMismatch("subspaces of different ambient dimension")
        return Subspace.span(self.field, self.ambient, self.rows + other.rows)

    def basis_matrix(self) -> Matrix:
        return Matrix(self.field, self.dim, self.ambient, self.rows)

    def constraints(self) -> Matrix:
        """A matrix C with C v = 0 iff v lies in this subspace."""
        ns = nullspace(self.basis_matrix())
        return ns.basis_matrix()

    def intersect(self, other: "Subspace") -> "Subspace":
        ensure_same_field(self.field, other.field)
        if self.ambient != other.ambient:
            raise DimensionMismatch("subspaces of different ambient dimension")
        c1 = self.constraints()
        c2 = other.constraints()
        stacked = Matrix(
            self.field,
            c1.nrows + c2.nrows,
            self.ambient,
            c1.entries + c2.entries,
        )
        return nullspace(stacked)

    def complement_positions(self) -> tuple:
        """Ambient coordinate positions not used as pivots."""
        pivotset = set(self.pivots)
        return tuple(c for c in range(self.ambient) if c not in pivotset)

    def render_rows(self) -> list:
        return [[self.field.render(e) for e in row] for row in self.rows]


def nullspace(m: Matrix) -> Subspace:
    """Right nullspace {x : M x = 0} as a canonical subspace of F^ncols."""
    f = m.field
    rows, pivots = _rref(m.entries, m.ncols, f)
    pivotset = set(pivots)
    free = [c for c in range(m.ncols) if c not in pivotset]
    basis = []
    for fc in free:
        coords = [f.zero] * m.ncols
        coords[fc] = f.one
        for row, p in zip(rows, pivots):
            coords[p] = f.neg(row[fc])
        basis.append(tuple(coords))
    return Subspace.span(f, m.ncols, basis)
