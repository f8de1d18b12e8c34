"""Finite-dimensional left Leibniz algebras over an exact scalar field.

An algebra is a structure tensor c[i][j][k] on a chosen basis, with the
product x*y = sum x_i y_j c[i][j] of basis product vectors.  The defining
identity is the *left* Leibniz law: every left multiplication operator is a
derivation,

    x(yz) = (xy)z + y(xz),

checked on all dim^3 basis triples at construction time.  Quotients and
subalgebra views rebuild honest algebras (re-validated) together with exact
coordinate maps, so structural computations can recurse into subquotients
without leaving the canonical-representation world of `linalg`.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    CharTwoDimTooLarge,
    DimensionMismatch,
    IndexOutOfRange,
    InvalidParams,
    LeibnizIdentityViolation,
    NotADerivation,
    NotAnIdeal,
    NotASubalgebra,
    SubspaceNotInAmbient,
)
from .fields import Field, ensure_same_field
from .linalg import Matrix, Subspace, Vector


class LeibnizAlgebra:
    """A left Leibniz algebra given by its structure tensor."""

    def __init__(self, field: Field, table, name: str = ""):
        self.field = field
        self.name = name
        tensor = tuple(
            tuple(tuple(field.coerce(e) for e in row) for row in plane) for plane in table
        )
        n = len(tensor)
        for plane in tensor:
            if len(plane) != n or any(len(row) != n for row in plane):
                raise DimensionMismatch("structure tensor is not dim x dim x dim")
        self.dim = n
        self.table = tensor
        # basis product vectors: _bp[i][j] = e_i * e_j
        self._bp = tuple(tuple(Vector(field, row) for row in plane) for plane in tensor)
        self._bp_zero = tuple(tuple(v.is_zero() for v in plane) for plane in self._bp)
        self._check_identity()

    @staticmethod
    def from_products(field: Field, dim: int, products, name: str = "") -> "LeibnizAlgebra":
        """Build from a sparse {(i, j): [(k, coeff), ...]} map, 0-based."""
        table = [[[field.zero] * dim for _ in range(dim)] for _ in range(dim)]
        for (i, j), out in products.items():
            if not (0 <= i < dim and 0 <= j < dim):
                raise IndexOutOfRange(f"product index ({i},{j}) outside basis range")
            for k, coeff in out:
                if not 0 <= k < dim:
                    raise IndexOutOfRange(f"output index {k} outside basis range")
                table[i][j][k] = field.add(table[i][j][k], field.coerce(coeff))
        return LeibnizAlgebra(field, table, name)

    # -- basic vectors and multiplication ------------------------------------

    def basis_vector(self, i: int) -> Vector:
        return Vector.unit(self.field, self.dim, i)

    def zero_vector(self) -> Vector:
        return Vector.zero(self.field, self.dim)

    def full_space(self) -> Subspace:
        return Subspace.full(self.field, self.dim)

    def zero_space(self) -> Subspace:
        return Subspace.zero(self.field, self.dim)

    def mul(self, x: Vector, y: Vector) -> Vector:
        ensure_same_field(self.field, x.field)
        ensure_same_field(self.field, y.field)
        if x.dim != self.dim or y.dim != self.dim:
            raise DimensionMismatch("vector length differs from algebra dimension")
        f = self.field
        out = [f.zero] * self.dim
        for i, xi in enumerate(x.coords):
            if f.is_zero(xi):
                continue
            bpi = self._bp[i]
            zrow = self._bp_zero[i]
            for j, yj in enumerate(y.coords):
                if f.is_zero(yj) or zrow[j]:
                    continue
                c = f.mul(xi, yj)
                for k, e in enumerate(bpi[j].coords):
                    if not f.is_zero(e):
                        out[k] = f.add(out[k], f.mul(c, e))
        return Vector(f, tuple(out))

    def _mul_basis(self, i: int, y: Vector) -> Vector:
        """e_i * y, used by the identity check."""
        f = self.field
        out = [f.zero] * self.dim
        for j, yj in enumerate(y.coords):
            if f.is_zero(yj) or self._bp_zero[i][j]:
                continue
            for k, e in enumerate(self._bp[i][j].coords):
                if not f.is_zero(e):
                    out[k] = f.add(out[k], f.mul(yj, e))
        return Vector(f, tuple(out))

    def _mul_vec_basis(self, x: Vector, j: int) -> Vector:
        f = self.field
        out = [f.zero] * self.dim
        for i, xi in enumerate(x.coords):
            if f.is_zero(xi) or self._bp_zero[i][j]:
                continue
            for k, e in enumerate(self._bp[i][j].coords):
                if not f.is_zero(e):
                    out[k] = f.add(out[k], f.mul(xi, e))
        return Vector(f, tuple(out))

    def _check_identity(self) -> None:
        n = self.dim
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    lhs = self._mul_basis(i, self._bp[j][k])
                    rhs = self._mul_vec_basis(self._bp[i][j], k) + self._mul_basis(
                        j, self._bp[i][k]
                    )
                    if lhs != rhs:
                        raise LeibnizIdentityViolation(
                            i + 1, j + 1, k + 1, lhs.render(), rhs.render()
                        )

    # -- multiplication operators --------------------------------------------

    def left_op(self, x: Vector) -> Matrix:
        """Matrix of y -> x*y."""
        cols = [self.mul(x, self.basis_vector(j)) for j in range(self.dim)]
        return Matrix.from_columns(self.field, cols)

    def right_op(self, x: Vector) -> Matrix:
        """Matrix of y -> y*x."""
        cols = [self.mul(self.basis_vector(j), x) for j in range(self.dim)]
        return Matrix.from_columns(self.field, cols)

    # -- subspace-level operations -------------------------------------------

    def product(self, u: Subspace, v: Subspace) -> Subspace:
        """Span of all products u_i * v_j over basis pairs."""
        self._check_subspace(u)
        self._check_subspace(v)
        vecs = []
        for a in u.basis_vectors():
            for b in v.basis_vectors():
                w = self.mul(a, b)
                if not w.is_zero():
                    vecs.append(w)
        return Subspace.span(self.field, self.dim, vecs)

    def _check_subspace(self, s: Subspace) -> None:
        ensure_same_field(self.field, s.field)
        if s.ambient != self.dim:
            raise DimensionMismatch("subspace ambient differs from algebra dimension")

    def is_subalgebra(self, s: Subspace) -> bool:
        self._check_subspace(s)
        return self.product(s, s) <= s

    def is_ideal(self, s: Subspace, ambient: Subspace | None = None) -> bool:
        self._check_subspace(s)
        amb = ambient if ambient is not None else self.full_space()
        if not s <= amb:
            raise SubspaceNotInAmbient("candidate ideal not inside the ambient subspace")
        return (self.product(amb, s) + self.product(s, amb)) <= s

    def centralizer(self, b: Subspace, side: str = "both") -> Subspace:
        """Elements x with x*b = 0 (left), b*x = 0 (right), or both."""
        self._check_subspace(b)
        if side not in ("left", "right", "both"):
            raise InvalidParams(f"side must be left/right/both, got {side!r}")
        rows = []
        for bv in b.basis_vectors():
            if side in ("left", "both"):
                rows.extend(self.right_op(bv).entries)  # x*b = R_b x
            if side in ("right", "both"):
                rows.extend(self.left_op(bv).entries)  # b*x = L_b x
        stacked = Matrix(self.field, len(rows), self.dim, tuple(rows))
        from .linalg import nullspace

        return nullspace(stacked)

    def left_center(self) -> Subspace:
        return self.centralizer(self.full_space(), "left")

    def right_center(self) -> Subspace:
        return self.centralizer(self.full_space(), "right")

    def center(self) -> Subspace:
        return self.centralizer(self.full_space(), "both")

    def normalizer(self, h: Subspace) -> Subspace:
        """Elements x with x*h in H and h*x in H for all h in H."""
        self._check_subspace(h)
        c = h.constraints()
        rows = []
        for hv in h.basis_vectors():
            rows.extend((c @ self.right_op(hv)).entries)
            rows.extend((c @ self.left_op(hv)).entries)
        stacked = Matrix(self.field, len(rows), self.dim, tuple(rows))
        from .linalg import nullspace

        return nullspace(stacked)

    def leibniz_kernel(self) -> Subspace:
        """Span of all squares x*x (the two-sided ideal measuring non-Lie-ness)."""
        f = self.field
        if f.characteristic != 2:
            vecs = []
            for i in range(self.dim):
                vecs.append(self._bp[i][i])
                for j in range(i + 1, self.dim):
                    vecs.append(self._bp[i][j] + self._bp[j][i])
            return Subspace.span(f, self.dim, vecs)
        # char 2: exhaust all squares with bitmask vectors
        n = self.dim
        if n > 20:
            raise CharTwoDimTooLarge(f"exhaustive squares over F_2 capped at dim 20, got {n}")
        masks = [
            [sum(1 << k for k, e in enumerate(self._bp[i][j].coords) if e % 2) for j in range(n)]
            for i in range(n)
        ]
        pivots = [0] * n  # pivots[k] = mask with leading bit k, or 0
        for v in range(1, 1 << n):
            support = [i for i in range(n) if v >> i & 1]
            sq = 0
            for i in support:
                mrow = masks[i]
                for j in support:
                    sq ^= mrow[j]
            while sq:
                lead = sq.bit_length() - 1
                if pivots[lead]:
                    sq ^= pivots[lead]
                else:
                    pivots[lead] = sq
                    break
        vecs = []
        for mask in pivots:
            if mask:
                vecs.append([(mask >> k) & 1 for k in range(n)])
        return Subspace.span(f, self.dim, vecs)

    # -- derived constructions -----------------------------------------------

    def quotient(self, ideal: Subspace) -> "QuotientMap":
        self._check_subspace(ideal)
        if not self.is_ideal(ideal):
            raise NotAnIdeal("quotient by a subspace that is not an ideal")
        positions = ideal.complement_positions()
        q = len(positions)
        f = self.field

        def project(v: Vector) -> Vector:
            residual, _ = ideal._reduce(v)
            return Vector(f, tuple(residual.coords[p] for p in positions))

        def lift(w: Vector) -> Vector:
            out = [f.zero] * self.dim
            for p, c in zip(positions, w.coords):
                out[p] = c
            return Vector(f, tuple(out))

        table = []
        for a in range(q):
            plane = []
            for b in range(q):
                pa = lift(Vector.unit(f, q, a))
                pb = lift(Vector.unit(f, q, b))
                plane.append(project(self.mul(pa, pb)).coords)
            table.append(tuple(plane))
        name = f"{self.name}/I" if self.name else ""
        alg = LeibnizAlgebra(f, tuple(table), name)
        return QuotientMap(self, ideal, alg, positions)

    def view(self, carrier: Subspace, name: str = "") -> "AlgebraView":
        return AlgebraView(self, carrier, name)

    def structure_key(self):
        """Hashable identity of (field, tensor), for memo tables."""
        return (self.field, self.table)

    def __repr__(self):
        label = self.name or "LeibnizAlgebra"
        return f"<{label} dim={self.dim} over {self.field!r}>"


@dataclass
class QuotientMap:
    """Quotient algebra A/I with exact projection and a linear section."""

    parent: LeibnizAlgebra
    ideal: Subspace
    algebra: LeibnizAlgebra
    positions: tuple

    def project_vector(self, v: Vector) -> Vector:
        residual, _ = self.ideal._reduce(v)
        return Vector(self.parent.field, tuple(residual.coords[p] for p in self.positions))

    def lift_vector(self, w: Vector) -> Vector:
        f = self.parent.field
        out = [f.zero] * self.parent.dim
        for p, c in zip(self.positions, w.coords):
            out[p] = c
        return Vector(f, tuple(out))

    def project_subspace(self, s: Subspace) -> Subspace:
        vecs = [self.project_vector(v) for v in s.basis_vectors()]
        return Subspace.span(self.parent.field, self.algebra.dim, vecs)

    def preimage(self, s: Subspace) -> Subspace:
        vecs = [self.lift_vector(v) for v in s.basis_vectors()]
        lifted = Subspace.span(self.parent.field, self.parent.dim, vecs)
        return lifted + self.ideal


class AlgebraView:
    """A subalgebra of `parent` carried by `carrier`, as an algebra in its own
    coordinates (the canonical basis of the carrier subspace)."""

    def __init__(self, parent: LeibnizAlgebra, carrier: Subspace, name: str = ""):
        parent._check_subspace(carrier)
        basis = carrier.basis_vectors()
        k = len(basis)
        table = []
        for a in range(k):
            plane = []
            for b in range(k):
                w = parent.mul(basis[a], basis[b])
                if not carrier.contains(w):
                    raise NotASubalgebra("carrier subspace is not closed under the product")
                plane.append(carrier.coords_of(w).coords)
            table.append(tuple(plane))
        self.parent = parent
        self.carrier = carrier
        self.algebra = LeibnizAlgebra(parent.field, tuple(table), name or f"{parent.name}|view")

    def to_parent_vector(self, v: Vector) -> Vector:
        return self.carrier.from_coords(v)

    def from_parent_vector(self, v: Vector) -> Vector:
        return self.carrier.coords_of(v)

    def to_parent_subspace(self, s: Subspace) -> Subspace:
        vecs = [self.to_parent_vector(v) for v in s.basis_vectors()]
        return Subspace.span(self.parent.field, self.parent.dim, vecs)

    def from_parent_subspace(self, s: Subspace) -> Subspace:
        if not s <= self.carrier:
            raise SubspaceNotInAmbient("subspace does not lie in the view carrier")
        vecs = [self.from_parent_vector(v) for v in s.basis_vectors()]
        return Subspace.span(self.parent.field, self.algebra.dim, vecs)


def semidirect_by_derivation(a: LeibnizAlgebra, d: Matrix, name: str = "") -> LeibnizAlgebra:
    """Extend by one generator acting as the derivation d: new basis vector t
    with t*x = d(x), x*t = -d(x), t*t = 0.  Validation re-checks the Leibniz
    identity on the extension, which holds whenever `a` is Lie."""
    ensure_same_field(a.field, d.field)
    if d.nrows != a.dim or d.ncols != a.dim:
        raise DimensionMismatch("derivation matrix shape differs from algebra dimension")
    f = a.field
    for i in range(a.dim):
        for j in range(a.dim):
            lhs = d.apply(a._bp[i][j])
            rhs = a.mul(d.apply(a.basis_vector(i)), a.basis_vector(j)) + a.mul(
                a.basis_vector(i), d.apply(a.basis_vector(j))
            )
            if lhs != rhs:
                raise NotADerivation(
                    f"matrix is not a derivation: fails on basis pair ({i + 1},{j + 1})"
                )
    n = a.dim + 1
    table = [[[f.zero] * n for _ in range(n)] for _ in range(n)]
    for i in range(a.dim):
        for j in range(a.dim):
            for k in range(a.dim):
                table[i][j][k] = a.table[i][j][k]
    for j in range(a.dim):
        img = d.apply(a.basis_vector(j))
        for k in range(a.dim):
            table[a.dim][j][k] = img.coords[k]
            table[j][a.dim][k] = f.neg(img.coords[k])
    return LeibnizAlgebra(f, table, name or (f"{a.name}+der" if a.name else ""))


def direct_sum(a: LeibnizAlgebra, b: LeibnizAlgebra, name: str = "") -> LeibnizAlgebra:
    ensure_same_field(a.field, b.field)
    f = a.field
    n = a.dim + b.dim
    table = [[[f.zero] * n for _ in range(n)] for _ in range(n)]
    for i in range(a.dim):
        for j in range(a.dim):
            for k in range(a.dim):
                table[i][j][k] = a.table[i][j][k]
    off = a.dim
    for i in range(b.dim):
        for j in range(b.dim):
            for k in range(b.dim):
                table[off + i][off + j][off + k] = b.table[i][j][k]
    return LeibnizAlgebra(f, table, name or f"{a.name}(+){b.name}")
