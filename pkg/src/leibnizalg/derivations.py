"""Derivation algebras and the derivation tower.

A derivation is a matrix D with D(xy) = D(x)y + x D(y); the space of all of
them is the nullspace of a linear system in the dim^2 matrix entries, built
from the structure tensor.  Commutators of derivations are again
derivations, so the canonical nullspace basis carries a Lie algebra
structure, rebuilt here as an honest validated algebra (`as_lie`).

The tower iterates A -> Der(A) -> Der(Der(A)) ... for algebras with zero
left center (then every left multiplication embeds A into its derivation
algebra injectively, and A is in fact Lie).  It stops when a stage is
complete: all derivations inner and trivial center.  Each stage is rebuilt
on a fresh canonical basis; completeness is decided by subspace equality of
the inner image inside the derivation coordinates, not by dimension counts.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import LeibnizAlgebra
from .errors import (
    CenterAppearedMidTower,
    InvalidParams,
    NonzeroLeftCenter,
    StageBudgetExceeded,
    VerificationFailed,
)
from .linalg import Matrix, Subspace, Vector, nullspace


@dataclass
class DerivationAlgebra:
    """All derivations of an algebra, with Lie structure on the canonical
    basis and the image of the left-multiplication embedding."""

    parent: LeibnizAlgebra
    space: Subspace  # inside F^(n*n), flattened row-major
    basis: list  # canonical basis as matrices
    algebra: LeibnizAlgebra  # the Lie algebra structure on `basis`
    inner: Subspace  # span of the left multiplications, in basis coordinates

    @property
    def dim(self) -> int:
        return self.space.dim

    def coords_of(self, d: Matrix) -> Vector:
        return self.space.coords_of(d.flatten())

    def contains(self, d: Matrix) -> bool:
        return self.space.contains(d.flatten())


def derivations(a: LeibnizAlgebra) -> DerivationAlgebra:
    n = a.dim
    f = a.field
    c = a.table
    # unknowns d[k][l] flattened at k*n + l; one equation per (i, j, out k)
    rows = []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                row = [f.zero] * (n * n)
                for m in range(n):
                    # D(e_i e_j)_k picks d[k][m] with weight c[i][j][m]
                    row[k * n + m] = f.add(row[k * n + m], c[i][j][m])
                    # D(e_i) e_j contributes -c[m][j][k] d[m][i]
                    row[m * n + i] = f.sub(row[m * n + i], c[m][j][k])
                    # e_i D(e_j) contributes -c[i][m][k] d[m][j]
                    row[m * n + j] = f.sub(row[m * n + j], c[i][m][k])
                rows.append(tuple(row))
    space = nullspace(Matrix(f, len(rows), n * n, tuple(rows)))
    basis = [Matrix.unflatten(f, v, n, n) for v in space.basis_vectors()]
    m = len(basis)
    table = []
    for x in range(m):
        plane = []
        for y in range(m):
            comm = (basis[x] @ basis[y]) - (basis[y] @ basis[x])
            plane.append(space.coords_of(comm.flatten()).coords)
        table.append(tuple(plane))
    lie = LeibnizAlgebra(f, tuple(table), f"Der({a.name})" if a.name else "Der")
    for x in range(m):
        for y in range(m):
            if any(
                lie.table[x][y][k] != f.neg(lie.table[y][x][k]) for k in range(m)
            ):
                raise VerificationFailed("derivation commutators are not antisymmetric")
    inner_vecs = []
    for i in range(n):
        op = a.left_op(a.basis_vector(i))
        inner_vecs.append(space.coords_of(op.flatten()))
    inner = Subspace.span(f, m, inner_vecs)
    return DerivationAlgebra(a, space, basis, lie, inner)


@dataclass(frozen=True)
class TowerStage:
    dim: int
    center_dim: int
    inner_dim: int  # inside the derivation algebra of this stage
    der_dim: int
    complete: bool


@dataclass
class TowerReport:
    stages: tuple
    terminated: bool
    limit_dim: int
    bound_value: int  # dim Der(limit of A) + dim Z(limit of A)
    bound_holds: bool


def tower(a: LeibnizAlgebra, max_stages: int = 16) -> TowerReport:
    """Iterate the derivation tower until a complete stage.  Requires zero
    left center; a nonzero center at a later stage is surfaced, not skipped."""
    if max_stages < 1:
        raise InvalidParams("max_stages must be >= 1")
    if not a.left_center().is_zero():
        raise NonzeroLeftCenter("derivation tower needs a trivial left center")

    # bound data from the lower-central limit of the starting algebra
    from .series import lower_central_limit

    limit = lower_central_limit(a, a.full_space())
    if limit.is_zero():
        bound_value = 0
    else:
        lview = a.view(limit, "limit")
        bound_value = derivations(lview.algebra).dim + lview.algebra.center().dim

    stages = []
    current = a
    for stage_index in range(max_stages):
        center_dim = current.center().dim
        if stage_index > 0 and center_dim != 0:
            raise CenterAppearedMidTower(
                f"stage {stage_index} has center of dimension {center_dim}"
            )
        der = derivations(current)
        complete = der.inner.is_full() and center_dim == 0
        stages.append(
            TowerStage(
                dim=current.dim,
                center_dim=center_dim,
                inner_dim=der.inner.dim,
                der_dim=der.dim,
                complete=complete,
            )
        )
        if complete:
            limit_dim = current.dim
            return TowerReport(
                stages=tuple(stages),
                terminated=True,
                limit_dim=limit_dim,
                bound_value=bound_value,
                bound_holds=limit_dim <= bound_value,
            )
        current = der.algebra
    raise StageBudgetExceeded(f"tower did not terminate within {max_stages} stages")
