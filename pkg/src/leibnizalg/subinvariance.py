"""Subinvariant subalgebras: decision procedure, witness chains, closures.

A subalgebra B is subinvariant in A when some finite chain
B = B_t < ... < B_0 = A has each term an ideal of the one above.  The
decision procedure runs the fastest descending chain A_{k+1} =
ideal_closure(B, A_k): it stabilizes, and it stabilizes at B iff B is
subinvariant (any witness chain dominates it termwise).  The emitted witness
is then canonically refined: whenever a step X > Y leaves room, an
intermediate ideal of X strictly between them is inserted, found as the
pullback of the smallest single-generator ideal closure in the quotient X/Y.
Refinement never changes the decision, only lengthens the reported chain to
a composition-style witness.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import AlgebraView, LeibnizAlgebra
from .errors import (
    DimTooLargeForEnumeration,
    NotASubalgebra,
    NotSubinvariantInput,
    TheoremViolation,
    UnsupportedField,
)
from .fields import PrimeField
from .linalg import Subspace, Vector
from .series import ideal_closure, subalgebra_closure, two_sided_product


@dataclass(frozen=True)
class NormalSeries:
    """terms[0] is the full space, terms[-1] the subalgebra; each term is an
    ideal of the term before it and dimensions strictly decrease."""

    terms: tuple

    def __len__(self) -> int:
        return len(self.terms)

    @property
    def bottom(self) -> Subspace:
        return self.terms[-1]

    def is_valid(self, a: LeibnizAlgebra) -> bool:
        if not self.terms or self.terms[0] != a.full_space():
            return False
        for upper, lower in zip(self.terms, self.terms[1:]):
            if lower.dim >= upper.dim:
                return False
            if not a.is_subalgebra(upper):
                return False
            if not a.is_ideal(lower, upper):
                return False
        return a.is_subalgebra(self.terms[-1])


@dataclass(frozen=True)
class SubinvarianceResult:
    subinvariant: bool
    chain: NormalSeries | None  # present iff subinvariant
    obstruction: Subspace | None  # stabilized closure strictly above B otherwise


def _refine_step(a: LeibnizAlgebra, upper: Subspace, lower: Subspace) -> Subspace | None:
    """Find T with lower < T < upper, T an ideal of upper (then lower, being
    an ideal of upper, is an ideal of T).  Candidates are pullbacks of ideal
    closures of single canonical basis vectors of the quotient upper/lower;
    the smallest proper nonzero one wins."""
    if upper.dim - lower.dim < 2:
        return None
    uview = AlgebraView(a, upper)
    lower_in_u = uview.from_parent_subspace(lower)
    qmap = uview.algebra.quotient(lower_in_u)
    q = qmap.algebra
    best = None
    for i in range(q.dim):
        seed = Subspace.span(q.field, q.dim, [Vector.unit(q.field, q.dim, i)])
        closed = ideal_closure(q, seed)
        if 0 < closed.dim < q.dim and (best is None or closed.dim < best.dim):
            best = closed
    if best is None:
        return None
    t_in_u = qmap.preimage(best)
    return uview.to_parent_subspace(t_in_u)


def _refine_chain(a: LeibnizAlgebra, terms: list) -> list:
    i = 0
    while i + 1 < len(terms):
        mid = _refine_step(a, terms[i], terms[i + 1])
        if mid is not None:
            terms.insert(i + 1, mid)
        else:
            i += 1
    return terms


def is_subinvariant(a: LeibnizAlgebra, b: Subspace, refine: bool = True) -> SubinvarianceResult:
    """Decide subinvariance of the subalgebra b; witness or obstruction."""
    if not a.is_subalgebra(b):
        raise NotASubalgebra("subinvariance is defined for subalgebras")
    terms = [a.full_space()]
    while True:
        nxt = ideal_closure(a, b, terms[-1])
        if nxt == terms[-1]:
            break
        terms.append(nxt)
    stabilized = terms[-1]
    if stabilized != b:
        return SubinvarianceResult(False, None, stabilized)
    if refine:
        terms = _refine_chain(a, terms)
    return SubinvarianceResult(True, NormalSeries(tuple(terms)), None)


def join_subinvariant(a: LeibnizAlgebra, b: Subspace, c: Subspace) -> Subspace:
    """Subalgebra generated by two subinvariant subalgebras.  In
    characteristic 0 the result is again subinvariant and this is verified."""
    if not is_subinvariant(a, b, refine=False).subinvariant:
        raise NotSubinvariantInput("first argument is not subinvariant")
    if not is_subinvariant(a, c, refine=False).subinvariant:
        raise NotSubinvariantInput("second argument is not subinvariant")
    join = subalgebra_closure(a, b + c)
    if a.field.characteristic == 0:
        if not is_subinvariant(a, join, refine=False).subinvariant:
            raise TheoremViolation(
                "join of subinvariant subalgebras failed to be subinvariant over Q"
            )
    return join


def element_closure(a: LeibnizAlgebra, c: Vector, b: Subspace) -> Subspace:
    """Smallest subalgebra containing b that is stable under left and right
    multiplication by the single element c."""
    if not a.is_subalgebra(b):
        raise NotASubalgebra("element closure starts from a subalgebra")
    cspan = Subspace.span(a.field, a.dim, [c])
    v = subalgebra_closure(a, b)
    while True:
        w = subalgebra_closure(a, v + two_sided_product(a, cspan, v))
        if w == v:
            break
        v = w
    if a.field.characteristic == 0 and is_subinvariant(a, b, refine=False).subinvariant:
        if not is_subinvariant(a, v, refine=False).subinvariant:
            raise TheoremViolation(
                "element closure of a subinvariant subalgebra failed to be subinvariant over Q"
            )
    return v


def subinvariant_core(a: LeibnizAlgebra, b: Subspace) -> Subspace:
    """Join of all subinvariant subalgebras of A lying inside the subalgebra
    b: enumeration-based, so prime fields and small dimensions only.  The
    result is verified to be an ideal of b."""
    from .oracle import DEFAULT_SCOPE, enumerate_subspaces

    if not isinstance(a.field, PrimeField):
        raise UnsupportedField("subinvariant core needs a prime field (enumeration)")
    if not a.is_subalgebra(b):
        raise NotASubalgebra("subinvariant core is defined inside a subalgebra")
    cap = DEFAULT_SCOPE.max_dim_f2 if a.field.p == 2 else DEFAULT_SCOPE.max_dim
    if b.dim > cap:
        raise DimTooLargeForEnumeration(
            f"subinvariant core enumeration capped at dim {cap} for p={a.field.p}"
        )
    total = Subspace.zero(a.field, a.dim)
    for small in enumerate_subspaces(a.field, b.dim):
        lifted = Subspace.span(
            a.field, a.dim, [b.from_coords(v) for v in small.basis_vectors()]
        )
        if not a.is_subalgebra(lifted):
            continue
        if is_subinvariant(a, lifted, refine=False).subinvariant:
            total = total + lifted
    core = subalgebra_closure(a, total)
    if not a.is_ideal(core, b):
        raise TheoremViolation("subinvariant core failed to be an ideal of its subalgebra")
    return core
