"""Brute-force ground truth over small prime fields.

Everything here recomputes structure straight from definitions by exhausting
subspaces, so it is slow and deliberately independent: this module never
imports the fast-path algorithms it certifies (no `series`, `subinvariance`
or `structure` imports).  It shares only the field/linear-algebra primitives
and the structure-tensor container, and carries its own tiny span-product,
ideal, solvability and nilpotency helpers.

Enumeration walks reduced-echelon bases directly: for each rank k and each
pivot-column combination, every assignment of the free entries yields exactly
one subspace, already in canonical form.  The total count per ambient
dimension is the Gaussian-binomial sum, which tests cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product as iterproduct

from .algebra import AlgebraView, LeibnizAlgebra
from .errors import ScopeExceeded, SumNotNilpotent, SumNotSolvable, UnsupportedField, UnsupportedP
from .fields import PrimeField
from .linalg import Subspace, Vector


@dataclass(frozen=True)
class EnumerationScope:
    """Hard caps under which exhaustive enumeration is allowed."""

    primes: tuple = (2, 3, 5)
    max_dim: int = 4
    max_dim_f2: int = 5

    def check(self, field, ambient_dim: int) -> None:
        if not isinstance(field, PrimeField):
            raise UnsupportedField("enumeration needs a prime field")
        if field.p not in self.primes:
            raise UnsupportedP(f"enumeration supports p in {self.primes}, got {field.p}")
        cap = self.max_dim_f2 if field.p == 2 else self.max_dim
        if ambient_dim > cap:
            raise ScopeExceeded(
                f"enumeration capped at dim {cap} for p={field.p}, got {ambient_dim}"
            )


DEFAULT_SCOPE = EnumerationScope()


def gaussian_binomial(n: int, k: int, p: int) -> int:
    """Number of k-dimensional subspaces of F_p^n."""
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= p ** (n - i) - 1
        den *= p ** (i + 1) - 1
    assert num % den == 0
    return num // den


def subspace_count(n: int, p: int) -> int:
    return sum(gaussian_binomial(n, k, p) for k in range(n + 1))


def enumerate_subspaces(field: PrimeField, n: int, scope: EnumerationScope = DEFAULT_SCOPE):
    """Yield every subspace of F_p^n exactly once, in canonical order:
    by dimension, then pivot columns lexicographically, then free entries."""
    scope.check(field, n)
    p = field.p
    yield Subspace.zero(field, n)
    for k in range(1, n + 1):
        for pivots in combinations(range(n), k):
            free_positions = []
            for r in range(k):
                for c in range(pivots[r] + 1, n):
                    if c not in pivots:
                        free_positions.append((r, c))
            for assignment in iterproduct(range(p), repeat=len(free_positions)):
                rows = [[0] * n for _ in range(k)]
                for r in range(k):
                    rows[r][pivots[r]] = 1
                for (r, c), val in zip(free_positions, assignment):
                    rows[r][c] = val
                yield Subspace(field, n, tuple(tuple(row) for row in rows), tuple(pivots))


# -- local definition-level helpers (kept independent of the fast paths) -----


def _span_product(a: LeibnizAlgebra, u: Subspace, v: Subspace) -> Subspace:
    vecs = []
    for x in u.basis_vectors():
        for y in v.basis_vectors():
            w = a.mul(x, y)
            if not w.is_zero():
                vecs.append(w)
    return Subspace.span(a.field, a.dim, vecs)


def _is_subalgebra(a: LeibnizAlgebra, s: Subspace) -> bool:
    return _span_product(a, s, s) <= s


def _is_ideal_in(a: LeibnizAlgebra, s: Subspace, ambient: Subspace) -> bool:
    return (_span_product(a, ambient, s) + _span_product(a, s, ambient)) <= s


def _is_solvable(a: LeibnizAlgebra, s: Subspace) -> bool:
    cur = s
    while True:
        nxt = _span_product(a, cur, cur)
        if nxt == cur:
            return cur.is_zero()
        cur = nxt


def _is_nilpotent(a: LeibnizAlgebra, s: Subspace) -> bool:
    cur = s
    while True:
        nxt = _span_product(a, s, cur)
        if nxt == cur:
            return cur.is_zero()
        cur = nxt


def enumerate_subalgebras(a: LeibnizAlgebra, scope: EnumerationScope = DEFAULT_SCOPE):
    for s in enumerate_subspaces(a.field, a.dim, scope):
        if _is_subalgebra(a, s):
            yield s


def enumerate_ideals(a: LeibnizAlgebra, scope: EnumerationScope = DEFAULT_SCOPE):
    full = Subspace.full(a.field, a.dim)
    for s in enumerate_subspaces(a.field, a.dim, scope):
        if _is_ideal_in(a, s, full):
            yield s


def oracle_subinvariant(
    a: LeibnizAlgebra,
    b: Subspace,
    scope: EnumerationScope = DEFAULT_SCOPE,
    _memo: dict | None = None,
) -> bool:
    """Definition-faithful subinvariance: B = A, or B sits inside a proper
    ideal J of A and is subinvariant in J, recursively.  Exhausts all ideals."""
    scope.check(a.field, a.dim)
    if not _is_subalgebra(a, b):
        return False
    memo = {} if _memo is None else _memo
    key = (a.structure_key(), b.rows)
    if key in memo:
        return memo[key]
    full = Subspace.full(a.field, a.dim)
    if b == full:
        memo[key] = True
        return True
    result = False
    for j in enumerate_ideals(a, scope):
        if j.dim == a.dim or not b <= j:
            continue
        jview = AlgebraView(a, j)
        if oracle_subinvariant(jview.algebra, jview.from_parent_subspace(b), scope, memo):
            result = True
            break
    memo[key] = result
    return result


def oracle_minimal_ideal_above(
    a: LeibnizAlgebra, seed: Subspace, scope: EnumerationScope = DEFAULT_SCOPE
) -> Subspace:
    """Intersection of all ideals of A containing the seed (itself an ideal),
    i.e. the minimal ideal above the seed, found by exhaustion."""
    scope.check(a.field, a.dim)
    best = Subspace.full(a.field, a.dim)
    for j in enumerate_ideals(a, scope):
        if seed <= j:
            best = best.intersect(j)
    return best


def oracle_rad_nilrad(a: LeibnizAlgebra, scope: EnumerationScope = DEFAULT_SCOPE):
    """(radical, nilradical) by enumerating all solvable / nilpotent ideals
    and summing them.  The sums are re-verified against the definitions."""
    scope.check(a.field, a.dim)
    rad = Subspace.zero(a.field, a.dim)
    nil = Subspace.zero(a.field, a.dim)
    for j in enumerate_ideals(a, scope):
        if _is_solvable(a, j):
            rad = rad + j
        if _is_nilpotent(a, j):
            nil = nil + j
    if not _is_solvable(a, rad):
        raise SumNotSolvable("sum of solvable ideals is not solvable")
    if not _is_nilpotent(a, nil):
        raise SumNotNilpotent("sum of nilpotent ideals is not nilpotent")
    return rad, nil


def oracle_all_left_ops_nilpotent(a: LeibnizAlgebra, scope: EnumerationScope = DEFAULT_SCOPE) -> bool:
    """Engel-style check: is L_x nilpotent for every vector x (exhausted)?"""
    scope.check(a.field, a.dim)
    p = a.field.p
    n = a.dim
    for coords in iterproduct(range(p), repeat=n):
        x = Vector.make(a.field, coords)
        if x.is_zero():
            continue
        if not a.left_op(x).power(n).is_zero():
            return False
    return True
