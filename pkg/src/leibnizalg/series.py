"""Descending series, closures and the nilpotency/solvability predicates.

All series are computed until literal stabilization (two equal consecutive
terms), not until zero, so the stable term of a non-nilpotent series is a
first-class object: `lower_central_limit` returns it.  Terms are canonical
subspaces, so stabilization is representation equality.

`two_sided_product(B, C) = BC + CB` and its iterates
`two_sided_power(B, C, n+1) = two_sided_product(B, two_sided_power(B, C, n))`
are plain subspace operations; no subalgebra closure is taken inside the
recursion.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import LeibnizAlgebra
from .errors import InvalidParams, NotASubalgebra, SubspaceNotInAmbient
from .linalg import Subspace


@dataclass(frozen=True)
class SeriesResult:
    kind: str  # "lower_central" or "derived"
    terms: tuple  # terms[i+1] <= terms[i]; last two equal (stabilization witness)
    stabilized_at: int  # index of the first stable term

    @property
    def stable(self) -> Subspace:
        return self.terms[-1]

    def reaches_zero(self) -> bool:
        return self.stable.is_zero()


def subspace_product(a: LeibnizAlgebra, u: Subspace, v: Subspace) -> Subspace:
    return a.product(u, v)


def two_sided_product(a: LeibnizAlgebra, b: Subspace, c: Subspace) -> Subspace:
    """BC + CB."""
    return a.product(b, c) + a.product(c, b)


def two_sided_power(a: LeibnizAlgebra, b: Subspace, c: Subspace, n: int) -> Subspace:
    """n-fold iterate, wrapping c by b from both sides n times (n >= 1)."""
    if n < 1:
        raise InvalidParams(f"iterate count must be >= 1, got {n}")
    out = c
    for _ in range(n):
        out = two_sided_product(a, b, out)
    return out


def _require_subalgebra(a: LeibnizAlgebra, b: Subspace) -> None:
    if not a.is_subalgebra(b):
        raise NotASubalgebra("series require a subalgebra")


def lower_central_series(a: LeibnizAlgebra, b: Subspace) -> SeriesResult:
    """B, B*B, B*(B*B), ... (left-normed), until stabilization."""
    _require_subalgebra(a, b)
    terms = [b]
    while True:
        nxt = a.product(b, terms[-1])
        terms.append(nxt)
        if nxt == terms[-2]:
            break
    return SeriesResult("lower_central", tuple(terms), len(terms) - 2)


def derived_series(a: LeibnizAlgebra, b: Subspace) -> SeriesResult:
    _require_subalgebra(a, b)
    terms = [b]
    while True:
        nxt = a.product(terms[-1], terms[-1])
        terms.append(nxt)
        if nxt == terms[-2]:
            break
    return SeriesResult("derived", tuple(terms), len(terms) - 2)


def lower_central_limit(a: LeibnizAlgebra, b: Subspace) -> Subspace:
    """The stable term of the lower central series of b."""
    return lower_central_series(a, b).stable


def is_nilpotent(a: LeibnizAlgebra, b: Subspace) -> bool:
    return lower_central_series(a, b).reaches_zero()


def is_solvable(a: LeibnizAlgebra, b: Subspace) -> bool:
    return derived_series(a, b).reaches_zero()


def subalgebra_closure(a: LeibnizAlgebra, seed: Subspace) -> Subspace:
    """Smallest subalgebra containing the seed subspace."""
    a._check_subspace(seed)
    v = seed
    while True:
        w = v + a.product(v, v)
        if w == v:
            return v
        v = w


def ideal_closure(a: LeibnizAlgebra, seed: Subspace, ambient: Subspace | None = None) -> Subspace:
    """Smallest ideal of the ambient subalgebra containing the seed."""
    a._check_subspace(seed)
    amb = ambient if ambient is not None else a.full_space()
    if not seed <= amb:
        raise SubspaceNotInAmbient("seed not inside the ambient subalgebra")
    if not a.is_subalgebra(amb):
        raise NotASubalgebra("ideal closure needs a subalgebra as ambient")
    v = seed
    while True:
        w = v + a.product(amb, v) + a.product(v, amb)
        if w == v:
            return v
        v = w
