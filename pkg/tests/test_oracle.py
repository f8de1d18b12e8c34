"""Brute-force enumeration oracles and their agreement with the fast paths.

These tests treat the oracle as ground truth: every subspace (within scope)
is visited explicitly, so counts and memberships can be checked against
closed formulas and against independent routes."""

import itertools

import pytest

from leibnizalg import GF, Subspace, Vector, is_nilpotent, is_subinvariant
from leibnizalg.corpus import abelian, e4, heisenberg, reduce_mod, sl2
from leibnizalg.errors import ScopeExceeded, UnsupportedField, UnsupportedP
from leibnizalg.oracle import (
    DEFAULT_SCOPE,
    EnumerationScope,
    enumerate_ideals,
    enumerate_subalgebras,
    enumerate_subspaces,
    gaussian_binomial,
    oracle_all_left_ops_nilpotent,
    oracle_minimal_ideal_above,
    oracle_rad_nilrad,
    oracle_subinvariant,
    subspace_count,
)


def test_gaussian_binomial_values():
    assert gaussian_binomial(2, 1, 2) == 3
    assert gaussian_binomial(4, 2, 2) == 35
    assert gaussian_binomial(3, 1, 3) == 13
    assert gaussian_binomial(4, 2, 3) == 130
    assert gaussian_binomial(3, 0, 5) == 1
    assert gaussian_binomial(3, 4, 5) == 0


def test_subspace_counts():
    assert subspace_count(2, 2) == 5
    assert subspace_count(4, 2) == 67
    assert subspace_count(3, 3) == 28
    assert subspace_count(3, 5) == 64


@pytest.mark.parametrize("p,n", [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (5, 2)])
def test_enumeration_is_complete_and_duplicate_free(p, n):
    f = GF(p)
    seen = list(enumerate_subspaces(f, n))
    assert len(seen) == subspace_count(n, p)
    assert len(set(seen)) == len(seen)
    # every enumerated object is already canonical
    for s in seen:
        assert Subspace.span(f, n, s.basis_vectors()) == s


def test_enumeration_finds_an_arbitrary_span():
    f = GF(3)
    target = Subspace.span(f, 3, [Vector.make(f, [1, 2, 0]), Vector.make(f, [0, 1, 1])])
    assert target in set(enumerate_subspaces(f, 3))


def test_scope_guards():
    with pytest.raises(UnsupportedP):
        list(enumerate_subspaces(GF(7), 2))
    with pytest.raises(ScopeExceeded):
        list(enumerate_subspaces(GF(3), 5))
    with pytest.raises(ScopeExceeded):
        list(enumerate_subspaces(GF(2), 6))
    # F_2 gets one extra dimension
    assert subspace_count(5, 2) == len(list(enumerate_subspaces(GF(2), 5)))
    wide = EnumerationScope(primes=(2, 3, 5, 7), max_dim=4, max_dim_f2=5)
    assert len(list(enumerate_subspaces(GF(7), 2, wide))) == subspace_count(2, 7)


def test_enumerate_subalgebras_e4_mod2(alg_e4_mod2):
    subs = list(enumerate_subalgebras(alg_e4_mod2))
    assert len(subs) == 21
    for s in subs:
        assert alg_e4_mod2.is_subalgebra(s)


def test_enumerate_ideals_matches_predicate(alg_e4_mod2):
    a = alg_e4_mod2
    ideals = set(enumerate_ideals(a))
    for s in enumerate_subspaces(a.field, a.dim):
        assert (s in ideals) == a.is_ideal(s)


def test_oracle_subinvariance_agrees_with_fast_path(alg_e4_mod2):
    a = alg_e4_mod2
    memo = {}
    for s in enumerate_subalgebras(a):
        fast = is_subinvariant(a, s, refine=False).subinvariant
        slow = oracle_subinvariant(a, s, _memo=memo)
        assert fast == slow, f"disagreement on {s.rows}"


def test_oracle_subinvariance_heisenberg_mod3():
    # nilpotent algebra: every subalgebra is subinvariant
    a = reduce_mod(heisenberg(), 3)
    for s in enumerate_subalgebras(a):
        assert oracle_subinvariant(a, s)


def test_oracle_subinvariance_simple_mod5():
    a = reduce_mod(sl2(), 5)
    for s in enumerate_subalgebras(a):
        expected = s.dim in (0, 3)  # only the trivial ones
        assert oracle_subinvariant(a, s) == expected


def test_oracle_minimal_ideal_above_seeds(alg_e4_mod2):
    a = alg_e4_mod2
    z_line = Subspace.span(a.field, 4, [a.basis_vector(2)])
    got = oracle_minimal_ideal_above(a, z_line)
    assert got == Subspace.span(a.field, 4, [a.basis_vector(0), a.basis_vector(2)])
    assert a.is_ideal(got)


def test_oracle_rad_nilrad_e4_mod2(alg_e4_mod2):
    rad, nil = oracle_rad_nilrad(alg_e4_mod2)
    assert rad.dim == 4  # reduction of a solvable algebra stays solvable
    assert nil == Subspace.span(
        alg_e4_mod2.field,
        4,
        [alg_e4_mod2.basis_vector(i) for i in range(3)],
    )


def test_oracle_rad_nilrad_simple():
    rad, nil = oracle_rad_nilrad(reduce_mod(sl2(), 5))
    assert rad.is_zero()
    assert nil.is_zero()


def test_engel_oracle():
    assert oracle_all_left_ops_nilpotent(reduce_mod(heisenberg(), 2))
    assert not oracle_all_left_ops_nilpotent(reduce_mod(e4(), 2))
    # Engel agrees with nilpotency on these examples
    h = reduce_mod(heisenberg(), 3)
    assert is_nilpotent(h, h.full_space()) == oracle_all_left_ops_nilpotent(h)


def test_oracle_needs_prime_field():
    with pytest.raises(UnsupportedField):
        list(enumerate_subspaces(e4().field, 4))


def test_abelian_every_subspace_is_an_ideal():
    a = reduce_mod(abelian(3), 3)
    assert len(list(enumerate_ideals(a))) == subspace_count(3, 3)
    for s in enumerate_subalgebras(a):
        assert oracle_subinvariant(a, s)
