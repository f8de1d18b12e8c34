"""Radical, nilradical, Cartan subalgebras and the structural check battery.

Expected subspaces here were frozen after cross-checking against exhaustive
ideal enumeration over small prime fields (see test_oracle / the acceptance
suite for the live comparison)."""

import pytest

from leibnizalg import (
    GF,
    Subspace,
    cartan_subalgebra,
    check_structure,
    is_nilpotent,
    is_solvable,
    nilradical,
    radical,
)
from leibnizalg.corpus import abelian, aff1, cyclic, e4, heisenberg, sl2
from leibnizalg.errors import (
    CartanSearchExhausted,
    InvalidParams,
    UnsupportedCharacteristic,
)
from leibnizalg.algebra import direct_sum


def span_of(a, indices):
    return Subspace.span(a.field, a.dim, [a.basis_vector(i) for i in indices])


def test_e4_radical_is_everything(alg_e4):
    # e4 is solvable, so the radical is the whole algebra
    a = alg_e4
    r = radical(a)
    assert r == a.full_space()


def test_sl2_radical_is_zero(alg_sl2):
    assert radical(sl2()).is_zero()


def test_mixed_sum_radical(alg_sl2, alg_heis):
    s = direct_sum(sl2(), heisenberg())
    r = radical(s)
    assert r == span_of(s, [3, 4, 5])


def test_radical_is_solvable_ideal(alg_e4, alg_aff1):
    for a in (alg_e4, alg_aff1, direct_sum(sl2(), aff1())):
        r = radical(a)
        assert a.is_ideal(r)
        assert is_solvable(a, r)


def test_e4_nilradical(alg_e4):
    a = alg_e4
    n = nilradical(a)
    assert n == span_of(a, [0, 1, 2])
    assert a.is_ideal(n)
    assert is_nilpotent(a, n)


def test_nilradical_of_nilpotent_algebra_is_everything(alg_heis):
    a = alg_heis
    assert nilradical(a) == a.full_space()


def test_nilradical_of_simple_algebra_is_zero():
    assert nilradical(sl2()).is_zero()


def test_aff1_nilradical_is_the_acted_line(alg_aff1):
    a = alg_aff1
    n = nilradical(a)
    assert n.dim == 1
    assert n == span_of(a, [1])


def test_nilradical_contains_mandatory_products(alg_e4):
    # AR + RA must always land inside the nilradical
    a = alg_e4
    r = radical(a)
    n = nilradical(a)
    assert (a.product(a.full_space(), r) + a.product(r, a.full_space())) <= n


def test_cyclic_tail_algebra_radical_vs_nilradical():
    a = cyclic([1, 0, 0])  # solvable, not nilpotent
    assert radical(a) == a.full_space()
    n = nilradical(a)
    assert n.dim < a.dim
    assert is_nilpotent(a, n)


def test_char_p_structure_rejected():
    from leibnizalg.corpus import reduce_mod

    a = reduce_mod(e4(), 5)
    with pytest.raises(UnsupportedCharacteristic):
        radical(a)
    with pytest.raises(UnsupportedCharacteristic):
        nilradical(a)


def test_e4_cartan(alg_e4):
    a = alg_e4
    h = cartan_subalgebra(a)
    assert h == span_of(a, [2, 3])
    assert is_nilpotent(a, h)
    assert a.normalizer(h) == h


def test_sl2_cartan_is_a_line():
    a = sl2()
    h = cartan_subalgebra(a)
    assert h.dim == 1
    assert a.normalizer(h) == h


def test_nilpotent_algebra_is_its_own_cartan(alg_heis):
    a = alg_heis
    assert cartan_subalgebra(a) == a.full_space()


def test_cartan_works_mod_p():
    from leibnizalg.corpus import reduce_mod

    a = reduce_mod(e4(), 5)
    h = cartan_subalgebra(a)
    assert a.is_subalgebra(h)
    assert is_nilpotent(a, h)
    assert a.normalizer(h) == h


def test_cartan_determinism(alg_e4):
    assert cartan_subalgebra(alg_e4, seed=1) == cartan_subalgebra(alg_e4, seed=1)


def test_cartan_search_exhausted_carries_attempts(alg_e4):
    # force failure by allowing a single attempt on a basis vector that
    # does not produce a Cartan subalgebra
    with pytest.raises(CartanSearchExhausted) as exc:
        cartan_subalgebra(e4(), max_attempts=1)
    assert exc.value.attempts == 1
    with pytest.raises(InvalidParams):
        cartan_subalgebra(e4(), max_attempts=0)


def test_check_structure_e4_all_pass(alg_e4):
    rep = check_structure(alg_e4)
    assert rep.solvable and not rep.nilpotent
    assert rep.semisimple is False
    assert rep.all_passed()
    names = {c.name for c in rep.checks}
    assert "limit_plus_cartan_spans" in names
    assert "radical_products_in_nilradical" in names
    assert all(c.status in ("pass", "fail", "skipped") for c in rep.checks)


def test_check_structure_simple(alg_sl2):
    rep = check_structure(sl2())
    assert rep.semisimple is True
    assert not rep.solvable
    assert rep.all_passed()


def test_check_structure_skips_radical_checks_mod_p():
    from leibnizalg.corpus import reduce_mod

    rep = check_structure(reduce_mod(e4(), 3))
    assert rep.semisimple is None
    assert rep.radical is None
    skipped = [c for c in rep.checks if c.status == "skipped"]
    assert skipped  # the char-0 identities must be marked, not silently dropped
    assert rep.all_passed()


def test_check_structure_abelian():
    rep = check_structure(abelian(3))
    assert rep.solvable and rep.nilpotent
    assert rep.nilradical == abelian(3).full_space()
    assert rep.all_passed()
