"""Subinvariance decision, witness chains, joins and closures."""

import pytest

from leibnizalg import (
    NormalSeries,
    Subspace,
    Vector,
    element_closure,
    is_subinvariant,
    join_subinvariant,
    subinvariant_core,
    two_sided_power,
)
from leibnizalg.corpus import char_p_counterexample, char_p_parts, e4, reduce_mod, sl2
from leibnizalg.errors import (
    DimTooLargeForEnumeration,
    NotASubalgebra,
    NotSubinvariantInput,
    UnsupportedField,
)


def span_of(a, indices):
    return Subspace.span(a.field, a.dim, [a.basis_vector(i) for i in indices])


def test_z_line_is_subinvariant_with_length_4_chain(alg_e4):
    a = alg_e4
    res = is_subinvariant(a, span_of(a, [2]))
    assert res.subinvariant
    chain = res.chain
    assert [t.dim for t in chain.terms] == [4, 3, 2, 1]
    assert chain.terms[0] == a.full_space()
    assert chain.terms[1] == span_of(a, [0, 1, 2])
    assert chain.terms[2] == span_of(a, [0, 2])
    assert chain.terms[3] == span_of(a, [2])
    assert chain.is_valid(a)


def test_unrefined_chain_is_the_fast_descent(alg_e4):
    a = alg_e4
    res = is_subinvariant(a, span_of(a, [2]), refine=False)
    assert res.subinvariant
    assert [t.dim for t in res.chain.terms] == [4, 2, 1]
    assert res.chain.is_valid(a)


def test_t_line_is_not_subinvariant(alg_e4):
    a = alg_e4
    res = is_subinvariant(a, span_of(a, [3]))
    assert not res.subinvariant
    assert res.chain is None
    # the descent stalls on an ideal strictly above the line
    assert res.obstruction is not None
    assert span_of(a, [3]) <= res.obstruction
    assert res.obstruction.dim > 1


def test_cartan_part_not_subinvariant(alg_e4):
    a = alg_e4
    res = is_subinvariant(a, span_of(a, [2, 3]))
    assert not res.subinvariant
    assert res.obstruction == a.full_space()


def test_every_ideal_is_subinvariant(alg_e4):
    a = alg_e4
    for idx in ([0], [0, 1], [0, 1, 2], [0, 2], [0, 1, 2, 3]):
        s = span_of(a, idx)
        assert a.is_ideal(s) or not a.is_ideal(s)
        if a.is_ideal(s):
            assert is_subinvariant(a, s).subinvariant


def test_subinvariance_needs_a_subalgebra(alg_e4):
    a = alg_e4
    with pytest.raises(NotASubalgebra):
        is_subinvariant(a, span_of(a, [1, 2]))


def test_normal_series_validity_detector(alg_e4):
    a = alg_e4
    good = NormalSeries((a.full_space(), span_of(a, [0, 1, 2]), span_of(a, [0, 2])))
    assert good.is_valid(a)
    not_descending = NormalSeries((a.full_space(), a.full_space()))
    assert not not_descending.is_valid(a)
    not_ideal_step = NormalSeries((a.full_space(), span_of(a, [2, 3])))
    assert not not_ideal_step.is_valid(a)
    missing_top = NormalSeries((span_of(a, [0, 1, 2]), span_of(a, [0, 2])))
    assert not missing_top.is_valid(a)


def test_simple_algebra_has_no_proper_subinvariant_subalgebras(alg_sl2):
    a = sl2()
    for idx in ([0], [1], [2], [0, 2]):
        s = Subspace.span(a.field, 3, [a.basis_vector(i) for i in idx])
        if a.is_subalgebra(s) and s.dim not in (0, 3):
            assert not is_subinvariant(a, s).subinvariant


def test_join_of_subinvariant_lines(alg_e4):
    a = alg_e4
    j = join_subinvariant(a, span_of(a, [0]), span_of(a, [2]))
    assert j == span_of(a, [0, 2])
    assert is_subinvariant(a, j).subinvariant


def test_join_rejects_non_subinvariant_input(alg_e4):
    a = alg_e4
    with pytest.raises(NotSubinvariantInput):
        join_subinvariant(a, span_of(a, [3]), span_of(a, [0]))
    with pytest.raises(NotSubinvariantInput):
        join_subinvariant(a, span_of(a, [0]), span_of(a, [2, 3]))


def test_element_closure_basic(alg_e4):
    a = alg_e4
    b = span_of(a, [2])
    c = a.basis_vector(1)  # y: z*y = x
    closed = element_closure(a, c, b)
    assert b <= closed
    assert a.is_subalgebra(closed)
    # stability under both multiplications by c
    cspan = Subspace.span(a.field, 4, [c])
    assert a.product(cspan, closed) <= closed
    assert a.product(closed, cspan) <= closed
    assert closed == span_of(a, [0, 2])


def test_element_closure_contains_iterated_wrapping(alg_e4):
    # the closure absorbs every two-sided power of the element span over b
    a = alg_e4
    b = span_of(a, [0])
    c = a.basis_vector(3)
    closed = element_closure(a, c, b)
    cspan = Subspace.span(a.field, 4, [c])
    for n in range(1, 5):
        assert two_sided_power(a, cspan, b, n) <= closed


def test_element_closure_preserves_subinvariance(alg_e4):
    a = alg_e4
    b = span_of(a, [2])
    for i in range(4):
        closed = element_closure(a, a.basis_vector(i), b)
        assert is_subinvariant(a, closed).subinvariant


def test_subinvariant_core_mod5(alg_e4_mod5):
    a = alg_e4_mod5
    b = span_of(a, [2, 3])
    core = subinvariant_core(a, b)
    assert core == span_of(a, [2])
    assert a.is_ideal(core, b)
    assert not a.is_ideal(core)  # ideal of b, not of the whole algebra


def test_subinvariant_core_of_ideal_is_itself(alg_e4_mod5):
    a = alg_e4_mod5
    b = span_of(a, [0, 1, 2])
    assert subinvariant_core(a, b) == b


def test_subinvariant_core_requires_prime_field(alg_e4):
    with pytest.raises(UnsupportedField):
        subinvariant_core(alg_e4, alg_e4.full_space())


def test_subinvariant_core_dimension_cap():
    a = char_p_counterexample(3)
    m = char_p_parts(a, 3)["tensor_part"]
    with pytest.raises(DimTooLargeForEnumeration):
        subinvariant_core(a, m)


def test_char_p_subinvariant_with_long_chain():
    # dim 10 example over F_3: the positive-degree part sits two ideals deep
    a = char_p_counterexample(3)
    parts = char_p_parts(a, 3)
    m, ln = parts["tensor_part"], parts["positive_degree_part"]
    assert a.dim == 10 and m.dim == 9 and ln.dim == 6
    res = is_subinvariant(a, ln)
    assert res.subinvariant
    dims = [t.dim for t in res.chain.terms]
    assert dims == [10, 9, 6]
    assert res.chain.is_valid(a)


def test_e4_mod2_matches_rational_answers(alg_e4_mod2):
    a = alg_e4_mod2
    assert is_subinvariant(a, span_of(a, [2])).subinvariant
    assert not is_subinvariant(a, span_of(a, [3])).subinvariant
