import pytest
from hypothesis import given

import oracles as O
from conftest import instances
from gammasg import ElementSet, fixtures
from gammasg.errors import CatalogTooLarge, EmptyGenerator, NoZero, NotClosed
from gammasg.ideals import (
    KINDS,
    IdealKind,
    all_ideals,
    brute_force_ideals,
    generated_ideal,
    is_0_minimal_ideal,
    is_ideal,
    least_ideal,
    lift_mask,
    principal_ideal,
    restrict_to,
    zero_minimal_ideals,
)

TWO, LEFT, RIGHT = IdealKind.TWO_SIDED, IdealKind.LEFT, IdealKind.RIGHT


def _labels(S, catalog):
    return [S.format_set(B) for B in catalog]


def test_table1_catalog():
    S = fixtures.table1()
    expected = ["{e}", "{e,h}", "{e,f,h}", "{e,g,h}", "{e,f,g,h}", "{e,f,g,h,i}"]
    assert _labels(S, all_ideals(S, TWO)) == expected
    assert _labels(S, brute_force_ideals(S, TWO)) == expected
    # left ideals pick up {e,f} as well
    assert "{e,f}" in _labels(S, all_ideals(S, LEFT))


def test_table2_catalog_and_least():
    S = fixtures.table2()
    assert _labels(S, all_ideals(S, TWO)) == ["{a,d}", "{a,b,d}", "{a,c,d}", "{a,b,c,d}"]
    assert S.format_set(least_ideal(S, TWO).members) == "{a,d}"
    assert least_ideal(S, TWO).is_ideal
    assert generated_ideal(S, S.elements("a"), LEFT) == S.elements("ad")
    assert principal_ideal(S, S.element_index("a"), TWO) == S.elements("ad")
    assert not is_ideal(S, S.elements("a"), TWO)
    assert is_ideal(S, S.elements("ad"), LEFT)


def test_principal_examples():
    T1 = fixtures.table1()
    assert principal_ideal(T1, T1.element_index("i"), TWO) == T1.universe
    Z = fixtures.z6()
    assert principal_ideal(Z, 0, TWO) == Z.zero_set()


def test_restrict_to():
    S = fixtures.table2()
    R = restrict_to(S, S.elements("ad"))
    assert R.n == 2 and R.element_names == ("a", "d")
    # isomorphic to the group of order 2: a is the identity
    assert R.table[:, 0, :].tolist() == [[0, 1], [1, 0]]
    assert lift_mask(R, 0b10) == 1 << S.element_index("d")
    assert restrict_to(S, S.universe).table.tolist() == S.table.tolist()
    T1 = fixtures.table1()
    with pytest.raises(NotClosed):
        restrict_to(T1, T1.elements("f"))


def test_zero_minimal():
    U = fixtures.units_with_zero()
    assert zero_minimal_ideals(U, LEFT) == [U.universe]
    B = fixtures.brandt2()
    assert _labels(B, zero_minimal_ideals(B, LEFT)) == ["{0,11,21}", "{0,12,22}"]
    assert _labels(B, zero_minimal_ideals(B, RIGHT)) == ["{0,11,12}", "{0,21,22}"]
    with pytest.raises(NoZero):
        is_0_minimal_ideal(fixtures.table2(), fixtures.table2().universe, LEFT)


def test_errors():
    S = fixtures.table2()
    with pytest.raises(EmptyGenerator):
        generated_ideal(S, ElementSet.empty(S.n), TWO)
    from gammasg.enumeration import zero_multiplication

    with pytest.raises(CatalogTooLarge):
        all_ideals(zero_multiplication(12), TWO, cap=100)


@given(instances(max_n=5))
def test_union_closure_matches_oracle(S):
    for kind in KINDS:
        want = O.ideals(S, kind.value)
        assert {frozenset(B) for B in all_ideals(S, kind)} == want
        assert {frozenset(B) for B in brute_force_ideals(S, kind)} == want


@given(instances(max_n=5))
def test_generated_ideal_is_least_containing(S):
    for kind in KINDS:
        ids = O.ideals(S, kind.value)
        for a in range(S.n):
            got = frozenset(principal_ideal(S, a, kind))
            assert got in ids
            assert all(got <= B for B in ids if a in B)


@given(instances(max_n=5, with_zero=True))
def test_zero_minimal_matches_oracle(S):
    for kind in KINDS:
        assert {frozenset(B) for B in zero_minimal_ideals(S, kind)} == O.zero_minimal(S, kind.value)


def test_catalog_order_is_deterministic():
    S = fixtures.z6_two_gammas()
    cat = all_ideals(S, TWO)
    keys = [B.sort_key() for B in cat]
    assert keys == sorted(keys)
