import itertools

import numpy as np
import pytest
from hypothesis import given

import oracles as O
from conftest import instances
from gammasg import ElementSet, GammaSemigroup, IdempotentMode, RegularMode, fixtures
from gammasg.errors import BadZero, IndexOutOfRange, NotAssociative, ShapeError


def test_trivial_instance():
    S = GammaSemigroup(1, 1, [0])
    assert S.associative
    assert S.find_zero() == 0


def test_table2_products():
    S = fixtures.table2()
    a, c, d = (S.element_index(x) for x in "acd")
    assert S.triple_product(a, 0, c) == d
    assert S.subset_product(S.universe, None, S.elements("a")) == S.elements("ad")


def test_table1_products():
    S = fixtures.table1()
    f, g, h = (S.element_index(x) for x in "fgh")
    assert S.triple_product(f, 0, g) == h
    assert S.subset_product(S.universe, None, S.elements("h")) == S.elements("eh")


def test_table1_is_not_associative():
    S = fixtures.table1()
    assert not S.associative
    with pytest.raises(NotAssociative):
        GammaSemigroup(5, 1, S.table)


@pytest.mark.parametrize("cells", list(itertools.product(range(2), repeat=4)))
def test_associativity_scan_matches_oracle_n2(cells):
    t = [[[cells[0], cells[1]]], [[cells[2], cells[3]]]]
    if O.is_associative(t, 2, 1):
        GammaSemigroup(2, 1, cells)
        return
    with pytest.raises(NotAssociative) as info:
        GammaSemigroup(2, 1, cells)
    a, al, b, be, c = info.value.witness
    assert t[t[a][al][b]][be][c] != t[a][al][t[b][be][c]]


def test_witness_is_lexicographically_first():
    # count of failing 2x1 tables is 16 - 8
    failing = [c for c in itertools.product(range(2), repeat=4)
               if not O.is_associative([[[c[0], c[1]]], [[c[2], c[3]]]], 2, 1)]
    assert len(failing) == 8
    cells = failing[0]
    t = [[[cells[0], cells[1]]], [[cells[2], cells[3]]]]
    first = next(w for w in itertools.product(range(2), range(1), range(2), range(1), range(2))
                 if t[t[w[0]][w[1]][w[2]]][w[3]][w[4]] != t[w[0]][w[1]][t[w[2]][w[3]][w[4]]])
    with pytest.raises(NotAssociative) as info:
        GammaSemigroup(2, 1, cells)
    assert info.value.witness == first


def test_validation_errors():
    with pytest.raises(ShapeError):
        GammaSemigroup(2, 1, [0, 0, 0])
    with pytest.raises(IndexOutOfRange) as info:
        GammaSemigroup(2, 1, [0, 0, 5, 0])
    assert info.value.position == 2
    with pytest.raises(BadZero):
        GammaSemigroup(2, 1, [0, 0, 0, 1], zero=1)
    with pytest.raises(ShapeError):
        GammaSemigroup(0, 1, [])


def test_adjoin_zero():
    S = fixtures.table2().adjoin_zero()
    assert S.n == 5 and S.zero == 4 and S.element_label(4) == "0"
    assert S.is_zero_element(4)
    from gammasg.ideals import IdealKind, is_ideal

    assert is_ideal(S, S.elements(["a", "d", "0"]), IdealKind.TWO_SIDED)
    T = GammaSemigroup.trivial().adjoin_zero()
    assert T.n == 2 and T.is_zero_element(1)


def test_zero_detection():
    assert fixtures.table1().is_zero_element(0)
    assert not fixtures.table2().is_zero_element(0)
    assert fixtures.table2().find_zero() is None


def test_idempotent_and_regular_modes():
    U = fixtures.units(("i",))
    mi = U.element_index("-i")
    assert U.is_idempotent(mi)
    N = fixtures.nilpotent3()
    a = N.element_index("a")
    assert not N.is_regular(a, RegularMode.STANDARD)
    assert not N.is_regular(a, RegularMode.LITERAL)
    two = fixtures.units(("i", "-i"))
    # [e g e] = e holds for some gamma but not all
    i = two.element_index("i")
    assert two.is_idempotent(i, IdempotentMode.EXISTS)
    assert not two.is_idempotent(i, IdempotentMode.FORALL)


def test_element_set_algebra():
    A = ElementSet.of(5, [0, 2])
    B = ElementSet.of(5, [2, 3])
    assert (A | B).indices() == [0, 2, 3]
    assert (A & B).indices() == [2]
    assert (A - B).indices() == [0]
    assert A & B <= A and not A <= B
    assert 2 in A and 1 not in A and len(A | B) == 3
    assert ElementSet.from_members(A.members) == A
    with pytest.raises(ValueError):
        A | ElementSet.of(4, [0])


@given(instances())
def test_subset_product_matches_oracle(S):
    t = O.table(S)
    rng = np.random.default_rng(S.n * 7 + S.m)
    for _ in range(5):
        A = frozenset(np.flatnonzero(rng.random(S.n) < 0.5).tolist())
        B = frozenset(np.flatnonzero(rng.random(S.n) < 0.5).tolist())
        G = [g for g in range(S.m) if rng.random() < 0.7] or [0]
        got = S.subset_product(ElementSet.of(S.n, A), G, ElementSet.of(S.n, B))
        assert set(got) == O.product(t, A, B, G)


@given(instances())
def test_regularity_matches_oracle(S):
    for e in range(S.n):
        assert S.is_regular(e) == O.is_regular(S, e)
        assert S.is_idempotent(e) == O.is_idempotent(S, e)


@given(instances())
def test_replace_and_equality(S):
    assert S.replace() == S
    assert hash(S.replace()) == hash(S)
