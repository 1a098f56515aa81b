import pytest
from hypothesis import given

import oracles as O
from conftest import instances
from gammasg import fixtures, green
from gammasg.classify import (
    ROUTES,
    classify,
    d_class_of_nonzero_is_single,
    is_0_simple,
    is_completely_0_simple,
    is_gamma_group_with_zero,
    is_left_simple,
    is_simple,
    route_verdicts,
)
from gammasg.enumeration import cyclic_group, from_semigroup, nilpotent, with_zero_binary
from gammasg.errors import NoZero
from gammasg.ideals import restrict_to


def test_table2():
    S = fixtures.table2()
    assert not is_simple(S) and not is_left_simple(S)
    assert is_simple(restrict_to(S, S.elements("ad")))
    assert not is_0_simple(S.adjoin_zero())


def test_units_simple_both_routes():
    S = fixtures.units_simple()
    for name in ("left_simple", "right_simple", "simple"):
        assert route_verdicts(S, name) == (True, True)


def test_units_with_zero_completely_0_simple():
    S = fixtures.units_with_zero()
    assert route_verdicts(S, "zero_simple") == (True, True)
    assert route_verdicts(S, "completely_zero_simple") == (True, True)
    assert is_completely_0_simple(S)
    assert d_class_of_nonzero_is_single(S)
    assert is_gamma_group_with_zero(S, S.universe)


def test_group_with_zero_examples():
    Z2 = from_semigroup(with_zero_binary(cyclic_group(2)), [0], zero=2)
    assert is_gamma_group_with_zero(Z2, Z2.universe)
    N = nilpotent(3, 1)
    assert not is_gamma_group_with_zero(N, N.universe)
    assert not is_gamma_group_with_zero(N, N.zero_set())
    with pytest.raises(NoZero):
        is_gamma_group_with_zero(fixtures.table2(), fixtures.table2().universe)


def test_classify_reports_na_without_zero():
    c = classify(fixtures.table2())
    assert c["zero_simple"] is None and c["simple"] is False
    assert c.flags["zero_simple"].route == "n/a"
    assert not c.disagreements


@given(instances(max_n=4))
def test_routes_agree(S):
    for name, (_, _, needs_zero) in ROUTES.items():
        if needs_zero and S.zero is None:
            continue
        a, b = route_verdicts(S, name)
        assert a == b, name


@given(instances(max_n=4))
def test_simple_matches_oracle(S):
    assert route_verdicts(S, "left_simple")[0] == O.simple(S, "left")
    assert route_verdicts(S, "right_simple")[0] == O.simple(S, "right")
    assert route_verdicts(S, "simple")[0] == O.simple(S, "two-sided")


@given(instances(max_n=4, with_zero=True))
def test_zero_simple_matches_oracle(S):
    assert route_verdicts(S, "left_0_simple")[0] == O.zero_simple(S, "left")
    assert route_verdicts(S, "right_0_simple")[0] == O.zero_simple(S, "right")
    assert route_verdicts(S, "zero_simple")[0] == O.zero_simple(S, "two-sided")


@given(instances(max_n=4, with_zero=True))
def test_completely_0_simple_structure(S):
    if not is_completely_0_simple(S):
        return
    assert d_class_of_nonzero_is_single(S)
    assert all(S.is_regular(e) for e in range(S.n))
    assert green.primitive_idempotents(S)


def test_group_with_zero_rejects_non_closed():
    from gammasg.classify import gamma_group_with_zero_mask
    from gammasg.errors import NotClosed

    N = fixtures.nilpotent3()
    sub = N.elements(["0", "a"])  # [a g a] = b escapes
    with pytest.raises(NotClosed):
        is_gamma_group_with_zero(N, sub)
    assert not gamma_group_with_zero_mask(N, sub.mask)
