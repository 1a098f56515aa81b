import pytest
from hypothesis import given

import oracles as O
from conftest import instances
from gammasg import fixtures
from gammasg.errors import NotAChain, NotAnIdeal, NotCommutative, NotPrime
from gammasg.ideals import IdealKind, all_ideals
from gammasg.prime import (
    all_prime_ideals,
    chain_intersection_primes,
    chain_union_primes,
    intersection_primes_unchecked,
    is_prime_by_elements,
    is_prime_commutative,
    is_prime_ideal,
    prime_restricted,
    replay_witness,
    union_primes_unchecked,
)


def _labels(S, sets):
    return [S.format_set(Q) for Q in sets]


def test_z6_primes():
    S = fixtures.z6()
    assert _labels(S, all_prime_ideals(S)) == ["{0,3}", "{0,2,4}", "{0,2,3,4}", "{0,1,2,3,4,5}"]
    v = is_prime_ideal(S, S.zero_set())
    assert not v.is_prime
    E, F = v.witness
    assert replay_witness(S, S.zero_set(), v)
    assert {S.format_set(E), S.format_set(F)} == {"{0,3}", "{0,2,4}"}


def test_z6_two_gammas_union_counterexample():
    S = fixtures.z6_two_gammas()
    P, Q = S.elements(["0", "3"]), S.elements(["0", "2", "4"])
    assert is_prime_ideal(S, P) and is_prime_ideal(S, Q)
    assert not (P <= Q or Q <= P)
    union = union_primes_unchecked(S, [P, Q])
    assert not union.is_prime
    assert replay_witness(S, P | Q, union)
    assert not intersection_primes_unchecked(S, [P, Q]).is_prime
    with pytest.raises(NotAChain):
        chain_union_primes(S, [P, Q])


def test_chain_operations():
    S = fixtures.z6()
    chain = [S.elements(["0", "3"]), S.elements(["0", "2", "3", "4"]), S.universe]
    assert chain_union_primes(S, chain).is_prime
    assert chain_intersection_primes(S, chain).is_prime
    with pytest.raises(NotPrime):
        chain_union_primes(S, [S.zero_set(), S.universe])


def test_preconditions():
    S = fixtures.z6()
    with pytest.raises(NotAnIdeal):
        is_prime_ideal(S, S.elements(["1"]))
    with pytest.raises(NotCommutative):
        is_prime_commutative(fixtures.brandt2(), fixtures.brandt2().universe)


def test_prime_restricted_witness_uses_parent_indices():
    S = fixtures.z6()
    v = prime_restricted(S, S.elements(["0", "2", "3", "4"]), S.elements(["0", "3"]))
    assert v.is_prime
    B = fixtures.brandt2()
    assert prime_restricted(B, B.universe, B.zero_set()).is_prime


@given(instances(max_n=5))
def test_primes_match_oracle(S):
    assert {frozenset(Q) for Q in all_prime_ideals(S)} == O.primes(S)


@given(instances(max_n=5))
def test_element_characterisation_agrees(S):
    for Q in all_ideals(S, IdealKind.TWO_SIDED):
        v = is_prime_ideal(S, Q)
        assert v.is_prime == is_prime_by_elements(S, Q).is_prime
        assert replay_witness(S, Q, v)
        if S.is_commutative():
            assert v.is_prime == is_prime_commutative(S, Q).is_prime


@given(instances(max_n=5))
def test_restriction_preserves_primality(S):
    two = all_ideals(S, IdealKind.TWO_SIDED)
    for H in two:
        for Q in all_prime_ideals(S):
            assert prime_restricted(S, H, Q).is_prime
