import itertools

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles as O
from gammasg import fixtures
from gammasg.enumeration import (
    CorpusSpec,
    Exhaustive,
    Random,
    Structured,
    associative_tables,
    build_corpus,
    canonical_form,
    enumerate_exhaustive,
    exhaustive_count,
    from_semigroup,
    iso_reduce,
    modular_mult,
    parse_corpus_spec,
    random_instance,
    structured_families,
)
from gammasg.errors import (
    ExhaustedTries,
    NotAssociativeBinary,
    TooLarge,
    TooLargeForCanonicalization,
)

# labelled associative tables per shape; (2,1) and (3,1) are the
# labelled semigroup counts of orders 2 and 3
COUNTS = {(1, 1): 1, (1, 3): 1, (2, 1): 8, (2, 2): 14, (2, 3): 26, (3, 1): 113}


@pytest.mark.parametrize("shape,count", sorted(COUNTS.items()))
def test_exhaustive_counts(shape, count):
    assert exhaustive_count(*shape) == count


@pytest.mark.parametrize("shape", [(2, 1), (2, 2)])
def test_exhaustive_matches_oracle_scan(shape):
    n, m = shape
    want = []
    for cells in itertools.product(range(n), repeat=n * m * n):
        t = np.array(cells).reshape(n, m, n).tolist()
        if O.is_associative(t, n, m):
            want.append(list(cells))
    assert associative_tables(n, m).reshape(len(want), -1).tolist() == want


def test_exhaustive_respects_cap():
    with pytest.raises(TooLarge):
        exhaustive_count(3, 2)
    with pytest.raises(TooLarge):
        CorpusSpec(Exhaustive(), n_range=(3, 3), m_range=(2, 2))


def _oracle_canon(S):
    best = None
    for p in itertools.permutations(range(S.n)):
        inv = [0] * S.n
        for i, x in enumerate(p):
            inv[x] = i
        for q in itertools.permutations(range(S.m)):
            qi = [0] * S.m
            for i, x in enumerate(q):
                qi[x] = i
            flat = tuple(p[S.triple_product(inv[a], qi[g], inv[b])]
                         for a in range(S.n) for g in range(S.m) for b in range(S.n))
            if best is None or flat < best:
                best = flat
    return best


@pytest.mark.parametrize("shape,classes", [((2, 1), 5), ((3, 1), 24), ((2, 2), None)])
def test_iso_reduce(shape, classes):
    items = list(enumerate_exhaustive(*shape))
    reduced = list(iso_reduce(items))
    oracle = {_oracle_canon(S) for S in items}
    assert len(reduced) == len(oracle)
    if classes is not None:
        assert len(reduced) == classes


def test_canonical_form_is_invariant():
    S = fixtures.units_simple()
    perm = [2, 0, 3, 1]
    inv = np.argsort(perm)
    t = np.empty_like(S.table)
    for a in range(4):
        for g in range(2):
            for b in range(4):
                t[a, 1 - g, b] = perm[S.table[inv[a], g, inv[b]]]
    T = type(S)(4, 2, t)
    assert canonical_form(S) == canonical_form(T)
    with pytest.raises(TooLargeForCanonicalization):
        canonical_form(fixtures.z6())


@given(st.integers(0, 2**32 - 1), st.integers(1, 3), st.integers(1, 2))
def test_random_is_reproducible(seed, n, m):
    try:
        S = random_instance(n, m, seed, max_tries=2048)
    except ExhaustedTries:
        return
    assert S == random_instance(n, m, seed, max_tries=2048)
    assert O.is_associative(O.table(S), n, m)


def test_random_trivial_and_exhausted():
    assert random_instance(1, 2, 99).table.tolist() == [[[0], [0]]]
    with pytest.raises(ExhaustedTries):
        random_instance(5, 2, 0, max_tries=1)


def test_from_semigroup():
    S = from_semigroup(modular_mult(6), [1], zero=0)
    assert S.n == 6 and S.m == 1 and S.is_commutative()
    bad = np.array([[1, 0], [0, 0]])
    with pytest.raises(NotAssociativeBinary):
        from_semigroup(bad, [0])


def test_structured_families_are_valid_and_labelled():
    labels = []
    for label, S in structured_families(max_n=6):
        assert S.associative and S.n <= 7
        labels.append(label)
    assert len(labels) == len(set(labels))
    assert "nilpotent(n=3,m=1)" in labels
    N = dict(structured_families(max_n=3))["nilpotent(n=3,m=1)"]
    assert N == fixtures.nilpotent3()


def test_corpus_is_deterministic():
    spec = [CorpusSpec(Exhaustive(), (2, 2), (1, 2)), CorpusSpec(Random(5, 20), (2, 3), (1, 2)),
            CorpusSpec(Structured(("nilpotent",)))]
    a, b = build_corpus(spec), build_corpus(spec)
    assert [(x.seq, x.family, x.instance) for x in a] == [(x.seq, x.family, x.instance) for x in b]
    assert [x.seq for x in a] == list(range(len(a)))


def test_adjoin_zero_and_iso_reduce_specs():
    plain = build_corpus(CorpusSpec(Exhaustive(), (2, 2), (1, 1), iso_reduce=True))
    assert len(plain) == 5
    zeroed = build_corpus(CorpusSpec(Exhaustive(), (2, 2), (1, 1), adjoin_zero=True))
    assert all(x.instance.zero == 2 and x.family.endswith("+0") for x in zeroed)


def test_parse_corpus_spec():
    specs = parse_corpus_spec("exhaustive:2:1-2, structured:nilpotent, random:7:10:2-3:1")
    assert [type(s.strategy) for s in specs] == [Exhaustive, Structured, Random]
    assert specs[0].n_range == (2, 2) and specs[0].m_range == (1, 2)
    assert specs[2].strategy == Random(7, 10)
    assert len(parse_corpus_spec("standard")) == 4
    for bad in ("", "bogus", "random:1"):
        with pytest.raises(ValueError):
            parse_corpus_spec(bad)
