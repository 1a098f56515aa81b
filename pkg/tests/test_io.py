import pytest
from hypothesis import given

from conftest import instances
from gammasg import GammaSemigroup, fixtures, io
from gammasg.enumeration import CorpusSpec, Exhaustive, Structured, build_corpus
from gammasg.errors import BadZero, IndexOutOfRange, NotAssociative, TableSyntaxError

TABLE2 = """gamma-semigroup v1
T 4
G 1
names a b c d
gnames alpha
0 0 3 3
0 0 3 3
3 3 0 0
3 3 0 0
"""


def test_table2_text_is_canonical():
    assert io.serialize(fixtures.table2()) == TABLE2
    assert io.parse(TABLE2) == fixtures.table2()


def test_trivial_is_four_lines():
    assert io.serialize(GammaSemigroup.trivial()) == "gamma-semigroup v1\nT 1\nG 1\n0\n"


def test_comments_and_blank_lines():
    text = "# a comment\n\ngamma-semigroup v1\nT 1\n# inline\nG 1\n\n0\n"
    assert io.parse(text) == GammaSemigroup.trivial()


@pytest.mark.parametrize(
    "text,line",
    [
        ("", 1),
        ("nonsense\n", 1),
        ("gamma-semigroup v1\nT x\nG 1\n0\n", 2),
        ("gamma-semigroup v1\nT 1\n0\n", 3),
        ("gamma-semigroup v1\nT 2\nG 1\n0 0\n", 5),
        ("gamma-semigroup v1\nT 2\nG 1\n0 0\n0\n", 5),
        ("gamma-semigroup v1\nT 2\nG 1\nnames a\n0 0\n0 0\n", 4),
    ],
)
def test_syntax_errors(text, line):
    with pytest.raises(TableSyntaxError) as info:
        io.parse(text)
    assert info.value.line == line


def test_core_errors_carry_lines():
    with pytest.raises(IndexOutOfRange) as info:
        io.parse("gamma-semigroup v1\nT 4\nG 1\n0 0 0 0\n0 0 0 0\n0 9 0 0\n0 0 0 0\n")
    assert info.value.line == 6
    with pytest.raises(BadZero) as info:
        io.parse("gamma-semigroup v1\nT 2\nG 1\nzero 1\n0 0\n0 1\n")
    assert info.value.line == 4
    with pytest.raises(NotAssociative):
        io.parse(io.serialize(fixtures.table1()))


def test_non_associative_round_trip_when_lenient():
    T1 = fixtures.table1()
    assert io.parse(io.serialize(T1), check_associativity=False) == T1


@pytest.mark.parametrize("name", sorted(fixtures.all_fixtures()))
def test_fixture_round_trip(name):
    S = fixtures.all_fixtures()[name]
    text = io.serialize(S)
    assert io.parse(text, check_associativity=S.associative) == S
    assert io.serialize(io.parse(text, check_associativity=S.associative)) == text
    assert "\r" not in text and not any(line.endswith(" ") for line in text.split("\n"))


@given(instances(max_n=5))
def test_round_trip_property(S):
    assert io.parse(io.serialize(S)) == S


def test_labels_with_spaces_are_rejected():
    S = GammaSemigroup(1, 1, [0], element_names=["a b"])
    with pytest.raises(ValueError):
        io.serialize(S)


def test_corpus_manifest_round_trip(tmp_path):
    corpus = build_corpus([CorpusSpec(Exhaustive(), (2, 2), (1, 1)), CorpusSpec(Structured(("nilpotent",)))])
    manifest = io.write_corpus(corpus, tmp_path)
    back = io.read_corpus(manifest)
    assert [(x.seq, x.strategy, x.family, x.seed, x.instance) for x in back] == [
        (x.seq, x.strategy, x.family, x.seed, x.instance) for x in corpus
    ]
    assert io.read_corpus(tmp_path)[0].instance == corpus[0].instance
