from hypothesis import given

import oracles as O
from conftest import instances
from gammasg import fixtures, green


def _names(S, idx):
    return [S.element_label(e) for e in idx]


def test_table2_classes():
    S = fixtures.table2()
    a, d = S.element_index("a"), S.element_index("d")
    assert green.l_related(S, a, d) and green.r_related(S, a, d)
    gs = green.green_structure(S)
    assert [_names(S, c) for c in gs.classes("D")] == [["a", "d"], ["b"], ["c"]]
    assert _names(S, green.idempotents(S)) == ["a"]
    assert _names(S, green.primitive_idempotents(S)) == ["a"]
    # b and c are not regular: b [alpha x beta] b only reaches {a, d}
    assert _names(S, green.regular_elements(S)) == ["a", "d"]
    assert green.is_regular_class_consistent(S)


def test_units_with_zero():
    S = fixtures.units_with_zero()
    gs = green.green_structure(S)
    assert gs.d_count == 2
    assert _names(S, gs.classes("D")[0]) == ["1", "i", "-1", "-i"]
    assert _names(S, green.primitive_idempotents(S)) == ["-i"]
    assert len(green.regular_elements(S)) == S.n


def test_nilpotent():
    S = fixtures.nilpotent3()
    a, b = S.element_index("a"), S.element_index("b")
    assert not green.d_related(S, a, b)
    assert _names(S, green.regular_elements(S)) == ["0"]


def test_egg_box_brandt():
    S = fixtures.brandt2()
    gs = green.green_structure(S)
    d = int(gs.d_class_of[S.element_index("11")])
    box = gs.egg_box(d)
    assert len(box) == 2 and all(len(row) == 2 for row in box)
    assert all(len(cell) == 1 for row in box for cell in row)


def test_order_can_fail_antisymmetry():
    # Gamma = all of {1, i, -1, -i}: every pair of idempotents is comparable both ways
    S = fixtures.units(("1", "i", "-1", "-i"))
    order = green.idempotent_order(S)
    assert len(order.idempotents) == 4
    assert not order.is_antisymmetric()
    assert green.primitive_idempotents_strict(S) == []
    assert len(green.primitive_idempotents(S)) == 4


@given(instances(max_n=4))
def test_relations_match_oracle(S):
    gs = green.green_structure(S)
    for a in range(S.n):
        for b in range(S.n):
            assert green.l_related(S, a, b) == (O.l_ext(S, a) == O.l_ext(S, b))
            assert green.r_related(S, a, b) == (O.r_ext(S, a) == O.r_ext(S, b))
            assert green.d_related(S, a, b) == O.d_related(S, a, b)
    # finite case: L and R commute, so L∘R is already an equivalence
    assert gs.lr_equals_rl and gs.d_is_equivalence


@given(instances(max_n=4))
def test_regularity_constant_on_d_classes(S):
    assert green.is_regular_class_consistent(S)


@given(instances(max_n=4))
def test_primitive_coincides_with_strict_when_antisymmetric(S):
    order = green.idempotent_order(S)
    if order.is_antisymmetric():
        assert green.primitive_idempotents(S) == green.primitive_idempotents_strict(S)
