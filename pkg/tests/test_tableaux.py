import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from crystalsatake.cartan import build_root_datum, dominant_weights, weyl_dim
from crystalsatake.crystal import component_isomorphism, highest_weight_elements, is_crystal_morphism
from crystalsatake.context import Context
from crystalsatake.tableaux import (
    lr_oracle,
    partition_from_weight,
    reading_word,
    semistandard_tableaux,
    ssyt_crystal,
    ssyt_crystal_of_shape,
    tableau_e,
    tableau_f,
    weight_from_partition,
    yamanouchi,
)

A2 = build_root_datum("A", 2)


def test_partition_examples():
    assert partition_from_weight((1, 1), 2) == (2, 1, 0)
    assert partition_from_weight((4,), 1) == (4, 0)
    assert partition_from_weight((0, 0, 0), 3) == ()
    assert weight_from_partition((2, 1, 0), 2) == (1, 1)


def test_crystal_sizes():
    assert len(ssyt_crystal(A2, (1, 0))) == 3
    assert len(ssyt_crystal(A2, (1, 1))) == 8
    full_column = ssyt_crystal_of_shape(A2, (1, 1, 1))
    assert len(full_column) == 1
    assert full_column.wt(full_column.elements[0]) == (0, 0)


def test_semistandard_condition():
    for t in semistandard_tableaux((3, 2, 1), 4):
        for row in t:
            assert list(row) == sorted(row)
        for r in range(len(t) - 1):
            for c in range(len(t[r + 1])):
                assert t[r][c] < t[r + 1][c]


def test_reading_word_order():
    t = ((1, 1, 2), (2, 3))
    assert [t[r][c] for r, c in reading_word(t)] == [2, 3, 1, 1, 2]


def test_operators_on_a_small_tableau():
    t = ((1, 1), (2,))
    assert tableau_f(t, 1) == ((1, 2), (2,))
    assert tableau_e(t, 1) is None
    assert tableau_e(((1, 2), (2,)), 1) == t
    assert tableau_f(((1, 2), (2,)), 1) is None


def test_yamanouchi_is_the_highest_weight_element():
    for lam in dominant_weights(A2, 3):
        if not any(lam):
            continue
        C = ssyt_crystal(A2, lam)
        heads = highest_weight_elements(C)
        assert heads == [(yamanouchi(partition_from_weight(lam, 2)), lam)]


def test_lr_examples():
    a1 = build_root_datum("A", 1)
    assert lr_oracle(a1, (1,), (1,), (2,)) == 1
    assert lr_oracle(a1, (1,), (1,), (0,)) == 1
    assert lr_oracle(A2, (1, 1), (1, 1), (1, 1)) == 2
    # nu above lam + mu
    assert lr_oracle(A2, (1, 0), (1, 0), (3, 0)) == 0


def test_non_type_a_rejected():
    with pytest.raises(ValueError):
        ssyt_crystal(build_root_datum("B", 2), (1, 0))


def test_isomorphic_to_binfty_model():
    ctx = Context.of_type("A", 2)
    T = ssyt_crystal(A2, (1, 1))
    iso = component_isomorphism(T, yamanouchi((2, 1)), ctx.B((1, 1)), 0)
    assert len(iso) == 8
    assert is_crystal_morphism(T, ctx.B((1, 1)), iso)


@pytest.mark.parametrize("rank", [1, 2, 3])
@settings(max_examples=15, deadline=None)
@given(data=st.data())
def test_ssyt_crystal_invariants(rank, data):
    rd = build_root_datum("A", rank)
    lam = data.draw(st.tuples(*[st.integers(0, 3)] * rank))
    C = ssyt_crystal(rd, lam)
    assert len(C) == weyl_dim(rd, lam)
    C.check_axioms()
    assert len(C.components()) == 1
    assert sum(1 for b in C.elements if C.is_highest_weight(b)) == 1
    for b in C.elements:
        for i in rd.indices:
            c = tableau_f(b, i)
            if c is not None:
                assert tableau_e(c, i) == b
