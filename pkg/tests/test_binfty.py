import itertools

import pytest

from crystalsatake.binfty import (
    BInftyGraph,
    generate_binfty,
    highest_weight_crystal,
    iota,
    lowest_depth,
)
from crystalsatake.cartan import build_root_datum, dominant_weights, height, kostant_partition, weyl_dim
from crystalsatake.errors import DepthExceeded, FidelityOverflow


def graph(family, rank, depth):
    return generate_binfty(build_root_datum(family, rank), depth)


def test_generation_examples():
    g = graph("A", 1, 3)
    assert len(g) == 4
    assert [len(level) for level in g.levels] == [1, 1, 1, 1]
    assert len(graph("A", 2, 2)) == 7
    for family, rank in [("A", 3), ("B", 2), ("G", 2)]:
        assert len(graph(family, rank, 0)) == 1


def test_negative_depth_rejected():
    with pytest.raises(ValueError):
        generate_binfty(build_root_datum("A", 1), -1)


def test_psi_examples():
    g = graph("A", 1, 4)
    u = 0
    assert g.psi_embed(u, 1) == (u, 0)
    for k in range(3):
        b = g.node_from_fword((1,) * k)
        assert g.psi_embed(b, 1) == (u, k)
        assert g.eps_star(b, 1) == k
    h = graph("A", 2, 3)
    f1u = h.node_from_fword((1,))
    for i in (1, 2):
        assert h.psi_embed(u, i) == (u, 0)
        assert h.eps_star(u, i) == 0
    assert h.psi_embed(f1u, 2) == (f1u, 0)
    assert h.eps_star(f1u, 2) == 0


def test_f_star_examples():
    g = graph("A", 1, 5)
    for k in range(4):
        assert g.f_star(g.node_from_fword((1,) * k), 1) == g.node_from_fword((1,) * (k + 1))
    for family, rank in [("A", 2), ("B", 2), ("G", 2)]:
        h = graph(family, rank, 3)
        for i in h.rd.indices:
            b = h.f_star(0, i)
            assert h.node_depth[b] == 1
            assert h.weight(b) == tuple(-x for x in h.rd.simple_root(i))
    h = graph("A", 2, 3)
    b = h.f_star(h.node_from_fword((1,)), 2)
    assert h.node_depth[b] == 2
    assert h.weight(b) == tuple(-x for x in h.rd.to_weight((1, 1)))


def test_star_examples():
    g = graph("A", 1, 6)
    assert all(g.star(b) == b for b in range(len(g)))
    h = graph("A", 2, 3)
    assert h.star(0) == 0
    pair = h.nodes_by_offset()[(1, 1)]
    assert len(pair) == 2
    assert sorted(h.star(b) for b in pair) == sorted(pair)


def test_star_is_not_the_identity_in_rank_two():
    # otherwise the commutor would be trivial
    h = graph("A", 2, 4)
    assert any(h.star(b) != b for b in range(len(h)))


def test_f_star_beyond_depth():
    g = graph("A", 2, 2)
    deep = g.levels[2][0]
    with pytest.raises(DepthExceeded) as exc:
        g.f_star(deep, 1)
    assert exc.value.code == "DEPTH_EXCEEDED"
    with pytest.raises(DepthExceeded):
        g.f(1, deep)


def test_fidelity_overflow():
    rd = build_root_datum("A", 2)
    with pytest.raises(FidelityOverflow) as exc:
        generate_binfty(rd, 6, max_letters=6)
    assert exc.value.code == "FIDELITY_OVERFLOW"


def test_highest_weight_crystal_examples():
    a1 = build_root_datum("A", 1)
    g = generate_binfty(a1, 2)
    B = highest_weight_crystal(g, (2,))
    assert sorted(B.elements) == sorted([0, g.node_from_fword((1,)), g.node_from_fword((1, 1))])
    assert len(highest_weight_crystal(g, (0,))) == 1
    a2 = build_root_datum("A", 2)
    assert len(highest_weight_crystal(generate_binfty(a2, 4), (1, 1))) == 8
    with pytest.raises(DepthExceeded):
        highest_weight_crystal(generate_binfty(a2, 3), (1, 1))


def test_iota_examples():
    g = generate_binfty(build_root_datum("A", 1), 2)
    B = highest_weight_crystal(g, (2,))
    assert iota(g, (2,), 0) == 0
    f1 = B.f(1, 0)
    assert iota(g, (2,), f1) == g.f(1, 0)
    for b in B.elements:
        assert g.weight(iota(g, (2,), b)) == tuple(w - l for w, l in zip(B.wt(b), (2,)))


def test_lowest_depth():
    a1 = build_root_datum("A", 1)
    assert lowest_depth(a1, (4,)) == 4
    a2 = build_root_datum("A", 2)
    assert lowest_depth(a2, (1, 1)) == 4
    assert lowest_depth(a2, (1, 0)) == 2


@pytest.mark.parametrize("family,rank,depth", [("A", 1, 8), ("A", 2, 7), ("A", 3, 5), ("B", 2, 6), ("C", 3, 4), ("G", 2, 6)])
def test_binfty_invariants(family, rank, depth):
    g = graph(family, rank, depth)
    rd = g.rd
    counts = g.nodes_by_offset()
    for beta in itertools.product(range(depth + 1), repeat=rank):
        if sum(beta) <= depth:
            assert len(counts.get(beta, [])) == kostant_partition(rd, beta)
    for b in range(len(g)):
        assert g.node_depth[b] == sum(g.offset[b])
        assert g.node_from_fword(g.fword[b]) == b
        bs = g.star(b)
        assert g.star(bs) == b and g.weight(bs) == g.weight(b)
        for i in rd.indices:
            assert g.phi(i, b) - g.epsilon(i, b) == g.weight(b)[i - 1]
            if g.node_depth[b] < depth:
                assert g.epsilon(i, bs) == g.eps_star(b, i)
                c = g.f(i, b)
                assert g.e(i, c) == b
                assert g.epsilon(i, c) == g.epsilon(i, b) + 1
                cs = g.f_star(b, i)
                assert g.e_star(cs, i) == b
                assert g.star(cs) == g.f(i, g.star(b))
    assert all(g.epsilon(i, 0) == 0 for i in rd.indices)


def test_growth_keeps_node_ids():
    rd = build_root_datum("B", 2)
    small = generate_binfty(rd, 3)
    big = BInftyGraph(rd)
    big.extend(6)
    for b in range(len(small)):
        assert big.fword[b] == small.fword[b]
        assert big.star(b) == small.star(b)


@pytest.mark.parametrize("family,rank,bound", [("A", 2, 6), ("B", 2, 6), ("G", 2, 6), ("C", 3, 4)])
def test_highest_weight_crystals_match_weyl_dimension(family, rank, bound):
    rd = build_root_datum(family, rank)
    g = generate_binfty(rd, bound)
    for lam in dominant_weights(rd, bound):
        if lowest_depth(rd, lam) > bound:
            continue
        B = highest_weight_crystal(g, lam)
        assert len(B) == weyl_dim(rd, lam)
        B.check_axioms()
        heads = [b for b in B.elements if B.is_highest_weight(b)]
        assert heads == [0] and B.wt(0) == lam
        assert height(rd, lam) * 2 == lowest_depth(rd, lam)
