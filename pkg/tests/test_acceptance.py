"""The ten acceptance criteria, each run exactly over its stated range.

A PASS/FAIL line per criterion is printed in the terminal summary.
"""
import itertools
import subprocess
import sys
import time
from fractions import Fraction

import pytest

from crystalsatake import cli, sweeps
from crystalsatake.binfty import generate_binfty, lowest_depth
from crystalsatake.cartan import build_root_datum, dominant_weights, height, kostant_partition, weyl_dim
from crystalsatake.crystal import component_isomorphism, decompose, is_crystal_morphism, tensor_n
from crystalsatake.involutions import (
    CommutorTable,
    sigma_star,
    sigma_xi,
    table_diff,
    verify_cactus,
    verify_symmetry,
    xi,
)
from crystalsatake.satake import multiplicity_set, verify_assoc_compat, verify_commutor_compat, verify_pentagon
from crystalsatake.tableaux import lr_oracle, ssyt_crystal

# criterion 1: bound on height(lam - w0 lam) per type
DIMENSION_SWEEP = [("A", 1, 12), ("A", 2, 8), ("A", 3, 8), ("B", 2, 8), ("G", 2, 8)]
KOSTANT_SWEEP = [("A", 1, 10), ("A", 2, 10), ("B", 2, 6), ("G", 2, 6)]
LR_SWEEP = [("A", 1), ("A", 2), ("A", 3)]
LR_TOTAL = 6
# pairs and triples: every weight of height <= H
PAIR_SWEEP = [("A", 1, 4), ("A", 2, 3), ("B", 2, 2)]
PENTAGON_SWEEP = [("A", 1, 4), ("A", 2, 4)]


def dimension_weights(rd, bound):
    # height(lam + lam*) = 2 height(lam), so height(lam) <= bound / 2 is the exact cut
    return [lam for lam in dominant_weights(rd, Fraction(bound, 2)) if lowest_depth(rd, lam) <= bound]


def pair_cases(contexts):
    for family, rank, H in PAIR_SWEEP:
        ctx = contexts(family, rank)
        ws = dominant_weights(ctx.rd, H)
        for lam, mu in itertools.product(ws, repeat=2):
            yield ctx, lam, mu


def triple_cases(contexts):
    for family, rank, H in PAIR_SWEEP:
        ctx = contexts(family, rank)
        ws = dominant_weights(ctx.rd, H)
        for t in itertools.product(ws, repeat=3):
            yield ctx, t


@pytest.mark.criterion(1, "dimension oracle |B(lam)| = weyl_dim (B(inf) and tableau models)")
def test_dimension_oracle(contexts):
    start = time.perf_counter()
    checked = 0
    for family, rank, bound in DIMENSION_SWEEP:
        ctx = contexts(family, rank)
        rd = ctx.rd
        for lam in dimension_weights(rd, bound):
            B = ctx.B(lam)
            assert len(B) == weyl_dim(rd, lam), (rd, lam)
            B.check_axioms()
            if family == "A":
                assert len(ssyt_crystal(rd, lam)) == weyl_dim(rd, lam), (rd, lam)
            checked += 1
    assert checked > 0
    assert time.perf_counter() - start < 120


@pytest.mark.criterion(2, "Kostant oracle on B(inf) weight counts")
def test_kostant_oracle():
    for family, rank, depth in KOSTANT_SWEEP:
        rd = build_root_datum(family, rank)
        g = generate_binfty(rd, depth)
        counts = g.nodes_by_offset()
        for beta in itertools.product(range(depth + 1), repeat=rank):
            if sum(beta) > depth:
                continue
            assert len(counts.get(beta, [])) == kostant_partition(rd, beta), (rd, beta)
        assert all(sum(beta) <= depth for beta in counts)


@pytest.mark.criterion(3, "tableau model isomorphic to B(lam) from B(inf)")
def test_model_isomorphism(contexts):
    for family, rank, bound in DIMENSION_SWEEP:
        if family != "A":
            continue
        ctx = contexts(family, rank)
        for lam in dimension_weights(ctx.rd, bound):
            T = ssyt_crystal(ctx.rd, lam)
            B = ctx.B(lam)
            heads = [b for b in T.elements if T.is_highest_weight(b)]
            assert len(heads) == 1
            iso = component_isomorphism(T, heads[0], B, 0)
            assert len(iso) == len(T) == len(B)
            assert is_crystal_morphism(T, B, iso)


@pytest.mark.criterion(4, "Littlewood-Richardson agreement in type A")
def test_lr_agreement(contexts):
    for family, rank in LR_SWEEP:
        ctx = contexts(family, rank)
        rd = ctx.rd
        ws = dominant_weights(rd, LR_TOTAL)
        for lam, mu in itertools.product(ws, repeat=2):
            if height(rd, lam) + height(rd, mu) > LR_TOTAL:
                continue
            mult = {nu: len(v) for nu, v in decompose(ctx.tensor((lam, mu))).items()}
            total = tuple(a + b for a, b in zip(lam, mu))
            for nu in dominant_weights(rd, height(rd, total)):
                assert mult.get(nu, 0) == lr_oracle(rd, lam, mu, nu), (lam, mu, nu)
            assert set(mult) <= set(dominant_weights(rd, height(rd, total)))
    ctx = contexts("A", 2)
    assert len(multiplicity_set(ctx, [(1, 1), (1, 1)], (1, 1))) == 2


@pytest.mark.criterion(5, "star commutor equals xi commutor elementwise")
def test_star_xi_identity(contexts):
    for ctx, lam, mu in pair_cases(contexts):
        a, b = sigma_star(ctx, lam, mu), sigma_xi(ctx, lam, mu)
        assert table_diff(a, b) == [], (ctx.rd, lam, mu)
        assert len(a.extended) == len(ctx.tensor((lam, mu)))


@pytest.mark.criterion(6, "coboundary axioms: symmetry on pairs, cactus on triples")
def test_coboundary_axioms(contexts):
    for ctx, lam, mu in pair_cases(contexts):
        assert verify_symmetry(ctx, lam, mu) is None
    for ctx, t in triple_cases(contexts):
        assert verify_cactus(ctx, *t) is None, (ctx.rd, t)


@pytest.mark.criterion(7, "pentagon on quadruples of total height <= 4")
def test_pentagon(contexts):
    for family, rank, H in PENTAGON_SWEEP:
        ctx = contexts(family, rank)
        cases = sweeps.weight_tuples(ctx.rd, 4, H, total=True)
        assert cases
        for q in cases:
            assert verify_pentagon(ctx, *q) is None, (ctx.rd, q)


@pytest.mark.criterion(8, "functor compatibility with associators and commutors")
def test_functor_compatibility(contexts):
    for ctx, t in triple_cases(contexts):
        assert verify_assoc_compat(ctx, *t) is None, (ctx.rd, t)
    for ctx, lam, mu in pair_cases(contexts):
        assert verify_commutor_compat(ctx, lam, mu) is None, (ctx.rd, lam, mu)


@pytest.mark.criterion(9, "structural invariants of xi, star, commutor tables and tensor_n")
def test_structural_invariants(contexts):
    for family, rank, bound in DIMENSION_SWEEP:
        ctx = contexts(family, rank)
        for lam in dimension_weights(ctx.rd, bound):
            B = ctx.B(lam)
            s = xi(B)
            assert all(s[s[b]] == b for b in B.elements)
    for family, rank, depth in KOSTANT_SWEEP:
        rd = build_root_datum(family, rank)
        g = generate_binfty(rd, depth)
        for b in range(len(g)):
            bs = g.star(b)
            assert g.star(bs) == b
            assert g.weight(bs) == g.weight(b)
            if g.node_depth[b] <= depth - 1:
                for i in rd.indices:
                    assert g.epsilon(i, bs) == g.eps_star(b, i)
    for ctx, lam, mu in pair_cases(contexts):
        table = sigma_star(ctx, lam, mu)
        X, Y = ctx.tensor((lam, mu)), ctx.tensor((mu, lam))
        assert sorted(table.extended.values()) == sorted(Y.elements)
        assert is_crystal_morphism(X, Y, table.extended)
        assert all(X.wt(hw) == nu == Y.wt(im) for hw, nu, im in table.pairs)
    for ctx, t in triple_cases(contexts):
        factors = [ctx.B(w) for w in t]
        assert tensor_n(factors, "left").table() == tensor_n(factors, "right").table()


def _cli(*args):
    return subprocess.run([sys.executable, "-m", "crystalsatake", *args], capture_output=True)


@pytest.mark.criterion(10, "CLI determinism and verify exit codes")
def test_cli_determinism_and_exit_codes(monkeypatch, capsys):
    commands = [
        ["decompose", "--type", "A", "--rank", "2", "--lambda", "1,1", "--mu", "1,1"],
        ["commutor", "--type", "B", "--rank", "2", "--lambda", "1,1", "--mu", "0,1", "--extended"],
        ["binfty", "--type", "G", "--rank", "2", "--depth", "4", "--star", "1,2,2"],
        ["export-crystal", "--type", "A", "--rank", "2", "--lambda", "2,1", "--format", "dot"],
        ["verify", "cactus", "--type", "A", "--rank", "2", "--max-height", "1"],
    ]
    for argv in commands:
        first, second = _cli(*argv), _cli(*argv)
        assert first.returncode == 0, first.stderr
        assert first.stdout == second.stdout and first.stdout

    assert _cli("verify", "symmetry", "--type", "A", "--rank", "1", "--max-height", "3").returncode == 0
    assert _cli("verify", "nonsense", "--max-height", "1").returncode == 2
    assert _cli("verify", "symmetry", "--type", "E", "--rank", "5", "--max-height", "1").returncode == 2
    assert _cli("verify", "symmetry", "--max-height", "2", "--depth", "1").returncode == 2

    # a broken xi commutor must make verify fail with exit 1 and a counterexample
    real = sweeps.sigma_xi

    def broken(ctx, lam, mu):
        t = real(ctx, lam, mu)
        keys = sorted(t.extended)
        ext = dict(t.extended)
        if len(keys) > 1:
            ext[keys[0]], ext[keys[1]] = ext[keys[1]], ext[keys[0]]
        return CommutorTable(t.lam, t.mu, t.pairs, ext)

    monkeypatch.setattr(sweeps, "sigma_xi", broken)
    assert cli.run(["verify", "star-xi", "--type", "A", "--rank", "1", "--max-height", "1"]) == 1
    assert '"axiom": "star-xi"' in capsys.readouterr().out
