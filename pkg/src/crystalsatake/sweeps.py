"""Weight sweeps and the batch verifiers behind ``verify``.

Sweep ranges, for a height bound H (height = sum of simple-root coordinates):

* pairs: every (lam, mu) with height(lam), height(mu) <= H
* triples: every (lam, mu, nu) with each height <= H
* quadruples: every 4-tuple whose heights sum to at most H
"""
from __future__ import annotations

import itertools
from fractions import Fraction

from .binfty import lowest_depth
from .cartan import RootDatum, dominant_weights, height, kostant_partition, weyl_dim
from .context import Context
from .crystal import decompose
from .involutions import Counterexample, sigma_star, sigma_xi, table_diff, verify_cactus, verify_symmetry
from .satake import verify_assoc_compat, verify_commutor_compat, verify_pentagon
from .tableaux import lr_oracle, ssyt_crystal

AXIOMS = ("symmetry", "cactus", "pentagon", "assoc-compat", "commutor-compat", "star-xi", "oracles")


def weight_tuples(rd: RootDatum, arity: int, max_height, total: bool = False) -> list[tuple]:
    ws = dominant_weights(rd, max_height)
    tuples = itertools.product(ws, repeat=arity)
    if total:
        return [t for t in tuples if sum(height(rd, w) for w in t) <= Fraction(max_height)]
    return list(tuples)


def sweep(rd: RootDatum, axiom: str, max_height) -> list[tuple]:
    if axiom in ("symmetry", "commutor-compat", "star-xi"):
        return weight_tuples(rd, 2, max_height)
    if axiom in ("cactus", "assoc-compat"):
        return weight_tuples(rd, 3, max_height)
    if axiom == "pentagon":
        return weight_tuples(rd, 4, max_height, total=True)
    if axiom == "oracles":
        return weight_tuples(rd, 1, max_height)
    raise ValueError(f"unknown axiom {axiom!r}")


def required_depth(rd: RootDatum, tuples) -> int:
    """Depth covering B(sum of weights) for every tuple, the largest crystal a check touches."""
    depth = 0
    for t in tuples:
        total = tuple(map(sum, zip(*t)))
        depth = max(depth, lowest_depth(rd, total))
    return depth


def _star_xi(ctx: Context, lam, mu) -> Counterexample | None:
    diff = table_diff(sigma_star(ctx, lam, mu), sigma_xi(ctx, lam, mu))
    if diff:
        x, a, b = diff[0]
        return Counterexample("star-xi", (tuple(lam), tuple(mu)), x, a, b)
    return None


def check_oracles(ctx: Context, lam) -> Counterexample | None:
    """Weyl dimension, tableau model size and (type A) LR agreement for lam."""
    rd = ctx.rd
    lam = tuple(lam)
    size = len(ctx.B(lam))
    if size != weyl_dim(rd, lam):
        return Counterexample("oracles/weyl_dim", (lam,), None, size, weyl_dim(rd, lam))
    if rd.family == "A" and len(ssyt_crystal(rd, lam)) != size:
        return Counterexample("oracles/ssyt", (lam,), None, len(ssyt_crystal(rd, lam)), size)
    return None


def check_kostant(ctx: Context, depth: int) -> Counterexample | None:
    g = ctx.graph
    g.extend(depth)
    counts = g.nodes_by_offset()
    for beta in itertools.product(range(depth + 1), repeat=ctx.rd.rank):
        if sum(beta) > depth:
            continue
        got = len(counts.get(beta, []))
        want = kostant_partition(ctx.rd, beta)
        if got != want:
            return Counterexample("oracles/kostant", (beta,), None, got, want)
    return None


def check_lr(ctx: Context, lam, mu) -> Counterexample | None:
    rd = ctx.rd
    mult = {w: len(v) for w, v in decompose(ctx.tensor((lam, mu))).items()}
    for nu in set(mult) | {w for w in dominant_weights(rd, height(rd, tuple(a + b for a, b in zip(lam, mu))))}:
        want = lr_oracle(rd, lam, mu, nu)
        if mult.get(nu, 0) != want:
            return Counterexample("oracles/lr", (tuple(lam), tuple(mu), nu), None, mult.get(nu, 0), want)
    return None


def run_sweep(ctx: Context, axiom: str, max_height) -> tuple[int, Counterexample | None]:
    """Run one verifier over its sweep; returns (cases checked, first counterexample)."""
    rd = ctx.rd
    cases = sweep(rd, axiom, max_height)
    checker = {
        "symmetry": lambda t: verify_symmetry(ctx, *t),
        "cactus": lambda t: verify_cactus(ctx, *t),
        "pentagon": lambda t: verify_pentagon(ctx, *t),
        "assoc-compat": lambda t: verify_assoc_compat(ctx, *t),
        "commutor-compat": lambda t: verify_commutor_compat(ctx, *t),
        "star-xi": lambda t: _star_xi(ctx, *t),
        "oracles": lambda t: check_oracles(ctx, *t),
    }[axiom]
    count = 0
    for t in cases:
        count += 1
        failure = checker(t)
        if failure is not None:
            return count, failure
    if axiom == "oracles":
        depth = required_depth(rd, [(w,) for (w,) in cases])
        failure = check_kostant(ctx, depth)
        if failure is not None:
            return count, failure
        if rd.family == "A":
            for lam, mu in weight_tuples(rd, 2, max_height):
                count += 1
                failure = check_lr(ctx, lam, mu)
                if failure is not None:
                    return count, failure
    return count, None
