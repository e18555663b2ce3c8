"""Command line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or configuration error.
Indices follow Bourbaki numbering (G2: ``a[1][2] = -1``, ``a[2][1] = -3``).
"""
from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from fractions import Fraction

from .binfty import lowest_depth
from .cartan import build_root_datum, is_dominant, kostant_partition
from .context import Context, weight_key
from .crystal import decompose
from .errors import CrystalError, DepthExceeded, FidelityOverflow, InvalidType
from .involutions import sigma_star, sigma_xi, table_diff
from .serialize import (
    commutor_to_dict,
    counterexample_to_dict,
    crystal_to_dict,
    crystal_to_dot,
    decomposition_tsv,
    dumps,
    write_atomic,
)
from .sweeps import AXIOMS, required_depth, run_sweep, sweep


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    family: str
    rank: int
    depth: int | None
    max_height: Fraction | None
    command: str
    output_format: str
    out: str | None


def _weight(text: str, rank: int) -> tuple[int, ...]:
    try:
        w = tuple(int(x) for x in text.split(",")) if text.strip() else ()
    except ValueError:
        raise UsageError(f"bad weight {text!r}") from None
    if len(w) != rank or not is_dominant(w):
        raise UsageError(f"weight {text!r} must be {rank} non-negative integers")
    return w


def _fword(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",")) if text.strip() else ()
    except ValueError:
        raise UsageError(f"bad f-word {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--type", "-t", dest="family", default="A",
                        help="Cartan family A-G (Bourbaki numbering)")
    common.add_argument("--rank", "-r", type=int, default=1)
    common.add_argument("--depth", type=int, default=None,
                        help="B(infinity) truncation depth (default: the minimum required)")
    common.add_argument("--format", dest="output_format", default="json",
                        choices=["json", "tsv", "dot"])
    common.add_argument("--out", default=None, help="write the artifact here instead of stdout")

    parser = argparse.ArgumentParser(prog="crystalsatake", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", parents=[common], help="multiplicities |C(lam, mu; nu)|")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mu", required=True)

    p = sub.add_parser("commutor", parents=[common], help="star and xi commutor tables")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mu", required=True)
    p.add_argument("--extended", action="store_true", help="include the element-level map")

    p = sub.add_parser("binfty", parents=[common], help="B(infinity) weight counts and star images")
    p.add_argument("--star", default=None, metavar="NODE",
                   help="comma separated f-word of a node (applied left to right)")

    p = sub.add_parser("verify", parents=[common], help="sweep an axiom over dominant weights")
    p.add_argument("axiom", choices=AXIOMS)
    p.add_argument("--max-height", required=True, type=Fraction)

    p = sub.add_parser("export-crystal", parents=[common], help="crystal graph of B(lam)")
    p.add_argument("--lambda", dest="lam", required=True)
    return parser


def _context(cfg: RunConfig, needed: int) -> Context:
    rd = build_root_datum(cfg.family, cfg.rank)
    depth = needed if cfg.depth is None else cfg.depth
    if depth < needed:
        raise UsageError(f"--depth {depth} is below the required {needed}")
    ctx = Context(rd, depth)
    ctx.graph.freeze()
    return ctx


def _emit(cfg: RunConfig, text: str, summary: str) -> None:
    if cfg.out:
        write_atomic(cfg.out, text)
        print(summary)
    else:
        sys.stdout.write(text)


def cmd_decompose(cfg: RunConfig, args) -> int:
    rd = build_root_datum(cfg.family, cfg.rank)
    lam, mu = _weight(args.lam, rd.rank), _weight(args.mu, rd.rank)
    ctx = _context(cfg, lowest_depth(rd, tuple(a + b for a, b in zip(lam, mu))))
    parts = decompose(ctx.tensor((lam, mu)))
    mult = {w: len(v) for w, v in parts.items()}
    if cfg.output_format == "tsv":
        text = decomposition_tsv(mult)
    else:
        graph = ctx.graph
        text = dumps({
            "type": str(rd),
            "lambda": list(lam),
            "mu": list(mu),
            "multiplicities": {weight_key(w): m for w, m in mult.items()},
            "highest_weight_elements": [
                {"weight": list(w), "element": [list(graph.fword[b]) for b in hw]}
                for w, hws in parts.items() for hw in hws
            ],
        })
    _emit(cfg, text, f"decompose {weight_key(lam)} x {weight_key(mu)}: {sum(mult.values())} components")
    return 0


def cmd_commutor(cfg: RunConfig, args) -> int:
    rd = build_root_datum(cfg.family, cfg.rank)
    lam, mu = _weight(args.lam, rd.rank), _weight(args.mu, rd.rank)
    ctx = _context(cfg, lowest_depth(rd, tuple(a + b for a, b in zip(lam, mu))))
    star_t, xi_t = sigma_star(ctx, lam, mu), sigma_xi(ctx, lam, mu)
    diff = table_diff(star_t, xi_t)
    text = dumps({
        "type": str(rd),
        "sigma_star": commutor_to_dict(ctx, star_t, args.extended),
        "sigma_xi": commutor_to_dict(ctx, xi_t, args.extended),
        "diff": [
            {"element": [list(ctx.graph.fword[b]) for b in x],
             "sigma_star": [list(ctx.graph.fword[b]) for b in a],
             "sigma_xi": [list(ctx.graph.fword[b]) for b in b_]}
            for x, a, b_ in diff
        ],
    })
    _emit(cfg, text, f"commutor {weight_key(lam)} x {weight_key(mu)}: {len(diff)} differences")
    return 0


def cmd_binfty(cfg: RunConfig, args) -> int:
    if cfg.depth is None:
        raise UsageError("binfty needs --depth")
    ctx = _context(cfg, cfg.depth)
    g = ctx.graph
    data = {
        "type": str(ctx.rd),
        "depth": g.depth,
        "nodes": len(g),
        "counts": [
            {"beta": list(beta), "weight": list(g.weight(nodes[0])), "count": len(nodes),
             "kostant": kostant_partition(ctx.rd, beta)}
            for beta, nodes in sorted(g.nodes_by_offset().items())
        ],
    }
    if args.star is not None:
        word = _fword(args.star)
        if len(word) > g.depth:
            raise UsageError(f"node {args.star!r} is deeper than --depth {g.depth}")
        b = g.node_from_fword(word)
        data["star"] = {"node": list(g.fword[b]), "image": list(g.fword[g.star(b)]),
                        "weight": list(g.weight(b))}
    _emit(cfg, dumps(data), f"binfty depth {g.depth}: {len(g)} nodes")
    return 0


def cmd_verify(cfg: RunConfig, args) -> int:
    rd = build_root_datum(cfg.family, cfg.rank)
    cases = sweep(rd, args.axiom, cfg.max_height)
    ctx = _context(cfg, required_depth(rd, cases))
    count, failure = run_sweep(ctx, args.axiom, cfg.max_height)
    if failure is None:
        text = dumps({"axiom": args.axiom, "type": str(rd), "max_height": str(cfg.max_height),
                      "cases": count, "status": "pass"})
        _emit(cfg, text, f"verify {args.axiom} {rd} H<={cfg.max_height}: pass ({count} cases)")
        return 0
    text = dumps(counterexample_to_dict(failure))
    _emit(cfg, text, f"verify {args.axiom} {rd}: FAIL")
    if cfg.out:
        sys.stderr.write(text)
    return 1


def cmd_export(cfg: RunConfig, args) -> int:
    rd = build_root_datum(cfg.family, cfg.rank)
    lam = _weight(args.lam, rd.rank)
    ctx = _context(cfg, lowest_depth(rd, lam))
    cr = ctx.B(lam)
    if cfg.output_format == "dot":
        text = crystal_to_dot(cr, name=cr.name)
    elif cfg.output_format == "json":
        text = dumps(crystal_to_dict(cr))
    else:
        raise UsageError("export-crystal supports --format dot or json")
    _emit(cfg, text, f"export {cr.name}: {len(cr)} elements")
    return 0


COMMANDS = {
    "decompose": cmd_decompose,
    "commutor": cmd_commutor,
    "binfty": cmd_binfty,
    "verify": cmd_verify,
    "export-crystal": cmd_export,
}


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    cfg = RunConfig(
        family=args.family, rank=args.rank, depth=args.depth,
        max_height=getattr(args, "max_height", None), command=args.command,
        output_format=args.output_format, out=args.out,
    )
    try:
        build_root_datum(cfg.family, cfg.rank)
        if cfg.depth is not None and cfg.depth < 0:
            raise UsageError("--depth must be non-negative")
        return COMMANDS[args.command](cfg, args)
    except (UsageError, InvalidType) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (DepthExceeded, FidelityOverflow) as exc:
        print(f"error [{exc.code}]: {exc}", file=sys.stderr)
        return 2
    except CrystalError as exc:
        print(f"error [{exc.code}]: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
