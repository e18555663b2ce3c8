"""Shared workspace: one B(infinity) graph per root datum plus cached crystals."""
from __future__ import annotations

from .binfty import BInftyGraph, highest_weight_crystal, lowest_depth
from .cartan import RootDatum, Weight, build_root_datum
from .crystal import Crystal, component_isomorphism, decompose, tensor_n


class Context:
    """Owns the B(infinity) graph and the canonical copies of every B(lam).

    The graph grows on demand; node ids never change as it grows, so every
    cached crystal and table stays valid.
    """

    def __init__(self, rd: RootDatum, depth: int = 0):
        self.rd = rd
        self.graph = BInftyGraph(rd)
        self.graph.extend(depth)
        self.cache: dict = {}

    @classmethod
    def of_type(cls, family: str, rank: int, depth: int = 0) -> "Context":
        return cls(build_root_datum(family, rank), depth)

    def require(self, *weights) -> None:
        need = max((lowest_depth(self.rd, w) for w in weights), default=0)
        self.graph.extend(need)

    def B(self, lam) -> Crystal:
        """Canonical B(lam); its highest weight element is node 0."""
        lam = tuple(lam)
        key = ("B", lam)
        if key not in self.cache:
            self.require(lam)
            self.cache[key] = highest_weight_crystal(self.graph, lam)
        return self.cache[key]

    def tensor(self, weights) -> Crystal:
        """``B(w_1) (x) ... (x) B(w_n)`` with flat tuple labels."""
        weights = tuple(tuple(w) for w in weights)
        key = ("T", weights)
        if key not in self.cache:
            self.cache[key] = tensor_n([self.B(w) for w in weights])
        return self.cache[key]

    def labeling(self, weights) -> dict:
        """Map ``x -> (head, b)``: the highest weight element heading the component
        of ``x`` in the product, and the image of ``x`` in the canonical B(wt head)."""
        weights = tuple(tuple(w) for w in weights)
        key = ("P", weights)
        if key not in self.cache:
            self.cache[key] = canonical_labeling(self, self.tensor(weights))
        return self.cache[key]


def canonical_labeling(ctx: Context, X: Crystal) -> dict:
    """``x -> (head, image in canonical B(wt head))`` for every element of X."""
    if "canonical" not in X.cache:
        out = {}
        for gamma, heads in decompose(X).items():
            target = ctx.B(gamma)
            for h in heads:
                for x, b in component_isomorphism(X, h, target, 0).items():
                    out[x] = (h, b)
        X.cache["canonical"] = out
    return X.cache["canonical"]


def weight_key(w: Weight) -> str:
    return "(" + ",".join(map(str, w)) + ")"
