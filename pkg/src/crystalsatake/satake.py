"""The combinatorial Satake category.

An object assigns a finite label set to each dominant weight.  Tensor
products are built from multiplicity sets ``C(lam_1, ..., lam_n; nu)``,
realised as the highest weight elements of weight ``nu`` in
``B(lam_1) (x) ... (x) B(lam_n)``.  Labels of ``R (x) S`` are triples
``(r, s, c)``; labels of the unbracketed ``R (x) S (x) T`` are ``(r, s, t, c)``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import NamedTuple

from .cartan import Weight
from .context import Context
from .crystal import Crystal, disjoint_union, highest_weight_elements
from .errors import ImageNotHighestWeight, InternalConsistency
from .involutions import Counterexample, sigma_star


class MultiplicityElement(NamedTuple):
    """A highest weight element of a product of canonical B(lam)'s."""

    factors: tuple[Weight, ...]
    weight: Weight
    element: tuple[int, ...]


def label_key(label):
    """Total order on nested labels (ints, strings and tuples of them)."""
    if isinstance(label, tuple):
        return (2, tuple(label_key(x) for x in label))
    if isinstance(label, str):
        return (1, label)
    return (0, label)


@dataclass(frozen=True)
class SatakeObject:
    sets: dict = field(default_factory=dict)

    def __post_init__(self):
        clean = {tuple(w): tuple(sorted(set(labels), key=label_key))
                 for w, labels in self.sets.items() if labels}
        object.__setattr__(self, "sets", dict(sorted(clean.items())))

    @property
    def support(self) -> list[Weight]:
        return list(self.sets)

    def labels(self, lam) -> tuple:
        return self.sets.get(tuple(lam), ())

    def size(self) -> int:
        return sum(len(v) for v in self.sets.values())

    def __eq__(self, other):
        return isinstance(other, SatakeObject) and self.sets == other.sets

    def __hash__(self):
        return hash(tuple(self.sets.items()))

    def direct_sum(self, other: "SatakeObject") -> "SatakeObject":
        """Disjoint union; labels are tagged 0 (self) and 1 (other)."""
        out: dict = {}
        for tag, obj in ((0, self), (1, other)):
            for w, labels in obj.sets.items():
                out.setdefault(w, []).extend((tag, r) for r in labels)
        return SatakeObject(out)


@dataclass(frozen=True)
class SatakeMorphism:
    """Per-weight set maps ``R_lam -> S_lam``."""

    source: SatakeObject
    target: SatakeObject
    maps: dict

    def __call__(self, lam, r):
        return self.maps[tuple(lam)][r]

    def compose(self, first: "SatakeMorphism") -> "SatakeMorphism":
        """``self o first``."""
        return SatakeMorphism(first.source, self.target, {
            w: {r: self.maps[w][s] for r, s in m.items()} for w, m in first.maps.items()
        })

    def is_bijection(self) -> bool:
        return all(
            sorted(m.values(), key=label_key) == list(self.target.labels(w))
            and set(m) == set(self.source.labels(w))
            for w, m in self.maps.items()
        ) and set(self.source.support) == set(self.target.support)


def identity(R: SatakeObject) -> SatakeMorphism:
    return SatakeMorphism(R, R, {w: {r: r for r in labels} for w, labels in R.sets.items()})


def hom_count(R: SatakeObject, S: SatakeObject) -> int:
    """``|Hom(R, S)| = prod_lam |S_lam| ** |R_lam|``."""
    total = 1
    for w, labels in R.sets.items():
        total *= len(S.labels(w)) ** len(labels)
    return total


def homs(R: SatakeObject, S: SatakeObject):
    """Every morphism R -> S."""
    weights = R.support
    choices = [itertools.product(S.labels(w), repeat=len(R.labels(w))) for w in weights]
    for pick in itertools.product(*choices):
        yield SatakeMorphism(R, S, {
            w: dict(zip(R.labels(w), images)) for w, images in zip(weights, pick)
        })


def simple_object(lam) -> SatakeObject:
    """A(lam): the set {1} at lam, empty elsewhere."""
    return SatakeObject({tuple(lam): (1,)})


def multiplicity_set(ctx: Context, weights, target) -> list[MultiplicityElement]:
    """``C(lam_1, ..., lam_n; target)`` in element order."""
    weights = tuple(tuple(w) for w in weights)
    target = tuple(target)
    return _mult_sets(ctx, weights).get(target, [])


def _mult_sets(ctx: Context, weights) -> dict[Weight, list[MultiplicityElement]]:
    key = ("C", weights)
    if key not in ctx.cache:
        out: dict = {}
        for b, w in highest_weight_elements(ctx.tensor(weights)):
            out.setdefault(w, []).append(MultiplicityElement(weights, w, b))
        ctx.cache[key] = dict(sorted(out.items()))
    return ctx.cache[key]


def tensor_objects(ctx: Context, R: SatakeObject, S: SatakeObject) -> SatakeObject:
    out: dict = {}
    for lam in R.support:
        for mu in S.support:
            for nu, cset in _mult_sets(ctx, (lam, mu)).items():
                out.setdefault(nu, []).extend(
                    (r, s, c) for r in R.labels(lam) for s in S.labels(mu) for c in cset
                )
    return SatakeObject(out)


def tensor3_objects(ctx: Context, R: SatakeObject, S: SatakeObject, T: SatakeObject) -> SatakeObject:
    out: dict = {}
    for lam in R.support:
        for mu in S.support:
            for nu in T.support:
                for delta, cset in _mult_sets(ctx, (lam, mu, nu)).items():
                    out.setdefault(delta, []).extend(
                        (r, s, t, c)
                        for r in R.labels(lam) for s in S.labels(mu) for t in T.labels(nu)
                        for c in cset
                    )
    return SatakeObject(out)


def tensor_morphisms(ctx: Context, f: SatakeMorphism, g: SatakeMorphism) -> SatakeMorphism:
    """``f (x) g`` acting on labels ``(r, s, c) -> (f r, g s, c)``."""
    source = tensor_objects(ctx, f.source, g.source)
    target = tensor_objects(ctx, f.target, g.target)
    maps = {}
    for nu, labels in source.sets.items():
        m = {}
        for r, s, c in labels:
            lam, mu = c.factors
            m[(r, s, c)] = (f(lam, r), g(mu, s), c)
        maps[nu] = m
    return SatakeMorphism(source, target, maps)


# ---- refined associators ----------------------------------------------------------


def _split(ctx: Context, triple_weights, w, side: str):
    lam, mu, nu = triple_weights
    x, y, z = w.element
    if side == "left":
        pair_w, pair, rest = (lam, mu), (x, y), z
    else:
        pair_w, pair, rest = (mu, nu), (y, z), x
    head, b = ctx.labeling(pair_w)[pair]
    gamma = ctx.tensor(pair_w).wt(head)
    first = MultiplicityElement(pair_w, gamma, head)
    if side == "left":
        outer_w, elem = (gamma, nu), (b, rest)
    else:
        outer_w, elem = (lam, gamma), (rest, b)
    outer = ctx.tensor(outer_w)
    if not outer.is_highest_weight(elem) or outer.wt(elem) != w.weight:
        raise ImageNotHighestWeight(f"{elem} in {outer_w} is not highest weight of weight {w.weight}")
    return first, MultiplicityElement(outer_w, w.weight, elem)


def _alpha(ctx: Context, lam, mu, nu, delta, side: str) -> dict:
    weights = (tuple(lam), tuple(mu), tuple(nu))
    delta = tuple(delta)
    key = ("alpha", side, weights, delta)
    if key not in ctx.cache:
        bij = {w: _split(ctx, weights, w, side) for w in multiplicity_set(ctx, weights, delta)}
        codomain = set()
        if side == "left":
            for gamma, c1 in _mult_sets(ctx, weights[:2]).items():
                codomain.update(itertools.product(c1, multiplicity_set(ctx, (gamma, weights[2]), delta)))
        else:
            for gamma, c1 in _mult_sets(ctx, weights[1:]).items():
                codomain.update(itertools.product(c1, multiplicity_set(ctx, (weights[0], gamma), delta)))
        if set(bij.values()) != codomain or len(codomain) != len(bij):
            raise InternalConsistency(f"alpha ({side}) is not a bijection at {weights} -> {delta}")
        ctx.cache[key] = bij
    return ctx.cache[key]


def alpha1(ctx: Context, lam, mu, nu, delta) -> dict:
    """``C(lam, mu, nu; delta) -> U_gamma C(lam, mu; gamma) x C(gamma, nu; delta)``."""
    return _alpha(ctx, lam, mu, nu, delta, "left")


def alpha2(ctx: Context, lam, mu, nu, delta) -> dict:
    """``C(lam, mu, nu; delta) -> U_gamma C(mu, nu; gamma) x C(lam, gamma; delta)``."""
    return _alpha(ctx, lam, mu, nu, delta, "right")


def associator(ctx: Context, R: SatakeObject, S: SatakeObject, T: SatakeObject) -> SatakeMorphism:
    """``alpha = alpha2 o alpha1^{-1} : (R (x) S) (x) T -> R (x) (S (x) T)``."""
    source = tensor_objects(ctx, tensor_objects(ctx, R, S), T)
    target = tensor_objects(ctx, R, tensor_objects(ctx, S, T))
    maps = {}
    for delta, labels in source.sets.items():
        m = {}
        for (r, s, c1), t, c2 in labels:
            lam, mu = c1.factors
            nu = c2.factors[1]
            inverse = {v: k for k, v in alpha1(ctx, lam, mu, nu, delta).items()}
            w = inverse[(c1, c2)]
            d1, d2 = alpha2(ctx, lam, mu, nu, delta)[w]
            m[((r, s, c1), t, c2)] = (r, (s, t, d1), d2)
        maps[delta] = m
    return SatakeMorphism(source, target, maps)


def verify_pentagon(ctx: Context, lam, mu, nu, delta) -> Counterexample | None:
    """Both routes ``((AB)C)D -> A(B(CD))`` agree on every label."""
    A, B, C, D = (simple_object(w) for w in (lam, mu, nu, delta))
    ab = tensor_objects(ctx, A, B)
    cd = tensor_objects(ctx, C, D)
    bc = tensor_objects(ctx, B, C)
    # top route: alpha_{A,B,CD} o alpha_{AB,C,D}
    top = associator(ctx, A, B, cd).compose(associator(ctx, ab, C, D))
    # bottom route: (1 (x) alpha_{B,C,D}) o alpha_{A,BC,D} o (alpha_{A,B,C} (x) 1)
    bottom = tensor_morphisms(ctx, identity(A), associator(ctx, B, C, D)).compose(
        associator(ctx, A, bc, D).compose(
            tensor_morphisms(ctx, associator(ctx, A, B, C), identity(D))
        )
    )
    weights = tuple(tuple(w) for w in (lam, mu, nu, delta))
    if not top.is_bijection() or not bottom.is_bijection():
        return Counterexample("pentagon", weights, None, "not a bijection", None)
    for eps, m in top.maps.items():
        for label, image in m.items():
            other = bottom.maps[eps][label]
            if image != other:
                return Counterexample("pentagon", weights, label, image, other)
    return None


# ---- commutor -------------------------------------------------------------------


def commutor_objects(ctx: Context, lam, mu) -> dict:
    """``C(lam, mu; nu) -> C(mu, lam; nu)`` for all nu, from the star commutor."""
    lam, mu = tuple(lam), tuple(mu)
    out = {}
    for hw, nu, image in sigma_star(ctx, lam, mu).pairs:
        out[MultiplicityElement((lam, mu), nu, hw)] = MultiplicityElement((mu, lam), nu, image)
    return out


def commutor_morphism(ctx: Context, R: SatakeObject, S: SatakeObject) -> SatakeMorphism:
    """``sigma_{R,S} : R (x) S -> S (x) R`` on labels ``(r, s, c) -> (s, r, sigma c)``."""
    source = tensor_objects(ctx, R, S)
    target = tensor_objects(ctx, S, R)
    maps = {}
    for nu, labels in source.sets.items():
        m = {}
        for r, s, c in labels:
            m[(r, s, c)] = (s, r, commutor_objects(ctx, *c.factors)[c])
        maps[nu] = m
    return SatakeMorphism(source, target, maps)


# ---- the functor Phi ------------------------------------------------------------


def phi(ctx: Context, R: SatakeObject) -> Crystal:
    """Disjoint union of labelled copies of B(lam); elements are ``((lam, r), b)``."""
    parts = [((lam, r), ctx.B(lam)) for lam in R.support for r in R.labels(lam)]
    return disjoint_union(parts, ctx.rd, name="Phi")


def phi_morphism(ctx: Context, f: SatakeMorphism) -> dict:
    """Relabel copies: ``((lam, r), b) -> ((lam, f(r)), b)`` on all of Phi(source)."""
    return {
        ((lam, r), b): ((lam, s), b)
        for lam, m in f.maps.items() for r, s in m.items() for b in ctx.B(lam).elements
    }


def phi_tensor_iso(ctx: Context, R: SatakeObject, S: SatakeObject) -> dict:
    """``Phi(R) (x) Phi(S) -> Phi(R (x) S)`` built from the labelings P_{lam mu}."""
    out = {}
    for lam in R.support:
        for mu in S.support:
            P = ctx.labeling((lam, mu))
            X = ctx.tensor((lam, mu))
            for r in R.labels(lam):
                for s in S.labels(mu):
                    for (x, y), (head, b) in P.items():
                        nu = X.wt(head)
                        c = MultiplicityElement((lam, mu), nu, head)
                        out[(((lam, r), x), ((mu, s), y))] = ((nu, (r, s, c)), b)
    return out


# ---- compatibility of Phi with associators and commutors ---------------------------


def _P(ctx: Context, weights, element):
    head, b = ctx.labeling(weights)[element]
    gamma = ctx.tensor(weights).wt(head)
    return MultiplicityElement(tuple(tuple(w) for w in weights), gamma, head), b


def verify_assoc_compat(ctx: Context, lam, mu, nu) -> Counterexample | None:
    """Pairwise-then-pairwise decomposition against triple decomposition then Q,
    for both bracketings."""
    lam, mu, nu = tuple(lam), tuple(mu), tuple(nu)
    weights = (lam, mu, nu)
    for x, y, z in ctx.tensor(weights).elements:
        Y, Z = _P(ctx, weights, (x, y, z))
        # left bracketing
        c1, b = _P(ctx, (lam, mu), (x, y))
        c2, b2 = _P(ctx, (c1.weight, nu), (b, z))
        down = (*alpha1(ctx, lam, mu, nu, Y.weight)[Y], Z)
        if (c1, c2, b2) != down:
            return Counterexample("assoc-compat", weights, (x, y, z), (c1, c2, b2), down)
        # right bracketing
        d1, b = _P(ctx, (mu, nu), (y, z))
        d2, b2 = _P(ctx, (lam, d1.weight), (x, b))
        down = (*alpha2(ctx, lam, mu, nu, Y.weight)[Y], Z)
        if (d1, d2, b2) != down:
            return Counterexample("assoc-compat", weights, (x, y, z), (d1, d2, b2), down)
    return None


def verify_commutor_compat(ctx: Context, lam, mu) -> Counterexample | None:
    """``P_{mu lam} o sigma = (commutor_objects x id) o P_{lam mu}`` on all of B(lam)(x)B(mu)."""
    lam, mu = tuple(lam), tuple(mu)
    sigma = sigma_star(ctx, lam, mu).extended
    sig_c = commutor_objects(ctx, lam, mu)
    for element in ctx.tensor((lam, mu)).elements:
        lhs = _P(ctx, (mu, lam), sigma[element])
        c, b = _P(ctx, (lam, mu), element)
        rhs = (sig_c[c], b)
        if lhs != rhs:
            return Counterexample("commutor-compat", (lam, mu), element, lhs, rhs)
    return None
