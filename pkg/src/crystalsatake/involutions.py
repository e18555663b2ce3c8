"""The Schutzenberger involution, the crystal commutor and coboundary-axiom checks.

Two independent routes to the commutor ``sigma : B(lam) (x) B(mu) -> B(mu) (x) B(lam)``:

* :func:`sigma_star` sends a highest weight element ``b (x) b_mu`` to
  ``b' (x) b_lam`` where ``b'`` is the Kashiwara involution of ``b`` inside
  B(infinity), then extends along components.
* :func:`sigma_xi` is ``x (x) y -> xi(xi(y) (x) xi(x))`` with the outer
  ``xi`` taken componentwise.

The first is authoritative; the second is a cross-check.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import product

from .cartan import Weight, star_index
from .context import Context, canonical_labeling
from .crystal import Crystal, component_isomorphism, highest_weight_elements
from .errors import ImageNotHighestWeight, InternalConsistency, MalformedCrystal, NotInImage


@dataclass
class CommutorTable:
    lam: Weight
    mu: Weight
    pairs: list[tuple[tuple, Weight, tuple]]
    extended: dict = field(default_factory=dict)

    def hw_map(self) -> dict:
        return {hw: image for hw, _, image in self.pairs}


@dataclass
class Counterexample:
    axiom: str
    weights: tuple
    element: object
    lhs: object
    rhs: object


def xi(B: Crystal, head=None) -> dict:
    """Schutzenberger involution on the component of ``head`` (default: B must be connected).

    Built from ``xi(head) = lowest`` and ``xi(f_i b) = e_{i*}(xi(b))``.
    """
    if head is None:
        heads = [b for b, _ in highest_weight_elements(B)]
        if len(heads) != 1:
            raise MalformedCrystal(f"xi needs a connected crystal, found {len(heads)} components")
        head = heads[0]
    comp = B.components()[B.component_index(head)]
    lowest = [b for b in comp if B.is_lowest_weight(b)]
    if len(lowest) != 1:
        raise MalformedCrystal(f"component has {len(lowest)} lowest weight elements")
    rd = B.rd
    dual = {i: star_index(rd, i) for i in rd.indices}
    out = {head: lowest[0]}
    queue = deque([head])
    while queue:
        b = queue.popleft()
        for i in rd.indices:
            c = B.f(i, b)
            if c is None:
                continue
            image = B.e(dual[i], out[b])
            if image is None:
                raise InternalConsistency(f"e_{dual[i]} undefined while building xi")
            if c in out:
                if out[c] != image:
                    raise InternalConsistency(f"xi assigned twice at {c!r}")
            else:
                out[c] = image
                queue.append(c)
    if len(out) != len(comp):
        raise InternalConsistency("xi traversal did not cover the component")
    return out


def xi_componentwise(B: Crystal) -> dict:
    out = {}
    for h, _ in highest_weight_elements(B):
        out.update(xi(B, h))
    return out


def sigma_star(ctx: Context, lam, mu) -> CommutorTable:
    """Commutor via ``iota_mu(b') = iota_lam(b)*`` on highest weight elements."""
    lam, mu = tuple(lam), tuple(mu)
    key = ("sigma", lam, mu)
    if key in ctx.cache:
        return ctx.cache[key]
    g = ctx.graph
    BM = ctx.B(mu)
    X = ctx.tensor((lam, mu))
    Y = ctx.tensor((mu, lam))
    pairs = []
    extended = {}
    for (b, top), nu in highest_weight_elements(X):
        if top != 0:
            raise InternalConsistency(f"highest weight element {(b, top)} is not of the form b (x) b_mu")
        bstar = g.star(b)
        if bstar not in BM:
            raise NotInImage(f"node {b}* = {bstar} is not in B{mu}")
        image = (bstar, 0)
        if not Y.is_highest_weight(image) or Y.wt(image) != nu:
            raise ImageNotHighestWeight(f"{image} is not highest weight of weight {nu}")
        pairs.append(((b, top), nu, image))
        extended.update(component_isomorphism(X, (b, top), Y, image))
    table = CommutorTable(lam, mu, pairs, extended)
    ctx.cache[key] = table
    return table


def sigma_xi(ctx: Context, lam, mu) -> CommutorTable:
    """Commutor as ``xi_{B(mu)(x)B(lam)}(xi(y) (x) xi(x))``."""
    lam, mu = tuple(lam), tuple(mu)
    xi_lam = xi(ctx.B(lam))
    xi_mu = xi(ctx.B(mu))
    X = ctx.tensor((lam, mu))
    outer = xi_componentwise(ctx.tensor((mu, lam)))
    extended = {(x, y): outer[(xi_mu[y], xi_lam[x])] for x, y in X.elements}
    pairs = [(hw, nu, extended[hw]) for hw, nu in highest_weight_elements(X)]
    return CommutorTable(lam, mu, pairs, extended)


def table_diff(a: CommutorTable, b: CommutorTable) -> list[tuple]:
    """Elements on which two commutor tables disagree, as ``(x, a(x), b(x))``."""
    keys = sorted(set(a.extended) | set(b.extended))
    return [(x, a.extended.get(x), b.extended.get(x)) for x in keys
            if a.extended.get(x) != b.extended.get(x)]


def sigma_general(ctx: Context, X: Crystal, Y: Crystal):
    """Commutor ``X (x) Y -> Y (x) X`` for arbitrary crystals of the category.

    Each factor is identified componentwise with canonical copies of B(gamma);
    returns a function on pairs ``(x, y)`` giving ``(y', x')``.
    """
    px = canonical_labeling(ctx, X)
    py = canonical_labeling(ctx, Y)
    back_x = {v: k for k, v in px.items()}
    back_y = {v: k for k, v in py.items()}

    def apply(x, y):
        hx, bx = px[x]
        hy, by = py[y]
        p, q = sigma_star(ctx, X.wt(hx), Y.wt(hy)).extended[(bx, by)]
        return back_y[(hy, p)], back_x[(hx, q)]

    return apply


def verify_symmetry(ctx: Context, lam, mu) -> Counterexample | None:
    forward = sigma_star(ctx, lam, mu).extended
    backward = sigma_star(ctx, mu, lam).extended
    for x, y in forward.items():
        if backward[y] != x:
            return Counterexample("symmetry", (tuple(lam), tuple(mu)), x, backward[y], x)
    return None


def verify_cactus(ctx: Context, lam, mu, nu) -> Counterexample | None:
    """``(sigma_{mu,nu} (x) id) o sigma_{lam, mu(x)nu}`` against
    ``(id (x) sigma_{lam,mu}) o sigma_{lam(x)mu, nu}`` on every element."""
    lam, mu, nu = tuple(lam), tuple(mu), tuple(nu)
    A, C = ctx.B(lam), ctx.B(nu)
    BC = ctx.tensor((mu, nu))
    AB = ctx.tensor((lam, mu))
    s_a_bc = sigma_general(ctx, A, BC)
    s_ab_c = sigma_general(ctx, AB, C)
    s_bc = sigma_star(ctx, mu, nu).extended
    s_ab = sigma_star(ctx, lam, mu).extended
    for x, y, z in product(A.elements, ctx.B(mu).elements, C.elements):
        (y1, z1), x1 = s_a_bc(x, (y, z))
        z2, y2 = s_bc[(y1, z1)]
        path1 = (z2, y2, x1)
        z3, (x3, y3) = s_ab_c((x, y), z)
        y4, x4 = s_ab[(x3, y3)]
        path2 = (z3, y4, x4)
        if path1 != path2:
            return Counterexample("cactus", (lam, mu, nu), (x, y, z), path1, path2)
    return None
