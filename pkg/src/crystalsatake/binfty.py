"""Truncated model of B(infinity), its star operators and the Kashiwara involution.

B(infinity) is realised inside a tensor product of elementary crystals
``b_{j_1}(-a_1) (x) ... (x) b_{j_L}(-a_L)`` read against a generation word
``J = (j_1, ..., j_L)`` made of repeated reduced words of ``w0``; the
elementary factors sit to the left of the (implicit) ``u_inf`` factor as
required by the tensor convention of :mod:`crystalsatake.crystal`.  A node
is the coordinate tuple ``(a_1, ..., a_L)``; its integer id is its
breadth-first discovery position, so ids are stable as the graph grows.

The star structure comes from the strict embeddings
``Psi_i : B(inf) -> B_i (x) B(inf)``, ``b -> b_i(-m) (x) b~``, computed by
recursion along f-edges and memoised per node.
"""
from __future__ import annotations

from collections import defaultdict

from .cartan import RootDatum, Weight, height, reduced_word_w0, star_weight
from .crystal import Crystal
from .errors import DepthExceeded, FidelityOverflow, InternalConsistency

NEG_INF = float("-inf")

DEFAULT_MAX_LETTERS = 4096


class BInftyGraph:
    """Depth-truncated B(infinity) with ordinary and star operators.

    Node 0 is ``u_inf``.  ``f_i`` is tabulated for nodes of depth < ``depth``;
    ``e_i`` (its inverse) and ``eps_i`` are known for every node.
    """

    def __init__(self, rd: RootDatum, max_letters: int = DEFAULT_MAX_LETTERS):
        self.rd = rd
        self.block = tuple(reduced_word_w0(rd))
        self.word: tuple[int, ...] = self.block
        self.max_letters = max_letters
        self.depth = 0
        zero = (0,) * len(self.word)
        self.coords: list[tuple[int, ...]] = [zero]
        self.index: dict[tuple[int, ...], int] = {zero: 0}
        self.node_depth = [0]
        self.offset: list[tuple[int, ...]] = [(0,) * rd.rank]
        self.fword: list[tuple[int, ...]] = [()]
        self.levels: list[list[int]] = [[0]]
        self._f: list[dict[int, int]] = [{}]
        self._e: list[dict[int, int]] = [{}]
        self._eps: list[tuple[int, ...]] = [(0,) * rd.rank]
        self._psi: dict[tuple[int, int], tuple[int, int]] = {}
        self._psi_inv: dict[tuple[int, int, int], int] = {}
        self._psi_depth = -1
        self._star: dict[int, int] = {0: 0}
        self.frozen = False
        self._extend_psi()

    def __len__(self) -> int:
        return len(self.coords)

    def __repr__(self) -> str:
        return f"<BInftyGraph {self.rd} depth={self.depth} nodes={len(self)} letters={len(self.word)}>"

    # ---- elementary tensor fold -------------------------------------------------

    def _fold(self, coords, i):
        """eps_i of every proper prefix (eps_prefix[k] covers factors before k) and of the whole product."""
        cartan_row = self.rd.cartan[i - 1]
        eps_prefix = []
        eps = NEG_INF
        for j, a in zip(self.word, coords):
            eps_prefix.append(eps)
            wt_pair = -a * cartan_row[j - 1]
            x_eps = a if j == i else NEG_INF
            eps = max(x_eps, eps - wt_pair)
        return eps_prefix, eps

    def _apply_f(self, coords, i):
        eps_prefix, _ = self._fold(coords, i)
        for k in range(len(coords) - 1, -1, -1):
            j = self.word[k]
            x_phi = -coords[k] if j == i else NEG_INF
            if k == 0 or x_phi > eps_prefix[k]:
                if j != i:
                    return None
                out = list(coords)
                out[k] += 1
                return tuple(out)
        return None

    def _eps_of(self, coords, i) -> int:
        eps = self._fold(coords, i)[1]
        if eps < 0:
            raise InternalConsistency(f"negative eps_{i} at {coords}")
        return int(eps)

    # ---- generation -------------------------------------------------------------

    def extend(self, depth: int) -> None:
        """Grow the truncation to ``depth``, lengthening the word when the guard trips."""
        if depth <= self.depth:
            return
        if self.frozen:
            raise DepthExceeded(f"graph is frozen at depth {self.depth}; {depth} requested")
        needed = self.block * max(depth, 1)
        if len(needed) > len(self.word):
            self._pad(len(needed))
        while self.depth < depth:
            self._next_level()
        self._extend_psi()

    def _pad(self, letters: int) -> None:
        if letters > self.max_letters:
            raise FidelityOverflow(
                f"generation word would need {letters} letters (max {self.max_letters})"
            )
        reps = -(-letters // len(self.block))
        self.word = self.block * reps
        extra = len(self.word) - len(self.coords[0])
        self.coords = [c + (0,) * extra for c in self.coords]
        self.index = {c: k for k, c in enumerate(self.coords)}

    def _touches_last_block(self, coords) -> bool:
        return any(coords[len(coords) - len(self.block):])

    def _next_level(self) -> None:
        while True:
            frontier = self.levels[self.depth]
            results = []
            overflow = False
            for node in frontier:
                for i in self.rd.indices:
                    new = self._apply_f(self.coords[node], i)
                    if new is None:
                        raise InternalConsistency(f"f_{i} undefined on B(inf) node {node}")
                    if self._touches_last_block(new):
                        overflow = True
                        break
                    results.append((node, i, new))
                if overflow:
                    break
            if not overflow:
                break
            self._pad(2 * len(self.word))
        level = []
        for node, i, new in results:
            if new not in self.index:
                nid = len(self.coords)
                self.index[new] = nid
                self.coords.append(new)
                self.node_depth.append(self.depth + 1)
                self.offset.append(tuple(
                    o + int(k == i - 1) for k, o in enumerate(self.offset[node])
                ))
                self.fword.append(self.fword[node] + (i,))
                self._f.append({})
                self._e.append({})
                self._eps.append(tuple(self._eps_of(new, k) for k in self.rd.indices))
                level.append(nid)
            nid = self.index[new]
            self._f[node][i] = nid
            if i in self._e[nid]:
                raise InternalConsistency(f"f_{i} not injective at node {nid}")
            self._e[nid][i] = node
        self.levels.append(level)
        self.depth += 1

    def freeze(self) -> None:
        """Precompute every memo reachable at this depth and forbid further growth."""
        for b in range(len(self)):
            self.star(b)
        self.frozen = True

    # ---- ordinary structure -----------------------------------------------------

    def f(self, i: int, b: int) -> int:
        if self.node_depth[b] >= self.depth:
            raise DepthExceeded(f"f_{i} of node {b} lies beyond depth {self.depth}")
        return self._f[b][i]

    def e(self, i: int, b: int) -> int | None:
        return self._e[b].get(i)

    def epsilon(self, i: int, b: int) -> int:
        return self._eps[b][i - 1]

    def weight(self, b: int) -> Weight:
        """Weight of a node: ``-(offset)`` converted to fundamental coordinates."""
        return tuple(-x for x in self.rd.to_weight(self.offset[b]))

    def phi(self, i: int, b: int) -> int:
        return self.epsilon(i, b) + self.weight(b)[i - 1]

    def node_from_fword(self, word) -> int:
        """Follow ``f_{w_1}`` first, then ``f_{w_2}``, ... from ``u_inf``."""
        b = 0
        for i in word:
            b = self.f(i, b)
        return b

    def nodes_by_offset(self) -> dict[tuple[int, ...], list[int]]:
        out: dict[tuple[int, ...], list[int]] = defaultdict(list)
        for b, beta in enumerate(self.offset):
            out[beta].append(b)
        return dict(out)

    # ---- star structure ---------------------------------------------------------

    def _extend_psi(self) -> None:
        rd = self.rd
        for d in range(self._psi_depth + 1, self.depth + 1):
            for b in self.levels[d]:
                for i in rd.indices:
                    if b == 0:
                        image = (0, 0)
                    else:
                        candidates = set()
                        for j, c in sorted(self._e[b].items()):
                            candidates.add(self._psi_step(c, i, j))
                        if len(candidates) != 1:
                            raise InternalConsistency(
                                f"Psi_{i} of node {b} depends on the path: {sorted(candidates)}"
                            )
                        image = candidates.pop()
                    self._psi[(b, i)] = image
                    key = (i,) + image
                    if key in self._psi_inv:
                        raise InternalConsistency(f"Psi_{i} not injective at node {b}")
                    self._psi_inv[key] = b
            self._psi_depth = d

    def _psi_step(self, c: int, i: int, j: int) -> tuple[int, int]:
        # f_j on b_i(-m) (x) c~ where (c~, m) = Psi_i(c)
        ct, m = self._psi[(c, i)]
        left_eps = m if j == i else NEG_INF
        if self.phi(j, ct) > left_eps:
            return self.f(j, ct), m
        return ct, m + 1

    def psi_embed(self, b: int, i: int) -> tuple[int, int]:
        """``Psi_i(b) = b_i(-m) (x) b~``, returned as ``(b~, m)``."""
        if self.node_depth[b] > self.depth:
            raise DepthExceeded(f"node {b} beyond depth {self.depth}")
        return self._psi[(b, i)]

    def eps_star(self, b: int, i: int) -> int:
        return self.psi_embed(b, i)[1]

    def f_star(self, b: int, i: int) -> int:
        if self.node_depth[b] + 1 > self.depth:
            raise DepthExceeded(f"f*_{i} of node {b} lies beyond depth {self.depth}")
        bt, m = self._psi[(b, i)]
        try:
            return self._psi_inv[(i, bt, m + 1)]
        except KeyError:
            raise InternalConsistency(f"no preimage for f*_{i} of node {b}") from None

    def e_star(self, b: int, i: int) -> int | None:
        bt, m = self._psi[(b, i)]
        if m == 0:
            return None
        return self._psi_inv[(i, bt, m - 1)]

    def star(self, b: int) -> int:
        """Kashiwara involution: replay the canonical f-word with star operators."""
        if b not in self._star:
            x = 0
            for i in self.fword[b]:
                x = self.f_star(x, i)
            self._star[b] = x
        return self._star[b]


def generate_binfty(rd: RootDatum, depth: int, max_letters: int = DEFAULT_MAX_LETTERS) -> BInftyGraph:
    """Depth-``depth`` truncation of B(infinity) with all Psi-memos filled."""
    if depth < 0:
        raise ValueError("depth must be non-negative")
    g = BInftyGraph(rd, max_letters=max_letters)
    g.extend(depth)
    return g


def lowest_depth(rd: RootDatum, lam) -> int:
    """Depth of the lowest element of B(lam): ``height(lam - w0 lam)``."""
    h = height(rd, tuple(a + b for a, b in zip(lam, star_weight(rd, lam))))
    assert h.denominator == 1
    return int(h)


def highest_weight_crystal(g: BInftyGraph, lam) -> Crystal:
    """B(lam) carved out of B(inf) as ``{b : eps*_i(b) <= lam_i for all i}``.

    Element labels are node ids, so ``iota`` is the identity inclusion.
    """
    lam = tuple(lam)
    rd = g.rd
    top = lowest_depth(rd, lam)
    if g.depth < top:
        raise DepthExceeded(f"B{lam} needs depth {top}, graph has {g.depth}")
    members = [
        b for d in range(top + 1) for b in g.levels[d]
        if all(g.eps_star(b, i) <= lam[i - 1] for i in rd.indices)
    ]
    member_set = set(members)

    def f(i, b):
        if g.node_depth[b] >= top:
            return None
        c = g.f(i, b)
        return c if c in member_set else None

    def wt(b):
        return tuple(l + w for l, w in zip(lam, g.weight(b)))

    def phi(i, b):
        return g.epsilon(i, b) + wt(b)[i - 1]

    return Crystal.from_functions(
        rd, members, f, wt, eps=g.epsilon, phi=phi, name="B(" + ",".join(map(str, lam)) + ")"
    )


def iota(g: BInftyGraph, lam, b: int) -> int:
    """Embedding of B(lam) into B(inf); the identity on node ids."""
    return b
