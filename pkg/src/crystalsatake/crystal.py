"""Finite crystals, tensor products, decomposition and component isomorphisms.

Tensor products follow the convention in which every highest weight
element of ``B(lam) (x) B(mu)`` has the form ``b (x) b_mu``::

    f_i(x (x) y) = x (x) f_i y   if phi_i(y) > eps_i(x)   else  f_i x (x) y
    e_i(x (x) y) = x (x) e_i y   if phi_i(y) >= eps_i(x)  else  e_i x (x) y

Absence of ``e_i b`` / ``f_i b`` (the zero of a crystal) is ``None``.
"""
from __future__ import annotations

from collections import deque
from collections.abc import Callable, Hashable, Sequence

from .cartan import RootDatum, Weight
from .errors import MalformedCrystal, RootDatumMismatch, StructureMismatch

_ABSENT = -1


class Crystal:
    """A finite crystal stored as position-indexed tables.

    ``f_table[i-1][p]`` is the position of ``f_i`` applied to element ``p``
    (or -1); ``e`` is derived as the inverse.  Element labels are arbitrary
    hashables and keep the order they were given in.
    """

    def __init__(
        self,
        rd: RootDatum,
        elements: Sequence[Hashable],
        weights: Sequence[Weight],
        f_table: Sequence[Sequence[int]],
        eps: Sequence[Sequence[int]],
        phi: Sequence[Sequence[int]],
        name: str = "",
    ):
        self.rd = rd
        self.name = name
        self.elements = list(elements)
        self.index = {b: p for p, b in enumerate(self.elements)}
        if len(self.index) != len(self.elements):
            raise MalformedCrystal("duplicate element labels")
        self._wt = [tuple(w) for w in weights]
        self._f = [list(row) for row in f_table]
        self._eps = [list(row) for row in eps]
        self._phi = [list(row) for row in phi]
        self._e = [[_ABSENT] * len(self.elements) for _ in rd.indices]
        for k, row in enumerate(self._f):
            for p, q in enumerate(row):
                if q != _ABSENT:
                    if self._e[k][q] != _ABSENT:
                        raise MalformedCrystal(f"f_{k + 1} is not injective")
                    self._e[k][q] = p
        self.cache: dict = {}

    @classmethod
    def from_functions(
        cls,
        rd: RootDatum,
        elements: Sequence[Hashable],
        f: Callable[[int, Hashable], Hashable | None],
        wt: Callable[[Hashable], Weight],
        eps: Callable[[int, Hashable], int] | None = None,
        phi: Callable[[int, Hashable], int] | None = None,
        name: str = "",
    ) -> "Crystal":
        """Tabulate a crystal given label-level operators.

        When ``eps``/``phi`` are omitted they are taken to be string lengths.
        """
        elements = list(elements)
        index = {b: p for p, b in enumerate(elements)}
        f_table = []
        for i in rd.indices:
            row = []
            for b in elements:
                c = f(i, b)
                row.append(_ABSENT if c is None else index[c])
            f_table.append(row)
        weights = [wt(b) for b in elements]
        if eps is None or phi is None:
            e_table = [[_ABSENT] * len(elements) for _ in rd.indices]
            for k, row in enumerate(f_table):
                for p, q in enumerate(row):
                    if q != _ABSENT:
                        e_table[k][q] = p
            eps_t = [[_string(e_table[k], p) for p in range(len(elements))] for k in range(rd.rank)]
            phi_t = [[_string(f_table[k], p) for p in range(len(elements))] for k in range(rd.rank)]
        else:
            eps_t = [[eps(i, b) for b in elements] for i in rd.indices]
            phi_t = [[phi(i, b) for b in elements] for i in rd.indices]
        return cls(rd, elements, weights, f_table, eps_t, phi_t, name=name)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, b) -> bool:
        return b in self.index

    def __repr__(self) -> str:
        return f"<Crystal {self.name or '?'} of {self.rd} with {len(self)} elements>"

    def f(self, i: int, b):
        q = self._f[i - 1][self.index[b]]
        return None if q == _ABSENT else self.elements[q]

    def e(self, i: int, b):
        q = self._e[i - 1][self.index[b]]
        return None if q == _ABSENT else self.elements[q]

    def wt(self, b) -> Weight:
        return self._wt[self.index[b]]

    def epsilon(self, i: int, b) -> int:
        return self._eps[i - 1][self.index[b]]

    def phi(self, i: int, b) -> int:
        return self._phi[i - 1][self.index[b]]

    def is_highest_weight(self, b) -> bool:
        p = self.index[b]
        return all(row[p] == _ABSENT for row in self._e)

    def is_lowest_weight(self, b) -> bool:
        p = self.index[b]
        return all(row[p] == _ABSENT for row in self._f)

    def edges(self):
        """``(b, f_i b, i)`` triples in element order then index order."""
        for p, b in enumerate(self.elements):
            for k, row in enumerate(self._f):
                if row[p] != _ABSENT:
                    yield b, self.elements[row[p]], k + 1

    def relabel(self, func: Callable[[Hashable], Hashable], name: str | None = None) -> "Crystal":
        return Crystal(
            self.rd, [func(b) for b in self.elements], self._wt, self._f, self._eps, self._phi,
            name=self.name if name is None else name,
        )

    def components(self) -> list[list]:
        """Connected components, each listed in element order."""
        if "components" not in self.cache:
            comp = [-1] * len(self)
            groups = []
            for start in range(len(self)):
                if comp[start] != -1:
                    continue
                members = []
                comp[start] = len(groups)
                queue = deque([start])
                while queue:
                    p = queue.popleft()
                    members.append(p)
                    for table in (*self._f, *self._e):
                        q = table[p]
                        if q != _ABSENT and comp[q] == -1:
                            comp[q] = len(groups)
                            queue.append(q)
                groups.append(sorted(members))
            self.cache["components"] = [[self.elements[p] for p in g] for g in groups]
            self.cache["component_of"] = {
                self.elements[p]: k for k, g in enumerate(groups) for p in g
            }
        return self.cache["components"]

    def component_index(self, b) -> int:
        self.components()
        return self.cache["component_of"][b]

    def fwords(self) -> dict:
        """Canonical f-word of every element: breadth-first from the highest weight
        elements (in element order), trying indices in ascending order."""
        if "fwords" not in self.cache:
            words = {}
            for h, _ in highest_weight_elements(self):
                words[h] = ()
                queue = deque([h])
                while queue:
                    b = queue.popleft()
                    for i in self.rd.indices:
                        c = self.f(i, b)
                        if c is not None and c not in words:
                            words[c] = words[b] + (i,)
                            queue.append(c)
            self.cache["fwords"] = words
        return self.cache["fwords"]

    def check_axioms(self) -> None:
        """Raise MalformedCrystal unless the normal-crystal axioms hold."""
        for p, b in enumerate(self.elements):
            for k in range(self.rd.rank):
                i = k + 1
                q = self._f[k][p]
                if q != _ABSENT:
                    alpha = self.rd.simple_root(i)
                    if self._wt[q] != tuple(x - a for x, a in zip(self._wt[p], alpha)):
                        raise MalformedCrystal(f"wt(f_{i} {b!r}) is wrong")
                    if self._e[k][q] != p:
                        raise MalformedCrystal(f"e_{i} f_{i} {b!r} != {b!r}")
                if self._phi[k][p] - self._eps[k][p] != self._wt[p][k]:
                    raise MalformedCrystal(f"phi_{i} - eps_{i} != <h_{i}, wt> at {b!r}")
                if self._eps[k][p] != _string(self._e[k], p) or self._phi[k][p] != _string(self._f[k], p):
                    raise MalformedCrystal(f"eps_{i}/phi_{i} are not string lengths at {b!r}")

    def table(self) -> list[tuple]:
        """Full operator table, for elementwise comparison of crystals."""
        return [
            (b, self._wt[p],
             tuple(None if r[p] == _ABSENT else self.elements[r[p]] for r in self._f),
             tuple(None if r[p] == _ABSENT else self.elements[r[p]] for r in self._e),
             tuple(r[p] for r in self._eps), tuple(r[p] for r in self._phi))
            for p, b in enumerate(self.elements)
        ]


def _string(table, p) -> int:
    n = 0
    while table[p] != _ABSENT:
        p = table[p]
        n += 1
    return n


def tensor2(B: Crystal, C: Crystal) -> Crystal:
    """Kashiwara tensor product ``B (x) C``; labels are pairs ``(x, y)``."""
    if B.rd != C.rd:
        raise RootDatumMismatch(f"{B.rd} vs {C.rd}")
    rd = B.rd
    nb, nc = len(B), len(C)
    elements = [(x, y) for x in B.elements for y in C.elements]
    weights = [
        tuple(a + b for a, b in zip(B._wt[p], C._wt[q])) for p in range(nb) for q in range(nc)
    ]
    f_t, eps_t, phi_t = [], [], []
    for k in range(rd.rank):
        bf, cf = B._f[k], C._f[k]
        be, bp, ce, cp = B._eps[k], B._phi[k], C._eps[k], C._phi[k]
        frow, erow, prow = [], [], []
        for p in range(nb):
            for q in range(nc):
                if cp[q] > be[p]:
                    fq = cf[q]
                    frow.append(_ABSENT if fq == _ABSENT else p * nc + fq)
                else:
                    fp = bf[p]
                    frow.append(_ABSENT if fp == _ABSENT else fp * nc + q)
                erow.append(max(ce[q], be[p] - C._wt[q][k]))
                prow.append(max(bp[p], cp[q] + B._wt[p][k]))
        f_t.append(frow)
        eps_t.append(erow)
        phi_t.append(prow)
    out = Crystal(rd, elements, weights, f_t, eps_t, phi_t, name=f"{B.name}(x){C.name}")
    _check_e_rule(B, C, out)
    return out


def _check_e_rule(B: Crystal, C: Crystal, out: Crystal) -> None:
    # e is stored as the inverse of f; confirm it agrees with the e-rule.
    nc = len(C)
    for k in range(out.rd.rank):
        for p in range(len(B)):
            for q in range(nc):
                if C._phi[k][q] >= B._eps[k][p]:
                    eq = C._e[k][q]
                    expect = _ABSENT if eq == _ABSENT else p * nc + eq
                else:
                    ep = B._e[k][p]
                    expect = _ABSENT if ep == _ABSENT else ep * nc + q
                if out._e[k][p * nc + q] != expect:
                    raise MalformedCrystal("tensor e-rule disagrees with inverse of f-rule")


def tensor_n(crystals: Sequence[Crystal], bracketing: str = "left") -> Crystal:
    """Unbracketed product; elements are flat tuples, one entry per factor."""
    if not crystals:
        raise ValueError("need at least one factor")
    if bracketing == "left":
        out = crystals[0].relabel(lambda b: (b,))
        for C in crystals[1:]:
            out = tensor2(out, C).relabel(lambda pair: pair[0] + (pair[1],))
    elif bracketing == "right":
        out = crystals[-1].relabel(lambda b: (b,))
        for B in reversed(crystals[:-1]):
            out = tensor2(B, out).relabel(lambda pair: (pair[0],) + pair[1])
        # present in the same element order as the left-nested product
        out = _reorder(out, sorted(out.elements, key=_lex_key(crystals)))
    else:
        raise ValueError(bracketing)
    out.name = "(x)".join(c.name for c in crystals)
    return out


def _lex_key(crystals):
    return lambda t: tuple(c.index[x] for c, x in zip(crystals, t))


def _reorder(cr: Crystal, order: list) -> Crystal:
    pos = [cr.index[b] for b in order]
    inv = {p: k for k, p in enumerate(pos)}

    def move(row):
        return [_ABSENT if row[p] == _ABSENT else inv[row[p]] for p in pos]

    return Crystal(
        cr.rd, order, [cr._wt[p] for p in pos], [move(r) for r in cr._f],
        [[r[p] for p in pos] for r in cr._eps], [[r[p] for p in pos] for r in cr._phi],
        name=cr.name,
    )


def highest_weight_elements(B: Crystal) -> list[tuple]:
    """All ``(b, wt b)`` with every ``e_i b`` absent, in element order."""
    if "hw" not in B.cache:
        B.cache["hw"] = [(b, B.wt(b)) for b in B.elements if B.is_highest_weight(b)]
    return B.cache["hw"]


def decompose(B: Crystal) -> dict[Weight, list]:
    """Highest weight elements grouped by weight (weights in lexicographic order)."""
    hw = set(b for b, _ in highest_weight_elements(B))
    for comp in B.components():
        heads = [b for b in comp if b in hw]
        if len(heads) != 1:
            raise MalformedCrystal(f"component with {len(heads)} highest weight elements")
    out: dict[Weight, list] = {}
    for b, w in highest_weight_elements(B):
        out.setdefault(w, []).append(b)
    return dict(sorted(out.items()))


def component_isomorphism(B: Crystal, b, C: Crystal, c) -> dict:
    """The crystal isomorphism from the component of ``b`` to that of ``c`` sending b to c."""
    if B.wt(b) != C.wt(c):
        raise StructureMismatch(f"weights differ: {B.wt(b)} vs {C.wt(c)}")
    iso = {b: c}
    queue = deque([(b, c)])
    while queue:
        x, y = queue.popleft()
        if B.wt(x) != C.wt(y):
            raise StructureMismatch(f"weight mismatch at {x!r} -> {y!r}")
        for i in B.rd.indices:
            if B.epsilon(i, x) != C.epsilon(i, y) or B.phi(i, x) != C.phi(i, y):
                raise StructureMismatch(f"string lengths differ at {x!r} -> {y!r}")
            for op_b, op_c in ((B.f, C.f), (B.e, C.e)):
                x2, y2 = op_b(i, x), op_c(i, y)
                if (x2 is None) != (y2 is None):
                    raise StructureMismatch(f"operator {i} defined on one side only at {x!r}")
                if x2 is None:
                    continue
                if x2 in iso:
                    if iso[x2] != y2:
                        raise StructureMismatch(f"traversals diverge at {x2!r}")
                else:
                    iso[x2] = y2
                    queue.append((x2, y2))
    if len(set(iso.values())) != len(iso):
        raise StructureMismatch("map is not injective")
    return iso


def disjoint_union(parts: Sequence[tuple[Hashable, Crystal]], rd: RootDatum, name: str = "") -> Crystal:
    """Union of crystals; an element ``b`` of the part tagged ``t`` becomes ``(t, b)``."""
    elements, weights = [], []
    f_t = [[] for _ in rd.indices]
    eps_t = [[] for _ in rd.indices]
    phi_t = [[] for _ in rd.indices]
    offset = 0
    for tag, C in parts:
        if C.rd != rd:
            raise RootDatumMismatch(f"{C.rd} vs {rd}")
        elements.extend((tag, b) for b in C.elements)
        weights.extend(C._wt)
        for k in range(rd.rank):
            f_t[k].extend(_ABSENT if q == _ABSENT else q + offset for q in C._f[k])
            eps_t[k].extend(C._eps[k])
            phi_t[k].extend(C._phi[k])
        offset += len(C)
    return Crystal(rd, elements, weights, f_t, eps_t, phi_t, name=name)


def is_crystal_morphism(B: Crystal, C: Crystal, mapping: dict) -> bool:
    """True when ``mapping`` (defined on all of B) commutes with e_i, f_i, wt, eps_i, phi_i."""
    for x in B.elements:
        y = mapping[x]
        if B.wt(x) != C.wt(y):
            return False
        for i in B.rd.indices:
            if B.epsilon(i, x) != C.epsilon(i, y) or B.phi(i, x) != C.phi(i, y):
                return False
            for op_b, op_c in ((B.f, C.f), (B.e, C.e)):
                x2, y2 = op_b(i, x), op_c(i, y)
                if (x2 is None) != (y2 is None) or (x2 is not None and mapping[x2] != y2):
                    return False
    return True
