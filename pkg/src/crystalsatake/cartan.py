"""Finite-type root data, weights and Weyl group utilities.

Weights are plain integer tuples in fundamental-weight coordinates,
``w[i-1] = <alpha_i^vee, w>``.  Root-lattice vectors are given in
simple-root coordinates.  Indices are 1-based and follow Bourbaki
numbering, except that G2 uses the fixed matrix ``a[1][2] = -1,
a[2][1] = -3``.

The Cartan matrix is stored with ``cartan[i][j] = <alpha_i^vee, alpha_j>``
so column ``j`` is the simple root ``alpha_j`` in weight coordinates.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache

from .errors import InvalidType

Weight = tuple[int, ...]

_VALID_RANKS = {
    "A": lambda n: n >= 1,
    "B": lambda n: n >= 2,
    "C": lambda n: n >= 2,
    "D": lambda n: n >= 4,
    "E": lambda n: 6 <= n <= 8,
    "F": lambda n: n == 4,
    "G": lambda n: n == 2,
}


@dataclass(frozen=True)
class RootDatum:
    family: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"

    @property
    def indices(self) -> range:
        return range(1, self.rank + 1)

    def a(self, i: int, j: int) -> int:
        """``<alpha_i^vee, alpha_j>`` with 1-based indices."""
        return self.cartan[i - 1][j - 1]

    def simple_root(self, j: int) -> Weight:
        return tuple(self.cartan[k][j - 1] for k in range(self.rank))

    def fundamental_weight(self, i: int) -> Weight:
        return tuple(int(k == i - 1) for k in range(self.rank))

    @cached_property
    def rho(self) -> Weight:
        return (1,) * self.rank

    @cached_property
    def symmetrizer(self) -> tuple[Fraction, ...]:
        """``d_i = (alpha_i, alpha_i) / 2`` normalised so the first entry is 1."""
        d: list[Fraction | None] = [None] * self.rank
        d[0] = Fraction(1)
        stack = [0]
        while stack:
            i = stack.pop()
            for j in range(self.rank):
                if self.cartan[i][j] and d[j] is None:
                    # d_i a_ij = d_j a_ji
                    d[j] = d[i] * self.cartan[i][j] / self.cartan[j][i]
                    stack.append(j)
        return tuple(d)

    @cached_property
    def _inverse(self) -> tuple[tuple[Fraction, ...], ...]:
        return _invert(self.cartan)

    def to_weight(self, root_coords) -> Weight:
        """Convert simple-root coordinates to fundamental-weight coordinates."""
        return tuple(
            sum(self.cartan[i][j] * root_coords[j] for j in range(self.rank))
            for i in range(self.rank)
        )

    @cached_property
    def positive_roots(self) -> tuple[tuple[int, ...], ...]:
        """Positive roots in simple-root coordinates, sorted by height then lexicographically."""
        n = self.rank
        simple = [tuple(int(k == j) for k in range(n)) for j in range(n)]
        found = set(simple)
        frontier = list(simple)
        while frontier:
            nxt = []
            for beta in frontier:
                for i in range(n):
                    pairing = sum(self.cartan[i][j] * beta[j] for j in range(n))
                    image = tuple(beta[k] - pairing * (k == i) for k in range(n))
                    if all(c >= 0 for c in image) and any(image) and image not in found:
                        found.add(image)
                        nxt.append(image)
            frontier = nxt
        return tuple(sorted(found, key=lambda b: (sum(b), b)))

    @cached_property
    def positive_coroots(self) -> tuple[tuple[Fraction, ...], ...]:
        """Coroots of ``positive_roots`` (same order) in simple-coroot coordinates."""
        d = self.symmetrizer
        out = []
        for beta in self.positive_roots:
            norm = sum(
                beta[i] * beta[j] * d[i] * self.cartan[i][j]
                for i in range(self.rank)
                for j in range(self.rank)
            ) / 2
            out.append(tuple(beta[i] * d[i] / norm for i in range(self.rank)))
        return tuple(out)


def _invert(m):
    n = len(m)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(m)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[pivot] = aug[pivot], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


def _chain(n):
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        a[i][i] = 2
        if i + 1 < n:
            a[i][i + 1] = a[i + 1][i] = -1
    return a


@lru_cache(maxsize=None)
def build_root_datum(family: str, rank: int) -> RootDatum:
    """Standard Cartan matrix for a finite type; raises InvalidType otherwise."""
    family = str(family).upper()
    if family not in _VALID_RANKS or not isinstance(rank, int) or not _VALID_RANKS[family](rank):
        raise InvalidType(f"no finite root system of type {family}{rank}")
    n = rank
    if family == "A":
        a = _chain(n)
    elif family == "B":
        a = _chain(n)
        a[n - 1][n - 2] = -2  # alpha_n short
    elif family == "C":
        a = _chain(n)
        a[n - 2][n - 1] = -2  # alpha_n long
    elif family == "D":
        a = _chain(n)
        a[n - 2][n - 1] = a[n - 1][n - 2] = 0
        a[n - 3][n - 1] = a[n - 1][n - 3] = -1
    elif family == "E":
        a = [[0] * n for _ in range(n)]
        for i in range(n):
            a[i][i] = 2
        edges = [(1, 3), (3, 4), (2, 4)] + [(k, k + 1) for k in range(4, n)]
        for i, j in edges:
            a[i - 1][j - 1] = a[j - 1][i - 1] = -1
    elif family == "F":
        a = _chain(4)
        a[2][1] = -2  # alpha_3, alpha_4 short
    else:
        a = [[2, -1], [-3, 2]]
    return RootDatum(family, rank, tuple(tuple(row) for row in a))


def root_coordinates(rd: RootDatum, w) -> tuple[tuple[Fraction, ...], Fraction]:
    """Exact ``c`` with ``w = sum c_i alpha_i``, together with ``height = sum c_i``."""
    inv = rd._inverse
    c = tuple(sum(inv[i][j] * w[j] for j in range(rd.rank)) for i in range(rd.rank))
    return c, sum(c, Fraction(0))


def height(rd: RootDatum, w) -> Fraction:
    return root_coordinates(rd, w)[1]


def is_dominant(w) -> bool:
    return all(c >= 0 for c in w)


def reflect(rd: RootDatum, w, i: int) -> Weight:
    """Simple reflection ``s_i(w) = w - w_i alpha_i``."""
    wi = w[i - 1]
    return tuple(w[k] - wi * rd.cartan[k][i - 1] for k in range(rd.rank))


def dominant_representative(rd: RootDatum, w) -> tuple[Weight, list[int]]:
    """Dominant weight in the W-orbit of ``w`` and the reflections applied to reach it.

    Reflects in the least index with a negative coordinate until none remain.
    """
    w = tuple(w)
    word: list[int] = []
    while True:
        neg = next((k for k, c in enumerate(w) if c < 0), None)
        if neg is None:
            return w, word
        w = reflect(rd, w, neg + 1)
        word.append(neg + 1)


def star_weight(rd: RootDatum, lam) -> Weight:
    """``lambda* = -w0 lambda``."""
    return dominant_representative(rd, tuple(-c for c in lam))[0]


def star_index(rd: RootDatum, i: int) -> int:
    image = star_weight(rd, rd.fundamental_weight(i))
    return image.index(1) + 1


def w0_action(rd: RootDatum, w) -> Weight:
    """Image of an arbitrary weight under the longest element."""
    out = list(w)
    for i in reversed(reduced_word_w0(rd)):
        out = reflect(rd, out, i)
    return tuple(out)


def positive_roots(rd: RootDatum) -> list[Weight]:
    """Positive roots as weights (fundamental coordinates)."""
    return [rd.to_weight(beta) for beta in rd.positive_roots]


@lru_cache(maxsize=None)
def _reduced_word(rd: RootDatum) -> tuple[int, ...]:
    return tuple(dominant_representative(rd, (-1,) * rd.rank)[1])


def reduced_word_w0(rd: RootDatum) -> list[int]:
    return list(_reduced_word(rd))


def weyl_dim(rd: RootDatum, lam) -> int:
    """Weyl dimension formula, exact."""
    num = Fraction(1)
    for cor in rd.positive_coroots:
        top = sum(c * (l + 1) for c, l in zip(cor, lam))
        bottom = sum(cor)
        num *= top / bottom
    assert num.denominator == 1
    return int(num)


def kostant_partition(rd: RootDatum, beta) -> int:
    """Number of multisets of positive roots summing to ``beta`` (simple-root coordinates).

    Plain enumeration: for each positive root in turn choose its multiplicity.
    """
    roots = rd.positive_roots
    beta = tuple(beta)
    if any(b < 0 for b in beta):
        return 0

    @lru_cache(maxsize=None)
    def count(rest, k):
        if not any(rest):
            return 1
        if k == len(roots):
            return 0
        root = roots[k]
        total = 0
        current = rest
        while all(c >= 0 for c in current):
            total += count(current, k + 1)
            current = tuple(c - r for c, r in zip(current, root))
        return total

    return count(beta, 0)


def dominant_weights(rd: RootDatum, max_height) -> list[Weight]:
    """All dominant weights of height at most ``max_height``, lexicographically ordered."""
    heights = [height(rd, rd.fundamental_weight(i)) for i in rd.indices]
    bounds = [int(Fraction(max_height) / h) for h in heights]
    out = []
    for w in itertools.product(*(range(b + 1) for b in bounds)):
        if sum(c * h for c, h in zip(w, heights)) <= max_height:
            out.append(tuple(w))
    return sorted(out)
