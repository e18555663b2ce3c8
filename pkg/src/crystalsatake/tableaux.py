"""Semistandard tableaux crystals in type A and a Littlewood-Richardson oracle."""
from __future__ import annotations

from .cartan import RootDatum, Weight
from .crystal import Crystal, highest_weight_elements, tensor2

Tableau = tuple[tuple[int, ...], ...]


def _require_type_a(rd: RootDatum) -> None:
    if rd.family != "A":
        raise ValueError(f"tableaux model needs type A, got {rd}")


def partition_from_weight(lam, rank: int) -> tuple[int, ...]:
    """``p_k = lam_k + ... + lam_rank`` for k = 1..rank, plus a trailing 0.

    The zero weight gives the empty partition.
    """
    if not any(lam):
        return ()
    parts = [sum(lam[k:]) for k in range(rank)]
    return tuple(parts) + (0,)


def weight_from_partition(shape, rank: int) -> Weight:
    p = list(shape) + [0] * (rank + 1 - len(shape))
    return tuple(p[k] - p[k + 1] for k in range(rank))


def semistandard_tableaux(shape, max_entry: int) -> list[Tableau]:
    """All SSYT of ``shape`` with entries in 1..max_entry, row by row."""
    shape = [p for p in shape if p > 0]
    out: list[Tableau] = []

    def rows_below(prev_row, length):
        # weakly increasing rows, each entry strictly greater than the one above
        def rec(pos, acc):
            if pos == length:
                yield tuple(acc)
                return
            start = max(acc[-1] if acc else 1, prev_row[pos] + 1 if prev_row else 1)
            for v in range(start, max_entry + 1):
                acc.append(v)
                yield from rec(pos + 1, acc)
                acc.pop()

        return rec(0, [])

    def build(k, acc):
        if k == len(shape):
            out.append(tuple(acc))
            return
        prev = acc[-1] if acc else None
        for row in rows_below(prev, shape[k]):
            acc.append(row)
            build(k + 1, acc)
            acc.pop()

    build(0, [])
    return out


def reading_word(t: Tableau) -> list[tuple[int, int]]:
    """Cell positions in reading order: bottom row first, each row left to right."""
    return [(r, c) for r in range(len(t) - 1, -1, -1) for c in range(len(t[r]))]


def _signature(t: Tableau, i: int):
    """Uncancelled cells for index i after removing adjacent (i+1, i) pairs.

    Returns (unmatched i cells, unmatched i+1 cells), both in reading order.
    """
    open_cells: list[tuple[int, int]] = []
    lone_i: list[tuple[int, int]] = []
    for r, c in reading_word(t):
        v = t[r][c]
        if v == i + 1:
            open_cells.append((r, c))
        elif v == i:
            if open_cells:
                open_cells.pop()
            else:
                lone_i.append((r, c))
    return lone_i, open_cells


def _replace(t: Tableau, cell, value) -> Tableau:
    r, c = cell
    row = list(t[r])
    row[c] = value
    return t[:r] + (tuple(row),) + t[r + 1:]


def tableau_f(t: Tableau, i: int) -> Tableau | None:
    lone_i, _ = _signature(t, i)
    return _replace(t, lone_i[-1], i + 1) if lone_i else None


def tableau_e(t: Tableau, i: int) -> Tableau | None:
    _, lone_next = _signature(t, i)
    return _replace(t, lone_next[0], i) if lone_next else None


def tableau_weight(t: Tableau, rank: int) -> Weight:
    content = [0] * (rank + 2)
    for row in t:
        for v in row:
            content[v] += 1
    return tuple(content[k] - content[k + 1] for k in range(1, rank + 1))


def ssyt_crystal_of_shape(rd: RootDatum, shape) -> Crystal:
    _require_type_a(rd)
    n = rd.rank
    elements = semistandard_tableaux(shape, n + 1)
    return Crystal.from_functions(
        rd,
        elements,
        lambda i, t: tableau_f(t, i),
        lambda t: tableau_weight(t, n),
        eps=lambda i, t: len(_signature(t, i)[1]),
        phi=lambda i, t: len(_signature(t, i)[0]),
        name="SSYT" + str(tuple(p for p in shape if p)),
    )


def ssyt_crystal(rd: RootDatum, lam) -> Crystal:
    """Tableau model of B(lam) in type A."""
    return ssyt_crystal_of_shape(rd, partition_from_weight(lam, rd.rank))


def yamanouchi(shape) -> Tableau:
    return tuple(tuple([k + 1] * p) for k, p in enumerate(shape) if p > 0)


def lr_oracle(rd: RootDatum, lam, mu, nu) -> int:
    """Number of highest weight elements of weight nu in SSYT(lam) (x) SSYT(mu)."""
    _require_type_a(rd)
    product = tensor2(ssyt_crystal(rd, lam), ssyt_crystal(rd, mu))
    nu = tuple(nu)
    return sum(1 for _, w in highest_weight_elements(product) if w == nu)
