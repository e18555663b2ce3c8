"""Canonical JSON / DOT / TSV renderings of crystals, commutor tables and objects."""
from __future__ import annotations

import json
import os
import tempfile

from .context import Context, weight_key
from .crystal import Crystal
from .involutions import CommutorTable, Counterexample
from .satake import MultiplicityElement, SatakeObject


def to_jsonable(obj):
    """Tuples become lists, named tuples and dataclass-like records become dicts."""
    if isinstance(obj, MultiplicityElement):
        return {"factors": to_jsonable(obj.factors), "weight": list(obj.weight),
                "element": list(obj.element)}
    if isinstance(obj, (tuple, list)):
        return [to_jsonable(x) for x in obj]
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    return obj


def dumps(data) -> str:
    return json.dumps(data, indent=2, ensure_ascii=False) + "\n"


def write_atomic(path: str, text: str) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


# ---- crystals -------------------------------------------------------------------


def _canonical_order(cr: Crystal) -> tuple[list, dict]:
    """Elements sorted by canonical f-word (shorter words first), and their ids."""
    words = cr.fwords()
    order = sorted(cr.elements, key=lambda b: (len(words[b]), words[b]))
    return order, {b: k for k, b in enumerate(order)}


def _sorted_edges(cr: Crystal, ids: dict) -> list[tuple[int, int, int]]:
    return sorted((ids[b], i, ids[c]) for b, c, i in cr.edges())


def crystal_to_dict(cr: Crystal) -> dict:
    words = cr.fwords()
    order, ids = _canonical_order(cr)
    return {
        "elements": [
            {"id": ids[b], "weight": list(cr.wt(b)), "fword": list(words[b])} for b in order
        ],
        "edges": [{"from": p, "to": q, "i": i} for p, i, q in _sorted_edges(cr, ids)],
    }


def crystal_to_dot(cr: Crystal, name: str = "crystal") -> str:
    order, ids = _canonical_order(cr)
    lines = [f'digraph "{name}" {{']
    for b in order:
        lines.append(f'  n{ids[b]} [label="{weight_key(cr.wt(b))} #{ids[b]}"];')
    for p, i, q in _sorted_edges(cr, ids):
        lines.append(f'  n{p} -> n{q} [label="{i}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


# ---- commutor tables ------------------------------------------------------------


def _element_words(ctx: Context, element) -> list[list[int]]:
    return [list(ctx.graph.fword[b]) for b in element]


def _element_from_words(ctx: Context, words) -> tuple[int, ...]:
    return tuple(ctx.graph.node_from_fword(w) for w in words)


def commutor_to_dict(ctx: Context, table: CommutorTable, extended: bool = False) -> dict:
    """Tensor elements are written as lists of canonical f-words, one per factor."""
    data = {
        "lambda": list(table.lam),
        "mu": list(table.mu),
        "pairs": [
            {"hw": _element_words(ctx, hw), "weight": list(nu), "image": _element_words(ctx, im)}
            for hw, nu, im in table.pairs
        ],
    }
    if extended:
        data["extended"] = [
            {"from": _element_words(ctx, x), "to": _element_words(ctx, y)}
            for x, y in sorted(table.extended.items())
        ]
    return data


def commutor_from_dict(ctx: Context, data: dict) -> CommutorTable:
    pairs = [
        (_element_from_words(ctx, p["hw"]), tuple(p["weight"]), _element_from_words(ctx, p["image"]))
        for p in data["pairs"]
    ]
    extended = {
        _element_from_words(ctx, e["from"]): _element_from_words(ctx, e["to"])
        for e in data.get("extended", [])
    }
    return CommutorTable(tuple(data["lambda"]), tuple(data["mu"]), pairs, extended)


# ---- category objects and failures -------------------------------------------------


def satake_object_to_dict(R: SatakeObject) -> dict:
    return {"support": [
        {"weight": list(w), "labels": to_jsonable(list(labels))} for w, labels in R.sets.items()
    ]}


def counterexample_to_dict(ce: Counterexample) -> dict:
    return {
        "axiom": ce.axiom,
        "weights": to_jsonable(ce.weights),
        "element": to_jsonable(ce.element),
        "lhs": to_jsonable(ce.lhs),
        "rhs": to_jsonable(ce.rhs),
    }


def decomposition_tsv(multiplicities: dict) -> str:
    rows = ["weight\tmultiplicity"]
    rows.extend(f"{weight_key(w)}\t{m}" for w, m in sorted(multiplicities.items()))
    return "\n".join(rows) + "\n"
