"""JSON formats for drawings and for every computed object."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .decomposition import TreeDecomposition
from .drawing import ConvexDrawing
from .errors import InvalidInputError
from .oracles import OracleResult
from .separation import Separation
from .triangulation import SplitRecord, Triangulation


def _is_int(x: Any) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def drawing_from_obj(obj: Any) -> ConvexDrawing:
    if not isinstance(obj, dict) or "n" not in obj or "edges" not in obj:
        raise InvalidInputError('drawing JSON must be an object with "n" and "edges"')
    n = obj["n"]
    if not _is_int(n) or n < 0:
        raise InvalidInputError(f'"n" must be a non-negative integer, got {n!r}')
    raw = obj["edges"]
    if not isinstance(raw, list):
        raise InvalidInputError('"edges" must be a list of [i, j] pairs')
    pairs = []
    for item in raw:
        if not (isinstance(item, list) and len(item) == 2 and all(_is_int(x) for x in item)):
            raise InvalidInputError(f"edge {item!r} is not a pair of integers")
        pairs.append(item)
    return ConvexDrawing.from_edges(n, pairs)


def parse_drawing(text: str) -> ConvexDrawing:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidInputError(f"malformed JSON: {exc}") from None
    return drawing_from_obj(obj)


def read_json(path: str | Path) -> Any:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InvalidInputError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidInputError(f"malformed JSON in {path}: {exc}") from None


def load_drawing(path: str | Path) -> ConvexDrawing:
    return drawing_from_obj(read_json(path))


def drawing_to_obj(d: ConvexDrawing) -> dict:
    return {"n": d.n, "edges": [list(e) for e in sorted(d.edges)]}


def emit_drawing(d: ConvexDrawing) -> str:
    return json.dumps(drawing_to_obj(d))


def trace_to_obj(trace: list[SplitRecord]) -> list[dict]:
    return [
        {
            "active_link": list(r.active_link),
            "case": r.case_tag,
            "split_vertex": r.split_vertex,
            "new_links": [list(x) for x in r.new_links],
            "piercing": list(r.piercing),
            "active_piercing": r.active_piercing,
        }
        for r in trace
    ]


def triangulation_to_obj(t: Triangulation, trace: list[SplitRecord] | None = None) -> dict:
    obj = {
        "n": t.n,
        "method": t.method,
        "k": t.k,
        "inner_links": [list(l) for l in t.inner_links],
        "edge_pn": t.edge_pn,
        "triangle_pn": t.triangle_pn,
    }
    if trace is not None:
        obj["trace"] = trace_to_obj(trace)
    return obj


def inner_links_from_obj(obj: Any) -> list[tuple[int, int]]:
    """Inner links of a triangulation JSON object (the only part rendering needs)."""
    if not isinstance(obj, dict) or not isinstance(obj.get("inner_links"), list):
        raise InvalidInputError('triangulation JSON must contain "inner_links"')
    links = []
    for item in obj["inner_links"]:
        if not (isinstance(item, list) and len(item) == 2 and all(_is_int(x) for x in item)):
            raise InvalidInputError(f"link {item!r} is not a pair of integers")
        a, b = sorted(item)
        links.append((a, b))
    return sorted(links)


def td_to_obj(td: TreeDecomposition) -> dict:
    return {
        "bags": [list(b) for b in td.bags],
        "tree": [list(e) for e in td.tree_edges],
        "width": td.width,
        "provenance": [
            {"kind": o.kind, "face": list(o.face), "index": o.index} for o in td.provenance
        ],
    }


def td_from_obj(obj: Any) -> TreeDecomposition:
    if not isinstance(obj, dict) or "bags" not in obj or "tree" not in obj:
        raise InvalidInputError('tree decomposition JSON needs "bags" and "tree"')
    try:
        bags = tuple(tuple(sorted(int(v) for v in b)) for b in obj["bags"])
        tree = tuple(tuple(int(x) for x in e) for e in obj["tree"])
    except (TypeError, ValueError):
        raise InvalidInputError("bags and tree edges must hold integers") from None
    return TreeDecomposition(bags=bags, tree_edges=tree)


def separation_to_obj(s: Separation) -> dict:
    return {"A": list(s.A), "B": list(s.B), "order": s.order, "balance": s.balance}


def oracle_to_obj(kind: str, r: OracleResult) -> dict:
    witness: Any = r.witness
    if kind == "sep":
        witness = {"A": list(r.witness[0]), "B": list(r.witness[1])}
    else:
        witness = list(witness)
    return {"oracle": kind, "value": r.value, "witness": witness, "method": r.method}
