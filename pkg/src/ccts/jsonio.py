"""Instance and solution wire formats.

Instance documents look like

    {"name": "...",
     "base_graph": {"n": 6, "edges": [[0,1], ...], "labels": ["a", ...]},
     "swap_graph": {"k": 3, "edges": [[1,2], ...], "labels": ["blank", ...]},
     "initial": [1, 2, ...],
     "final":   [2, 1, ...]}

Solutions are ``{"instance": name, "swaps": [[u,v], ...]}``.  Unknown fields
(notably "layout", which only the web client reads) are ignored.
"""
from __future__ import annotations

import json

from .errors import ParseError
from .model import BaseGraph, Instance, SwapGraph


def _as_int(value, where):
    # bool is an int subclass; a stray true/false should not pass as a number
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParseError(f"{where}: expected an integer, got {value!r}")
    return value


def _int_list(data, field, where):
    raw = data.get(field)
    if not isinstance(raw, list):
        raise ParseError(f"{where}.{field}: expected a list of integers")
    return tuple(_as_int(x, f"{where}.{field}[{i}]") for i, x in enumerate(raw))


def _edge_list(data, where):
    raw = data.get("edges")
    if not isinstance(raw, list):
        raise ParseError(f"{where}.edges: expected a list of pairs")
    edges = []
    for i, pair in enumerate(raw):
        spot = f"{where}.edges[{i}]"
        if not isinstance(pair, list) or len(pair) != 2:
            raise ParseError(f"{spot}: expected a pair [a, b]")
        edges.append((_as_int(pair[0], spot), _as_int(pair[1], spot)))
    return tuple(edges)


def _labels(data, where):
    raw = data.get("labels")
    if raw is None:
        return None
    if not isinstance(raw, list) or not all(isinstance(s, str) for s in raw):
        raise ParseError(f"{where}.labels: expected a list of strings")
    return tuple(raw)


def instance_from_dict(data):
    if not isinstance(data, dict):
        raise ParseError("instance: expected a JSON object")

    bg = data.get("base_graph")
    if not isinstance(bg, dict):
        raise ParseError("base_graph: expected an object")
    sg = data.get("swap_graph")
    if not isinstance(sg, dict):
        raise ParseError("swap_graph: expected an object")

    name = data.get("name", "")
    if not isinstance(name, str):
        raise ParseError("name: expected a string")

    try:
        base = BaseGraph(
            n=_as_int(bg.get("n"), "base_graph.n"),
            edges=_edge_list(bg, "base_graph"),
            labels=_labels(bg, "base_graph"),
        )
        swap = SwapGraph(
            k=_as_int(sg.get("k"), "swap_graph.k"),
            edges=_edge_list(sg, "swap_graph"),
            labels=_labels(sg, "swap_graph"),
        )
        return Instance(
            base=base,
            swap=swap,
            initial=_int_list(data, "initial", "instance"),
            final=_int_list(data, "final", "instance"),
            name=name,
        )
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def parse_instance(text):
    """Parse an instance document from JSON text."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    return instance_from_dict(data)


def instance_to_dict(inst, layout=None):
    bg = {"n": inst.base.n, "edges": [list(e) for e in inst.base.edges]}
    if inst.base.labels is not None:
        bg["labels"] = list(inst.base.labels)
    sg = {"k": inst.swap.k, "edges": [list(e) for e in inst.swap.edges]}
    if inst.swap.labels is not None:
        sg["labels"] = list(inst.swap.labels)
    out = {
        "name": inst.name,
        "base_graph": bg,
        "swap_graph": sg,
        "initial": list(inst.initial),
        "final": list(inst.final),
    }
    if layout is not None:
        out["layout"] = [list(p) for p in layout]
    return out


def serialize_instance(inst, layout=None):
    """Render an instance (optionally with display coordinates) as JSON text."""
    return json.dumps(instance_to_dict(inst, layout), indent=2, sort_keys=True)


def parse_solution(text):
    """Parse a solution document; returns (instance name, swap sequence)."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise ParseError("solution: expected a JSON object")
    name = data.get("instance", "")
    if not isinstance(name, str):
        raise ParseError("instance: expected a string")
    swaps = data.get("swaps")
    if not isinstance(swaps, list):
        raise ParseError("swaps: expected a list of pairs")
    seq = []
    for i, pair in enumerate(swaps):
        spot = f"swaps[{i}]"
        if not isinstance(pair, list) or len(pair) != 2:
            raise ParseError(f"{spot}: expected a pair [u, v]")
        seq.append((_as_int(pair[0], spot), _as_int(pair[1], spot)))
    return name, tuple(seq)


def serialize_solution(seq, instance_name=""):
    return json.dumps(
        {"instance": instance_name, "swaps": [list(e) for e in seq]},
        indent=2,
        sort_keys=True,
    )
