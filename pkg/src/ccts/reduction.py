"""Compiling constraint-logic instances into token-swapping puzzles.

Each NCL node and edge becomes a gadget over the path swap graph 1-2-3-4.
Color-2 tokens carry orientation between gadgets; colors 3 and 4 never leave
their gadget. An edge gadget is a 6-path x1..x6 plus the chord (x2,x5): its
color-4 token rests on x2 (edge points at the v side) or x5 (at the u side)
and only ever trades places over the chord, which is what makes traversal
one-way. OR nodes are triangles holding one color-2 token fewer than their
in-degree; AND nodes are 6-paths whose color-3 token slides between the two
states of the heavy edge.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, replace

from .model import BaseGraph, Instance, SwapGraph, color_counts
from .ncl import HEAVY, OR, NclInstance, is_valid_config, legal_flips, validate_ncl

P4 = SwapGraph(k=4, edges=((1, 2), (2, 3), (3, 4)))


@dataclass(frozen=True)
class Gadget:
    kind: str  # "edge" | "and" | "or"
    ncl_ref: int  # edge index or node id
    vertices: tuple  # global vertex ids, gadget-local order
    connection_points: tuple  # (key, vertex id) pairs; keys are edge indices or "u"/"v"


@dataclass(frozen=True)
class GadgetLayout:
    gadgets: tuple
    dummies: tuple


@dataclass(frozen=True)
class ReductionOutput:
    instance: Instance
    layout: GadgetLayout
    cubic: bool
    forced_unsolvable: bool
    ncl: NclInstance


def build_edge_gadget(toward_u):
    """Vertex count, edges, and tokens of an edge gadget (local ids x1..x6 = 0..5)."""
    edges = ((0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (1, 4))
    tokens = (1, 1, 3, 1, 4, 1) if toward_u else (1, 4, 1, 3, 1, 1)
    return 6, edges, tokens


def build_or_gadget(incoming):
    """Triangle holding incoming-1 color-2 tokens on its first vertices."""
    if not 1 <= incoming <= 3:
        raise ValueError("an OR node must have 1..3 incoming edges")
    tokens = tuple(2 if i < incoming - 1 else 1 for i in range(3))
    return 3, ((0, 1), (0, 2), (1, 2)), tokens


def build_and_gadget(heavy_in, light1_in, light2_in):
    """Six-path AND gadget (local ids v1..v6 = 0..5).

    Heavy edge in: the color-3 token guards v1 and the connection points v2/v4
    hold the incoming light tokens. Heavy edge out: everything has slid one
    step, the lights' tokens are trapped at v1/v3, and v5 is free.
    """
    if not (heavy_in or (light1_in and light2_in)):
        raise ValueError("AND node needs the heavy edge or both lights incoming")
    if heavy_in:
        tokens = (3, 2 if light1_in else 1, 4, 2 if light2_in else 1, 4, 2)
    else:
        tokens = (2, 4, 2, 4, 1, 3)
    return 6, ((0, 1), (1, 2), (2, 3), (3, 4), (4, 5)), tokens


def _in_degree(graph, orientation, node):
    return sum(1 for i in graph.incident[node] if orientation[i] == node)


def _node_cp_slots(graph, node):
    """(edge index, local vertex) connection-point assignment for one node."""
    inc = graph.incident[node]
    if graph.nodes[node] == OR:
        return tuple(zip(inc, (0, 1, 2)))
    heavy = next(i for i in inc if graph.edges[i][2] == HEAVY)
    lights = [i for i in inc if i != heavy]
    return ((lights[0], 1), (lights[1], 3), (heavy, 4))


def _gadget_tokens(graph, orientation, gadget):
    if gadget.kind == "edge":
        u = graph.edges[gadget.ncl_ref][0]
        return build_edge_gadget(orientation[gadget.ncl_ref] == u)[2]
    node = gadget.ncl_ref
    if gadget.kind == "or":
        return build_or_gadget(_in_degree(graph, orientation, node))[2]
    heavy = next(i for i in graph.incident[node] if graph.edges[i][2] == HEAVY)
    lights = [i for i in graph.incident[node] if i != heavy]
    return build_and_gadget(
        orientation[heavy] == node,
        orientation[lights[0]] == node,
        orientation[lights[1]] == node,
    )[2]


def encode_orientation(output, orientation):
    """Canonical configuration of the reduced instance for a valid orientation."""
    graph = output.ncl.graph
    if not is_valid_config(graph, orientation):
        raise ValueError("orientation is not valid")
    config = [1] * output.instance.base.n
    for gadget in output.layout.gadgets:
        for vid, color in zip(gadget.vertices, _gadget_tokens(graph, orientation, gadget)):
            config[vid] = color
    return tuple(config)


def decode_orientation(output, config):
    """Read each edge gadget's direction off its color-4 token (x2 or x5)."""
    graph = output.ncl.graph
    heads = [None] * len(graph.edges)
    for gadget in output.layout.gadgets:
        if gadget.kind != "edge":
            continue
        u, v, _ = graph.edges[gadget.ncl_ref]
        x2, x5 = gadget.vertices[1], gadget.vertices[4]
        if config[x2] == 4:
            heads[gadget.ncl_ref] = v
        elif config[x5] == 4:
            heads[gadget.ncl_ref] = u
        else:
            raise ValueError(
                f"edge gadget {gadget.ncl_ref}: color-4 token is on neither x2 nor x5"
            )
    return tuple(heads)


def reduce(inst, cubic=False):
    """Compile an NCL instance into a token-swapping instance over P4 colors.

    Gadgets are numbered nodes-then-edges in index order, so outputs are
    byte-reproducible. Per-color counts of the two encoded configurations can
    only disagree if the NCL conservation quantity does, which already makes
    the NCL instance unsolvable; that case is flagged, not raised.
    """
    graph = inst.graph
    findings = validate_ncl(graph)
    if findings:
        raise ValueError("; ".join(findings))
    for which, o in (("initial", inst.initial), ("final", inst.final)):
        if not is_valid_config(graph, o):
            raise ValueError(f"{which} orientation is not valid")

    gadgets = []
    cp = {}  # (node, edge index) -> global vertex id
    edges = []
    vid = 0
    for node, kind in enumerate(graph.nodes):
        count, local_edges, _ = (
            build_or_gadget(1) if kind == OR else build_and_gadget(True, False, False)
        )
        edges.extend((vid + a, vid + b) for a, b in local_edges)
        for edge_index, slot in _node_cp_slots(graph, node):
            cp[(node, edge_index)] = vid + slot
        gadgets.append(
            Gadget(
                kind=kind.lower(),
                ncl_ref=node,
                vertices=tuple(range(vid, vid + count)),
                connection_points=tuple(sorted(
                    ((str(e), vid + slot) for e, slot in _node_cp_slots(graph, node)),
                    key=lambda kv: (len(kv[0]), kv[0]),
                )),
            )
        )
        vid += count
    for index, (u, v, _) in enumerate(graph.edges):
        count, local_edges, _ = build_edge_gadget(True)
        edges.extend((vid + a, vid + b) for a, b in local_edges)
        edges.append((cp[(u, index)], vid))  # u-side link to x1
        edges.append((vid + 5, cp[(v, index)]))  # x6 link to the v side
        gadgets.append(
            Gadget(
                kind="edge",
                ncl_ref=index,
                vertices=tuple(range(vid, vid + count)),
                connection_points=(("u", vid), ("v", vid + 5)),
            )
        )
        vid += count

    layout = GadgetLayout(gadgets=tuple(gadgets), dummies=())
    base = BaseGraph(n=vid, edges=tuple(edges))
    shell = ReductionOutput(
        instance=Instance(base=base, swap=P4, initial=(1,) * vid, final=(1,) * vid),
        layout=layout,
        cubic=False,
        forced_unsolvable=False,
        ncl=inst,
    )
    initial = encode_orientation(shell, inst.initial)
    final = encode_orientation(shell, inst.final)
    output = ReductionOutput(
        instance=Instance(base=base, swap=P4, initial=initial, final=final),
        layout=layout,
        cubic=False,
        forced_unsolvable=color_counts(initial, 4) != color_counts(final, 4),
        ncl=inst,
    )
    return pad_to_cubic(output) if cubic else output


def pad_to_cubic(output):
    """Raise every vertex degree to exactly 3 with one-attachment dummy blocks.

    A degree-1 vertex gains two edges into a 4-dummy block, a degree-2 vertex
    one edge into a 5-dummy block; block interiors make every dummy degree 3.
    Dummies hold color 1 on both sides, and since a block meets the rest of
    the graph in a single vertex, any token detouring through it can only
    come back out where it went in.
    """
    if output.cubic:
        return output
    base = output.instance.base
    edges = list(base.edges)
    dummies = []
    nxt = base.n
    for v in range(base.n):
        d = base.degree(v)
        if d > 3 or d == 0:
            raise ValueError(f"vertex {v} has degree {d}; reduction outputs stay within 1..3")
        if d == 3:
            continue
        if d == 1:
            a, b, c, e = range(nxt, nxt + 4)
            edges += [(v, a), (v, b), (a, c), (a, e), (b, c), (b, e), (c, e)]
            dummies += [a, b, c, e]
            nxt += 4
        else:
            a, b, c, e, f = range(nxt, nxt + 5)
            edges += [(v, a), (a, b), (b, c), (c, e), (e, f), (a, f), (b, e), (c, f)]
            dummies += [a, b, c, e, f]
            nxt += 5
    pad = (1,) * (nxt - base.n)
    inst = output.instance
    return ReductionOutput(
        instance=Instance(
            base=BaseGraph(n=nxt, edges=tuple(edges)),
            swap=inst.swap,
            initial=inst.initial + pad,
            final=inst.final + pad,
            name=inst.name,
        ),
        layout=replace(output.layout, dummies=tuple(dummies)),
        cubic=True,
        forced_unsolvable=output.forced_unsolvable,
        ncl=output.ncl,
    )


def _ordered(u, v):
    return (u, v) if u < v else (v, u)


def flip_script(output, orientation, index):
    """Swaps realizing one legal NCL flip between canonical encodings.

    Three phases: stage a color-2 token on the donor's connection point
    (sliding the AND gadget up when the heavy edge leaves, or shuffling the
    OR triangle), push it through the edge gadget, then settle the receiver
    (slide the AND gadget down for an arriving heavy edge, or re-canonicalize
    the OR triangle).
    """
    graph = output.ncl.graph
    if not is_valid_config(graph, orientation):
        raise ValueError("orientation violates a node's in-weight requirement")
    if index not in legal_flips(graph, orientation):
        raise ValueError(f"flipping edge {index} is not legal here")
    u, v, _ = graph.edges[index]
    donor = orientation[index]
    receiver = u if donor == v else v

    gadget_of = {("edge", g.ncl_ref) if g.kind == "edge" else ("node", g.ncl_ref): g
                 for g in output.layout.gadgets}
    cp = {}
    for g in output.layout.gadgets:
        if g.kind != "edge":
            for key, vid in g.connection_points:
                cp[(g.ncl_ref, int(key))] = vid

    swaps = []
    post = []

    receiver_gadget = gadget_of[("node", receiver)]
    cpa = cp[(receiver, index)]
    if graph.nodes[receiver] == OR:
        tvs = receiver_gadget.vertices
        eta = _in_degree(graph, orientation, receiver) - 1
        occupied = tvs[:eta]
        if cpa in occupied:
            # free the landing vertex first; this also lands everything canonical
            swaps.append(_ordered(cpa, tvs[eta]))
        elif cpa != tvs[eta]:
            post.append(_ordered(cpa, tvs[eta]))
    else:
        heavy = next(i for i in graph.incident[receiver] if graph.edges[i][2] == HEAVY)
        if index == heavy:
            g = receiver_gadget.vertices
            post.extend(_ordered(g[j + 1], g[j]) for j in range(4, -1, -1))

    donor_gadget = gadget_of[("node", donor)]
    cpb = cp[(donor, index)]
    if graph.nodes[donor] == OR:
        tvs = donor_gadget.vertices
        eta = _in_degree(graph, orientation, donor) - 1
        occupied = tvs[:eta]
        if cpb not in occupied:
            swaps.append(_ordered(tvs[eta - 1], cpb))
        elif cpb != tvs[eta - 1]:
            post.append(_ordered(cpb, tvs[eta - 1]))
    else:
        heavy = next(i for i in graph.incident[donor] if graph.edges[i][2] == HEAVY)
        if index == heavy:
            g = donor_gadget.vertices
            swaps.extend(_ordered(g[j], g[j + 1]) for j in range(5))

    x = gadget_of[("edge", index)].vertices
    if donor == u:
        trip = [(cpb, x[0]), (x[0], x[1]), (x[1], x[2]), (x[2], x[3]),
                (x[1], x[4]), (x[3], x[4]), (x[4], x[5]), (x[5], cpa)]
    else:
        trip = [(cpb, x[5]), (x[5], x[4]), (x[4], x[3]), (x[3], x[2]),
                (x[4], x[1]), (x[2], x[1]), (x[1], x[0]), (x[0], cpa)]
    swaps.extend(_ordered(a, b) for a, b in trip)
    swaps.extend(post)
    return tuple(swaps)


def layout_to_dict(layout):
    return {
        "gadgets": [
            {
                "kind": g.kind,
                "ncl_ref": g.ncl_ref,
                "vertices": list(g.vertices),
                "connection_points": {key: vid for key, vid in g.connection_points},
            }
            for g in layout.gadgets
        ],
        "dummies": list(layout.dummies),
    }


def serialize_layout(layout):
    return json.dumps(layout_to_dict(layout), indent=2, sort_keys=True)


def layout_from_dict(data):
    gadgets = tuple(
        Gadget(
            kind=g["kind"],
            ncl_ref=g["ncl_ref"],
            vertices=tuple(g["vertices"]),
            connection_points=tuple(
                sorted(g["connection_points"].items(), key=lambda kv: (len(kv[0]), kv[0]))
            ),
        )
        for g in data["gadgets"]
    )
    return GadgetLayout(gadgets=gadgets, dummies=tuple(data["dummies"]))


def parse_layout(text):
    return layout_from_dict(json.loads(text))
