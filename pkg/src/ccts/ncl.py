"""Nondeterministic constraint logic on AND/OR graphs.

A constraint graph is cubic: every node touches exactly three edges. Edges
weigh 1 (light) or 2 (heavy); an AND node has one heavy and two light edges,
an OR node three heavy ones. A configuration orients every edge, and it is
valid when each node's incoming weight sums to at least 2. A move flips one
edge while keeping the configuration valid.

Parallel edges are allowed (the smallest cubic graphs need them), so edges
are identified by index throughout.
"""
from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from functools import cached_property

from .errors import ParseError
from .oracle import (
    DEFAULT_MAX_STATES,
    LIMIT_EXCEEDED,
    SOLVABLE,
    UNSOLVABLE,
    SearchOutcome,
)

AND = "AND"
OR = "OR"
LIGHT = 1
HEAVY = 2


@dataclass(frozen=True)
class NclGraph:
    """Cubic AND/OR constraint graph; edges are (u, v, weight) triples."""

    nodes: tuple  # kind per node id
    edges: tuple  # (u, v, weight) per edge index

    def __post_init__(self):
        nodes = tuple(self.nodes)
        if any(kind not in (AND, OR) for kind in nodes):
            raise ValueError("node kind must be AND or OR")
        edges = []
        for e in self.edges:
            u, v, w = e
            if not (0 <= u < len(nodes) and 0 <= v < len(nodes)):
                raise ValueError(f"edge endpoint out of range in {e}")
            if u == v:
                raise ValueError(f"self-loop at node {u}")
            if w not in (LIGHT, HEAVY):
                raise ValueError(f"edge weight must be 1 or 2, got {w}")
            edges.append((u, v, w))
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "edges", tuple(edges))

    @cached_property
    def incident(self):
        """Edge indices touching each node, ascending."""
        inc = [[] for _ in self.nodes]
        for i, (u, v, _) in enumerate(self.edges):
            inc[u].append(i)
            inc[v].append(i)
        return tuple(tuple(ix) for ix in inc)


@dataclass(frozen=True)
class NclInstance:
    graph: NclGraph
    initial: tuple  # head node id per edge index
    final: tuple

    def __post_init__(self):
        for which, o in (("initial", self.initial), ("final", self.final)):
            o = tuple(o)
            if len(o) != len(self.graph.edges):
                raise ValueError(f"{which}: expected one direction per edge")
            for i, head in enumerate(o):
                if head not in self.graph.edges[i][:2]:
                    raise ValueError(f"{which}[{i}]: head {head} is not an endpoint")
            object.__setattr__(self, which, o)


def validate_ncl(graph):
    """Degree and weight-pattern findings; an empty list means 'well-formed'."""
    findings = []
    for n, kind in enumerate(graph.nodes):
        inc = graph.incident[n]
        if len(inc) != 3:
            findings.append(f"node {n}: {len(inc)} incident edges, expected 3")
            continue
        weights = sorted(graph.edges[i][2] for i in inc)
        if kind == AND and weights != [LIGHT, LIGHT, HEAVY]:
            findings.append(f"node {n}: AND needs one heavy and two light edges")
        if kind == OR and weights != [HEAVY, HEAVY, HEAVY]:
            findings.append(f"node {n}: OR needs three heavy edges")
    return findings


def in_weights(graph, orientation):
    weight = [0] * len(graph.nodes)
    for i, head in enumerate(orientation):
        weight[head] += graph.edges[i][2]
    return weight


def is_valid_config(graph, orientation):
    """Every node must receive incoming weight at least 2."""
    return all(w >= 2 for w in in_weights(graph, orientation))


def flip(graph, orientation, index):
    u, v, _ = graph.edges[index]
    out = list(orientation)
    out[index] = u if orientation[index] == v else v
    return tuple(out)


def legal_flips(graph, orientation):
    """Indices of edges whose reversal keeps every node's in-weight at 2+.

    Only the node losing the edge can drop below the threshold, so one
    subtraction per edge decides it.
    """
    weight = in_weights(graph, orientation)
    return {
        i
        for i, head in enumerate(orientation)
        if weight[head] - graph.edges[i][2] >= 2
    }


def solve_ncl_bfs(inst, max_states=DEFAULT_MAX_STATES):
    """Breadth-first search over valid orientations; witness is a flip list.

    Same outcome contract as the configuration-space oracle: shortest witness,
    Unsolvable only after exhausting the reachable orientations, LimitExceeded
    when the visited count would pass the budget.
    """
    graph = inst.graph
    start, goal = inst.initial, inst.final
    if start == goal:
        return SearchOutcome(status=SOLVABLE, witness=(), states_explored=1)

    parents = {start: None}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        weight = in_weights(graph, cur)
        for i in sorted(
            i for i, head in enumerate(cur) if weight[head] - graph.edges[i][2] >= 2
        ):
            nxt = flip(graph, cur, i)
            if nxt in parents:
                continue
            if len(parents) + 1 > max_states:
                return SearchOutcome(
                    status=LIMIT_EXCEEDED, witness=None, states_explored=len(parents)
                )
            parents[nxt] = (cur, i)
            if nxt == goal:
                moves = []
                node = nxt
                while parents[node] is not None:
                    node, idx = parents[node]
                    moves.append(idx)
                return SearchOutcome(
                    status=SOLVABLE,
                    witness=tuple(reversed(moves)),
                    states_explored=len(parents),
                )
            queue.append(nxt)
    return SearchOutcome(status=UNSOLVABLE, witness=None, states_explored=len(parents))


def conservation_quantity(graph, orientation):
    """Token budget the reduction will need: invariant under legal flips.

    AND nodes contribute 1 + (lights in) with the heavy edge in, else 2;
    OR nodes contribute their in-degree minus one.
    """
    total = 0
    for n, kind in enumerate(graph.nodes):
        inc = graph.incident[n]
        if kind == OR:
            total += sum(1 for i in inc if orientation[i] == n) - 1
        else:
            heavy = [i for i in inc if graph.edges[i][2] == HEAVY][0]
            if orientation[heavy] == n:
                lights_in = sum(
                    1 for i in inc if i != heavy and orientation[i] == n
                )
                total += 1 + lights_in
            else:
                total += 2
    return total


def _direction_str(graph, index, head):
    u, v, _ = graph.edges[index]
    return "u->v" if head == v else "v->u"


def _parse_direction(graph, index, text):
    u, v, _ = graph.edges[index]
    if text == "u->v":
        return v
    if text == "v->u":
        return u
    raise ParseError(f"initial[{index}]: direction must be 'u->v' or 'v->u'")


def ncl_from_dict(data):
    if not isinstance(data, dict):
        raise ParseError("ncl: expected a JSON object")
    raw_nodes = data.get("nodes")
    if not isinstance(raw_nodes, list):
        raise ParseError("nodes: expected a list")
    kinds = []
    for i, nd in enumerate(raw_nodes):
        if not isinstance(nd, dict) or nd.get("kind") not in (AND, OR):
            raise ParseError(f"nodes[{i}].kind: expected 'AND' or 'OR'")
        kinds.append(nd["kind"])
    raw_edges = data.get("edges")
    if not isinstance(raw_edges, list):
        raise ParseError("edges: expected a list")
    edges = []
    for i, ed in enumerate(raw_edges):
        if not isinstance(ed, dict):
            raise ParseError(f"edges[{i}]: expected an object")
        try:
            edges.append((ed["u"], ed["v"], ed["weight"]))
        except KeyError as exc:
            raise ParseError(f"edges[{i}]: missing field {exc}") from exc
    try:
        graph = NclGraph(nodes=tuple(kinds), edges=tuple(edges))
    except ValueError as exc:
        raise ParseError(str(exc)) from exc

    orientations = {}
    for which in ("initial", "final"):
        raw = data.get(which)
        if not isinstance(raw, list) or len(raw) != len(edges):
            raise ParseError(f"{which}: expected one direction per edge")
        orientations[which] = tuple(
            _parse_direction(graph, i, d) for i, d in enumerate(raw)
        )
    try:
        return NclInstance(graph=graph, **orientations)
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def parse_ncl(text):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    return ncl_from_dict(data)


def ncl_to_dict(inst):
    graph = inst.graph
    return {
        "nodes": [{"kind": kind} for kind in graph.nodes],
        "edges": [{"u": u, "v": v, "weight": w} for u, v, w in graph.edges],
        "initial": [
            _direction_str(graph, i, h) for i, h in enumerate(inst.initial)
        ],
        "final": [_direction_str(graph, i, h) for i, h in enumerate(inst.final)],
    }


def serialize_ncl(inst):
    return json.dumps(ncl_to_dict(inst), indent=2, sort_keys=True)
