"""Graph routines shared by the solvers.

Everything here works on BaseGraph/SwapGraph; induced subgraphs carry a
mapping back to parent vertex ids.
"""
from __future__ import annotations

from collections import deque
from functools import lru_cache

from .model import BaseGraph


def components(graph):
    """Connected components of a BaseGraph, each a sorted tuple of vertices."""
    seen = [False] * graph.n
    out = []
    for s in range(graph.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in graph.adjacency[v]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        out.append(tuple(sorted(comp)))
    return out


def is_connected(graph):
    if graph.n <= 1:
        return True
    return len(components(graph)) == 1


def components_of_swap(swap):
    """Connected components of a SwapGraph over colors 1..k."""
    seen = {}
    out = []
    for s in range(1, swap.k + 1):
        if s in seen:
            continue
        comp = [s]
        seen[s] = True
        queue = deque([s])
        while queue:
            c = queue.popleft()
            for d in swap.adjacency[c]:
                if d not in seen:
                    seen[d] = True
                    comp.append(d)
                    queue.append(d)
        out.append(tuple(sorted(comp)))
    return out


def induced_subgraph(graph, vertices):
    """Subgraph on the given vertices, renumbered 0..len-1 in sorted order.

    Returns (subgraph, vmap) where vmap[i] is the parent id of sub vertex i.
    """
    vmap = tuple(sorted(vertices))
    index = {old: new for new, old in enumerate(vmap)}
    edges = [
        (index[u], index[v]) for u, v in graph.edges if u in index and v in index
    ]
    labels = tuple(graph.labels[v] for v in vmap) if graph.labels else None
    return BaseGraph(n=len(vmap), edges=tuple(edges), labels=labels), vmap


def bfs_distances(graph, source):
    dist = [-1] * graph.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for w in graph.adjacency[v]:
            if dist[w] < 0:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def is_bipartite(graph):
    color = [-1] * graph.n
    for s in range(graph.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in graph.adjacency[v]:
                if color[w] < 0:
                    color[w] = color[v] ^ 1
                    queue.append(w)
                elif color[w] == color[v]:
                    return False
    return True


def is_cycle(graph):
    """True when the graph is a single cycle on at least three vertices."""
    if graph.n < 3 or len(graph.edges) != graph.n:
        return False
    if any(len(a) != 2 for a in graph.adjacency):
        return False
    return is_connected(graph)


def articulation_points(graph):
    """Cut vertices via the usual lowpoint computation, iterative."""
    n = graph.n
    disc = [-1] * n
    low = [0] * n
    cuts = set()
    for root in range(n):
        if disc[root] >= 0:
            continue
        root_children = 0
        stack = [(root, -1, iter(graph.adjacency[root]))]
        disc[root] = low[root] = 0
        time = 1
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w == parent:
                    continue
                if disc[w] < 0:
                    disc[w] = low[w] = time
                    time += 1
                    if v == root:
                        root_children += 1
                    stack.append((w, v, iter(graph.adjacency[w])))
                    advanced = True
                    break
                low[v] = min(low[v], disc[w])
            if not advanced:
                stack.pop()
                if stack:
                    pv = stack[-1][0]
                    low[pv] = min(low[pv], low[v])
                    if pv != root and low[v] >= disc[pv]:
                        cuts.add(pv)
        if root_children > 1:
            cuts.add(root)
    return cuts


def is_biconnected(graph):
    """At least three vertices, connected, and no cut vertex."""
    if graph.n < 3:
        return False
    if not is_connected(graph):
        return False
    return not articulation_points(graph)


# The 7-vertex exceptional graph: a hexagon plus a hub joined to two
# antipodal corners. Its single-blank puzzle realizes only 120 of the 720
# token permutations, so it escapes the parity characterization.
T0_EDGES = ((0, 1), (0, 5), (0, 6), (1, 2), (2, 3), (3, 4), (3, 6), (4, 5))
T0_GRAPH = BaseGraph(n=7, edges=T0_EDGES)


def _degree_sequence(graph):
    return tuple(sorted(len(a) for a in graph.adjacency))


@lru_cache(maxsize=4096)
def is_t0(graph):
    """Isomorphism test against the exceptional graph, brute force over 7 vertices."""
    if graph.n != 7 or len(graph.edges) != 8:
        return False
    if _degree_sequence(graph) != _degree_sequence(T0_GRAPH):
        return False

    target = T0_GRAPH.edge_set
    degrees = [len(a) for a in graph.adjacency]
    t0_degrees = [len(a) for a in T0_GRAPH.adjacency]

    mapping = [-1] * 7
    used = [False] * 7

    def extend(v):
        if v == 7:
            return True
        for w in range(7):
            if used[w] or degrees[v] != t0_degrees[w]:
                continue
            ok = True
            for x in graph.adjacency[v]:
                if x < v and (
                    (min(mapping[x], w), max(mapping[x], w)) not in target
                ):
                    ok = False
                    break
            if not ok:
                continue
            # also require non-adjacency to be preserved
            for x in range(v):
                if x not in graph.adjacency[v]:
                    a, b = min(mapping[x], w), max(mapping[x], w)
                    if (a, b) in target:
                        ok = False
                        break
            if not ok:
                continue
            mapping[v] = w
            used[w] = True
            if extend(v + 1):
                return True
            used[w] = False
            mapping[v] = -1
        return False

    return extend(0)


def shortest_path(graph, source, target, forbidden=()):
    """Lexicographically smallest shortest path, or None. Interior may not
    touch `forbidden` vertices."""
    if source == target:
        return [source]
    blocked = set(forbidden) - {source, target}
    dist = [-1] * graph.n
    dist[target] = 0
    queue = deque([target])
    while queue:
        v = queue.popleft()
        for w in graph.adjacency[v]:
            if dist[w] < 0 and w not in blocked:
                dist[w] = dist[v] + 1
                queue.append(w)
    if dist[source] < 0:
        return None
    path = [source]
    v = source
    while v != target:
        v = min(w for w in graph.adjacency[v] if dist[w] == dist[v] - 1)
        path.append(v)
    return path
