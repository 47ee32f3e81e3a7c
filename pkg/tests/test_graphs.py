"""Graph helpers: connectivity, structure predicates, path selection."""
import itertools

from ccts.graphs import (
    T0_GRAPH,
    articulation_points,
    bfs_distances,
    components,
    components_of_swap,
    induced_subgraph,
    is_biconnected,
    is_bipartite,
    is_connected,
    is_cycle,
    is_t0,
    shortest_path,
)
from ccts.model import BaseGraph, SwapGraph


def _cycle(n):
    return BaseGraph(n=n, edges=tuple(tuple(sorted((i, (i + 1) % n))) for i in range(n)))


def test_components():
    g = BaseGraph(n=5, edges=((0, 1), (3, 4)))
    assert components(g) == [(0, 1), (2,), (3, 4)]
    assert not is_connected(g)
    assert is_connected(_cycle(4))


def test_components_of_swap():
    swap = SwapGraph(k=5, edges=((1, 2), (4, 5)))
    assert components_of_swap(swap) == [(1, 2), (3,), (4, 5)]


def test_induced_subgraph_remaps_vertices():
    g = BaseGraph(n=5, edges=((0, 2), (2, 4), (1, 3)))
    sub, originals = induced_subgraph(g, (0, 2, 4))
    assert originals == (0, 2, 4)  # new id -> old id
    assert sub.n == 3 and sub.edges == ((0, 1), (1, 2))


def test_bfs_distances():
    g = BaseGraph(n=4, edges=((0, 1), (1, 2)))
    assert bfs_distances(g, 0) == [0, 1, 2, -1]


def test_bipartite():
    assert is_bipartite(_cycle(4))
    assert not is_bipartite(_cycle(5))


def test_cycle_recognition():
    assert is_cycle(_cycle(3)) and is_cycle(_cycle(8))
    assert not is_cycle(BaseGraph(n=3, edges=((0, 1), (1, 2))))
    # two disjoint triangles have the degree profile but not connectivity
    two = BaseGraph(n=6, edges=((0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)))
    assert not is_cycle(two)


def test_articulation_and_biconnectivity():
    path = BaseGraph(n=3, edges=((0, 1), (1, 2)))
    assert articulation_points(path) == {1}
    assert not is_biconnected(path)
    assert is_biconnected(_cycle(4))
    assert is_biconnected(T0_GRAPH)
    # K2 is connected and cut-free but too small to count
    assert not is_biconnected(BaseGraph(n=2, edges=((0, 1),)))


def test_t0_recognition_is_isomorphism_invariant():
    assert is_t0(T0_GRAPH)
    perm = (3, 5, 0, 6, 1, 4, 2)
    edges = tuple(tuple(sorted((perm[u], perm[v]))) for u, v in T0_GRAPH.edges)
    assert is_t0(BaseGraph(n=7, edges=edges))
    assert not is_t0(_cycle(7))
    # same degree sequence test: swap one edge to break the structure
    tweaked = tuple(e for e in T0_GRAPH.edges if e != (3, 6)) + ((2, 6),)
    candidate = BaseGraph(n=7, edges=tuple(sorted(tweaked)))
    assert sorted(candidate.degree(v) for v in range(7)) == sorted(
        T0_GRAPH.degree(v) for v in range(7)
    )
    assert not is_t0(candidate)


def test_shortest_path_prefers_lexicographically_smallest():
    # two shortest 0..3 routes: 0-1-3 and 0-2-3
    g = BaseGraph(n=4, edges=((0, 1), (0, 2), (1, 3), (2, 3)))
    assert shortest_path(g, 0, 3) == [0, 1, 3]
    assert shortest_path(g, 0, 3, forbidden=(1,)) == [0, 2, 3]
    assert shortest_path(g, 2, 2) == [2]
    assert shortest_path(g, 0, 3, forbidden=(1, 2)) is None


def test_shortest_path_is_shortest_everywhere():
    g = T0_GRAPH
    for s, t in itertools.combinations(range(7), 2):
        path = shortest_path(g, s, t)
        assert path[0] == s and path[-1] == t
        assert len(path) - 1 == bfs_distances(g, s)[t]
        assert all(tuple(sorted(p)) in g.edge_set for p in zip(path, path[1:]))
