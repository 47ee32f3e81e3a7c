"""Instance families used by the command line tool, the test fixtures and
the bundled server instances.

Every generator is deterministic: same parameters (and seed, where one is
accepted) produce byte-identical instances. Generators that have a natural
drawing also return a layout, a list of (x, y) coordinates per vertex, which
serializers attach to the instance JSON for the benefit of interactive
front ends; the solvers ignore it.
"""
from __future__ import annotations

import math
import random

from .graphs import T0_GRAPH
from .model import BaseGraph, Instance, SwapGraph
from .ncl import AND, OR, NclGraph, NclInstance

FIXTURE_NAMES = ("or2", "and2", "and_or", "ring6")


def _star_swap(k):
    return SwapGraph(k=k, edges=tuple((1, c) for c in range(2, k + 1)))


def _round_layout(points):
    return tuple((round(x, 4), round(y, 4)) for x, y in points)


def _shuffled(config, seed):
    rng = random.Random(seed)
    out = list(config)
    rng.shuffle(out)
    return tuple(out)


def grid_instance(rows, cols, seed=None):
    """Sliding-puzzle style instance on a rows x cols grid.

    Vertex r*cols + c sits at row r, column c. Colors are all distinct with
    the blank (color 1) at vertex 0 and swaps form a star centered on the
    blank. Without a seed the goal equals the start; with one the goal is a
    uniform shuffle, which may or may not be reachable.
    """
    if rows < 1 or cols < 1 or rows * cols < 2:
        raise ValueError("grid needs at least two vertices")
    n = rows * cols
    edges = []
    for r in range(rows):
        for c in range(cols):
            v = r * cols + c
            if c + 1 < cols:
                edges.append((v, v + 1))
            if r + 1 < rows:
                edges.append((v, v + cols))
    base = BaseGraph(n=n, edges=tuple(edges))
    initial = tuple(range(1, n + 1))
    final = initial if seed is None else _shuffled(initial, seed)
    inst = Instance(base=base, swap=_star_swap(n), initial=initial, final=final,
                    name=f"grid-{rows}x{cols}")
    layout = _round_layout((c, r) for r in range(rows) for c in range(cols))
    return inst, layout


def cycle_instance(n, blanks=1, shift=1):
    """Cycle with the given number of blanks and otherwise distinct colors;
    the goal is the start rotated by `shift` positions, which is always
    reachable when at least one blank is present."""
    if n < 3:
        raise ValueError("cycle needs at least three vertices")
    if not 1 <= blanks < n:
        raise ValueError("blank count must be between 1 and n - 1")
    edges = tuple((i, (i + 1) % n) for i in range(n))
    base = BaseGraph(n=n, edges=tuple(tuple(sorted(e)) for e in edges))
    k = n - blanks + 1
    initial = tuple([1] * blanks + list(range(2, k + 1)))
    final = tuple(initial[(i - shift) % n] for i in range(n))
    inst = Instance(base=base, swap=_star_swap(k), initial=initial, final=final,
                    name=f"cycle-{n}")
    layout = _round_layout(
        (math.cos(2 * math.pi * i / n), math.sin(2 * math.pi * i / n)) for i in range(n)
    )
    return inst, layout


def t0_instance(seed=None):
    """The seven-vertex exceptional graph with one blank and distinct colors."""
    n = 7
    initial = tuple(range(1, n + 1))
    final = initial if seed is None else _shuffled(initial, seed)
    inst = Instance(base=T0_GRAPH, swap=_star_swap(n), initial=initial, final=final,
                    name="t0")
    hexagon = [(math.cos(math.pi / 2 - 2 * math.pi * i / 6),
                math.sin(math.pi / 2 - 2 * math.pi * i / 6)) for i in range(6)]
    layout = _round_layout(hexagon + [(0.0, 0.0)])
    return inst, layout


def star_random_instance(n, k, seed):
    """Random connected base graph with a random star swap graph and
    count-matching random configurations. Every color appears when n >= k."""
    if n < 2:
        raise ValueError("need at least two vertices")
    if k < 2:
        raise ValueError("need at least two colors")
    rng = random.Random(seed)
    edges = set()
    for v in range(1, n):
        edges.add((rng.randrange(v), v))
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in edges and rng.random() < 0.25:
                edges.add((u, v))
    base = BaseGraph(n=n, edges=tuple(sorted(edges)))
    center = rng.randint(1, k)
    swap = SwapGraph(k=k, edges=tuple(
        tuple(sorted((center, c))) for c in range(1, k + 1) if c != center
    ))
    colors = [1 + i % k for i in range(n)] if n >= k else [rng.randint(1, k) for _ in range(n)]
    rng.shuffle(colors)
    initial = tuple(colors)
    goal = list(colors)
    rng.shuffle(goal)
    final = tuple(goal)
    inst = Instance(base=base, swap=swap, initial=initial, final=final,
                    name=f"star-random-n{n}-k{k}-s{seed}")
    return inst, None


TEASER_CREATURES = ("fox", "caterpillar", "farmer", "chicken")

# Tolerances: the fox ignores the caterpillar, the caterpillar rides along
# with the farmer, the farmer carries the chicken. Everything else refuses
# to trade places.
_TEASER_SWAP = SwapGraph(k=4, edges=((1, 2), (2, 3), (3, 4)),
                         labels=TEASER_CREATURES)

_TEASER_INITIAL = (1, 2, 3, 4, 4, 3, 2, 1)
_TEASER_FINAL = (4, 3, 2, 1, 1, 2, 3, 4)


def teaser_instance():
    """Two of each creature on a 2x4 grid; the goal mirrors each row."""
    grid, layout = grid_instance(2, 4)
    inst = Instance(base=grid.base, swap=_TEASER_SWAP,
                    initial=_TEASER_INITIAL, final=_TEASER_FINAL, name="teaser")
    return inst, layout


def ncl_fixture(name):
    """Hand-checked constraint-graph fixtures, from two nodes up to a
    six-node ring. or2 and and_or ask for a reachable reorientation, and2
    is deadlocked, ring6 rotates flows around two nested rings."""
    if name == "or2":
        g = NclGraph(nodes=(OR, OR), edges=((0, 1, 2), (0, 1, 2), (0, 1, 2)))
        return NclInstance(graph=g, initial=(1, 1, 0), final=(0, 0, 1))
    if name == "and2":
        g = NclGraph(nodes=(AND, AND), edges=((0, 1, 2), (0, 1, 1), (0, 1, 1)))
        return NclInstance(graph=g, initial=(0, 1, 1), final=(1, 0, 0))
    if name == "and_or":
        g = NclGraph(
            nodes=(AND, AND, OR, OR),
            edges=(
                (0, 2, 2),
                (1, 3, 2),
                (2, 3, 2),
                (2, 3, 2),
                (0, 1, 1),
                (0, 1, 1),
            ),
        )
        return NclInstance(graph=g, initial=(2, 1, 2, 3, 0, 0), final=(0, 3, 2, 3, 1, 1))
    if name == "ring6":
        g = NclGraph(
            nodes=(AND, AND, AND, OR, OR, OR),
            edges=(
                (0, 3, 2), (1, 4, 2), (2, 5, 2),
                (3, 4, 2), (4, 5, 2), (3, 5, 2),
                (0, 1, 1), (1, 2, 1), (0, 2, 1),
            ),
        )
        return NclInstance(graph=g, initial=(0, 1, 2, 4, 5, 3, 0, 1, 2),
                           final=(0, 1, 2, 3, 4, 5, 0, 1, 2))
    raise ValueError(f"unknown fixture {name!r}; choose one of {', '.join(FIXTURE_NAMES)}")
