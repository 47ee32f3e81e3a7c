"""Decision procedure for instances whose swap graph is a star.

With the center recolored to 1, center-color tokens behave like blanks of a
sliding puzzle: the only legal swap moves a blank across an edge. Solvability
then decomposes over equivalence classes of token vertices, and each class is
settled by a cycle test, a brute-force search on the one exceptional graph,
or a parity argument on biconnected bipartite graphs.
"""
from __future__ import annotations

import functools
import json
from dataclasses import dataclass

from .errors import NotStarError, StateLimitError
from .graphs import (
    bfs_distances,
    components,
    induced_subgraph,
    is_biconnected,
    is_bipartite,
    is_cycle,
    is_t0,
    shortest_path,
)
from .model import BaseGraph, Instance, SwapGraph, color_counts
from .oracle import DEFAULT_MAX_STATES, LIMIT_EXCEEDED, solve_bfs

COUNTS_MISMATCH = "counts_mismatch"
CYCLE_ORDER_VIOLATED = "cycle_order_violated"
T0_BRUTE_FORCE = "t0_brute_force"
PARITY_OBSTRUCTION = "parity_obstruction"
NO_OBSTRUCTION = "no_obstruction"
CLASS_FAILURE = "class_failure"


@dataclass(frozen=True)
class EquivalenceClass:
    """A class C of mutually exchangeable token vertices and its region R(C)."""

    vertices: tuple  # C, sorted
    region: tuple  # R(C), sorted; always contains C


@dataclass(frozen=True)
class SubInstance:
    """The puzzle induced on C ∪ R(C); vertices outside C are blank on both sides."""

    instance: Instance
    vertices: tuple  # parent vertex id per sub vertex
    cls: EquivalenceClass
    counts_match: bool


@dataclass(frozen=True)
class ClassVerdict:
    cls: EquivalenceClass
    solvable: bool
    reason: str


@dataclass(frozen=True)
class Verdict:
    solvable: bool
    reason: str
    classes: tuple = ()


def verdict_to_dict(verdict):
    return {
        "solvable": verdict.solvable,
        "reason": verdict.reason,
        "classes": [
            {
                "C": list(cv.cls.vertices),
                "R": list(cv.cls.region),
                "verdict": f"{'solvable' if cv.solvable else 'unsolvable'} ({cv.reason})",
            }
            for cv in verdict.classes
        ],
    }


def serialize_verdict(verdict):
    return json.dumps(verdict_to_dict(verdict), indent=2, sort_keys=True)


def star_center(swap):
    """Center color of a star swap graph, or None when it is not a star.

    A star needs at least two colors; for k=2 either endpoint serves and the
    smaller one is returned.
    """
    k = swap.k
    if k < 2 or len(swap.edges) != k - 1:
        return None
    deg = [0] * (k + 1)
    for a, b in swap.edges:
        deg[a] += 1
        deg[b] += 1
    if k == 2:
        return 1
    hubs = [c for c in range(1, k + 1) if deg[c] == k - 1]
    if len(hubs) != 1:
        return None
    center = hubs[0]
    if any(deg[c] != 1 for c in range(1, k + 1) if c != center):
        return None
    return center


@functools.lru_cache(maxsize=None)
def _recentered_swap(swap):
    center = star_center(swap)
    if center is None:
        raise NotStarError("swap graph is not a star")
    if center == 1:
        return center, swap
    swap_tau = tuple(1 if c == center else center if c == 1 else c for c in range(swap.k + 1))
    labels = None
    if swap.labels is not None:
        labels = list(swap.labels)
        labels[0], labels[center - 1] = labels[center - 1], labels[0]
        labels = tuple(labels)
    renamed = SwapGraph(
        k=swap.k,
        edges=tuple((swap_tau[a], swap_tau[b]) for a, b in swap.edges),
        labels=labels,
    )
    return center, renamed


def recenter(inst):
    """Rename colors so the star center becomes color 1 (a transposition)."""
    center, renamed = _recentered_swap(inst.swap)
    if center == 1:
        return inst
    tau = tuple(1 if c == center else center if c == 1 else c for c in range(inst.swap.k + 1))
    return Instance(
        base=inst.base,
        swap=renamed,
        initial=tuple(tau[c] for c in inst.initial),
        final=tuple(tau[c] for c in inst.final),
        name=inst.name,
    )


@functools.lru_cache(maxsize=None)
def _blank_routing(base, src_blanks, dst_blanks):
    """Swaps moving the blank set src_blanks onto dst_blanks, plus their net effect.

    Returns (prefix, origin) where origin[v] is the vertex whose original
    token occupies v after the prefix. The routing depends only on blank
    positions, never on token colors: repeatedly take the smallest unsatisfied
    destination t, the nearest spare blank b, and shift blanks along the
    smallest shortest b-t path one blank-free segment at a time, which leaves
    every satisfied blank between them in place.
    """
    n = base.n
    origin = list(range(n))
    blanks = set(src_blanks)
    prefix = []
    while True:
        pending = sorted(dst_blanks - blanks)
        if not pending:
            break
        t = pending[0]
        dist = bfs_distances(base, t)
        spare = [(dist[v], v) for v in blanks - dst_blanks if dist[v] >= 0]
        if not spare:
            raise ValueError("blank counts differ on a base component")
        b = min(spare)[1]
        path = shortest_path(base, b, t)
        stops = [j for j, p in enumerate(path) if p in blanks]
        ends = stops[1:] + [len(path) - 1]
        for i in range(len(stops) - 1, -1, -1):
            for j in range(stops[i], ends[i]):
                u, v = path[j], path[j + 1]
                prefix.append((u, v) if u < v else (v, u))
                origin[u], origin[v] = origin[v], origin[u]
            blanks.discard(path[stops[i]])
            blanks.add(path[ends[i]])
    return tuple(prefix), tuple(origin)


def normalize_blanks(inst):
    """Route color-1 tokens onto their final vertices.

    Returns (normalized instance, prefix). The prefix is legal from the
    original initial configuration and produces the normalized one; the
    normalized instance has identical blank sets on both sides. Only blank
    positions drive the routing, so solvability is preserved (swaps are
    reversible).
    """
    src = frozenset(v for v, c in enumerate(inst.initial) if c == 1)
    dst = frozenset(v for v, c in enumerate(inst.final) if c == 1)
    if src == dst:
        return inst, ()
    prefix, origin = _blank_routing(inst.base, src, dst)
    moved = tuple(inst.initial[origin[v]] for v in range(inst.base.n))
    return (
        Instance(base=inst.base, swap=inst.swap, initial=moved, final=inst.final, name=inst.name),
        prefix,
    )


def _exact_component_classes(base, comp, comp_blanks):
    """Classes within one component by search over (token vertex, blank set) states."""
    adj = base.adjacency
    mask0 = 0
    for v in comp_blanks:
        mask0 |= 1 << v
    occupied = [v for v in comp if v not in comp_blanks]

    seen = set()
    classes = []
    for u in occupied:
        if (u, mask0) in seen:
            continue
        frontier = [(u, mask0)]
        seen.add((u, mask0))
        states = []
        while frontier:
            state = frontier.pop()
            states.append(state)
            p, mask = state
            m = mask
            while m:
                low = m & -m
                m ^= low
                x = low.bit_length() - 1
                for w in adj[x]:
                    if mask >> w & 1:
                        continue
                    nxt = (x, mask ^ low | 1 << p) if w == p else (p, mask ^ low | 1 << w)
                    if nxt not in seen:
                        seen.add(nxt)
                        frontier.append(nxt)
        members = tuple(sorted({p for p, mask in states if mask == mask0}))
        region = tuple(sorted({p for p, _ in states}))
        classes.append(EquivalenceClass(vertices=members, region=region))
        seen.update((v, mask0) for v in members)
    return classes


@functools.lru_cache(maxsize=None)
def _equivalence_classes(base, blanks):
    out = []
    for comp in components(base):
        comp_blanks = blanks & set(comp)
        occupied = tuple(v for v in comp if v not in comp_blanks)
        if not occupied:
            continue
        if not comp_blanks:
            out.extend(EquivalenceClass(vertices=(v,), region=(v,)) for v in occupied)
            continue
        host, _ = induced_subgraph(base, comp)
        if is_biconnected(host) and not is_cycle(host) and not is_t0(host):
            out.append(EquivalenceClass(vertices=occupied, region=tuple(comp)))
            continue
        out.extend(_exact_component_classes(base, comp, comp_blanks))
    return tuple(sorted(out, key=lambda c: c.vertices))


def equivalence_classes(base, blanks):
    """Partition of the occupied vertices into exchangeability classes.

    Two occupied vertices fall in one class when a token can travel from one
    to the other with the blank set restored afterwards; the region R(C)
    collects every vertex the class's tokens can reach at all. Biconnected
    hosts other than cycles and the exceptional 7-vertex graph always form a
    single class spanning the component; elsewhere the answer comes from an
    exact search over (token vertex, blank set) states, exponential only in
    the blank count.
    """
    return list(_equivalence_classes(base, frozenset(blanks)))


@functools.lru_cache(maxsize=None)
def _sub_structures(base, blanks):
    out = []
    for cls in _equivalence_classes(base, blanks):
        verts = tuple(sorted(set(cls.vertices) | set(cls.region)))
        sub_base, _ = induced_subgraph(base, verts)
        in_class = tuple(v in set(cls.vertices) for v in verts)
        out.append((cls, verts, sub_base, in_class))
    return tuple(out)


def build_sub_instances(inst):
    """One sub-instance per equivalence class of a blank-normalized instance.

    Each keeps the parent's colors on its class vertices and blanks out the
    rest of its region on both sides; a per-class color-count mismatch is
    flagged rather than raised (such a class is trivially unsolvable).
    """
    blanks = frozenset(v for v, c in enumerate(inst.initial) if c == 1)
    subs = []
    for cls, verts, sub_base, in_class in _sub_structures(inst.base, blanks):
        initial = tuple(
            inst.initial[v] if inside else 1 for v, inside in zip(verts, in_class)
        )
        final = tuple(inst.final[v] if inside else 1 for v, inside in zip(verts, in_class))
        subs.append(
            SubInstance(
                instance=Instance(
                    base=sub_base,
                    swap=inst.swap,
                    initial=initial,
                    final=final,
                    name=f"{inst.name}::class-{cls.vertices[0]}" if inst.name else "",
                ),
                vertices=verts,
                cls=cls,
                counts_match=sorted(initial) == sorted(final),
            )
        )
    return subs


@functools.lru_cache(maxsize=None)
def _graph_kind(base):
    """Branch selector for decide_transitive, precomputed per graph.

    Returns ("cycle", traversal), ("t0", None), or ("other", parity_prone)
    where parity_prone is True when the graph is biconnected and bipartite.
    """
    if is_cycle(base):
        order = [0, base.adjacency[0][0]]
        while True:
            prev, cur = order[-2], order[-1]
            nxt = [w for w in base.adjacency[cur] if w != prev][0]
            if nxt == 0:
                break
            order.append(nxt)
        return "cycle", tuple(order)
    if is_t0(base):
        return "t0", None
    return "other", is_biconnected(base) and is_bipartite(base)


def _is_rotation(a, b):
    if len(a) != len(b):
        return False
    if not a:
        return True
    return any(a[i:] + a[:i] == b for i in range(len(a)))


def _cycle_order_matches(inst, order):
    seq_i = tuple(inst.initial[v] for v in order if inst.initial[v] != 1)
    seq_f = tuple(inst.final[v] for v in order if inst.final[v] != 1)
    if len(seq_i) == len(order):
        # no blank anywhere: nothing can move
        return inst.initial == inst.final
    return _is_rotation(seq_i, seq_f)


def decide_cycle(sub):
    """Solvability on a cycle: the token colors' cyclic order must be preserved.

    Blanks drift freely around a cycle but can only rotate the others, never
    reverse them, so the final non-blank sequence must be a rotation of the
    initial one (reflections are excluded). Without any blank the instance is
    frozen and the configurations must match exactly.
    """
    kind, order = _graph_kind(sub.instance.base)
    if kind != "cycle":
        raise ValueError("sub-instance graph is not a cycle")
    return _cycle_order_matches(sub.instance, order)


def permutation_parity(initial, final):
    """Parity ("even"/"odd") of the token permutation between two configurations.

    Defined only when tokens carry pairwise distinct colors and both
    configurations blank the same vertices; the blank is a fixed point.
    """
    tokens = [v for v in range(len(initial)) if initial[v] != 1]
    if any(final[v] == 1 for v in tokens) or len(initial) - len(tokens) != sum(
        1 for c in final if c == 1
    ):
        raise ValueError("parity undefined: blank sets differ")
    place = {}
    for v in tokens:
        if final[v] in place:
            raise ValueError("parity undefined: repeated token colors")
        place[final[v]] = v
    if sorted(place) != sorted(initial[v] for v in tokens):
        raise ValueError("parity undefined: repeated token colors")

    seen = set()
    cycles = 0
    for v in tokens:
        if v in seen:
            continue
        cycles += 1
        w = v
        while w not in seen:
            seen.add(w)
            w = place[initial[w]]
    return "odd" if (len(tokens) - cycles) % 2 else "even"


def decide_transitive(sub, max_states=DEFAULT_MAX_STATES):
    """Verdict for a single-class sub-instance.

    Count mismatch is immediately fatal; cycles reduce to the rotation test;
    the exceptional graph falls back to search. Everything else is solvable
    unless the one genuine obstruction applies: pairwise distinct colors with
    a single blank on a biconnected bipartite graph and an odd permutation.
    """
    if not sub.counts_match:
        return Verdict(False, COUNTS_MISMATCH)
    inst = sub.instance
    kind, extra = _graph_kind(inst.base)
    if kind == "cycle":
        ok = _cycle_order_matches(inst, extra)
        return Verdict(ok, NO_OBSTRUCTION if ok else CYCLE_ORDER_VIOLATED)
    if kind == "t0":
        outcome = solve_bfs(inst, max_states)
        if outcome.status == LIMIT_EXCEEDED:
            raise StateLimitError(outcome.states_explored)
        return Verdict(outcome.solvable, T0_BRUTE_FORCE)
    cfg = inst.initial
    if (
        extra
        and cfg.count(1) == 1
        and len(set(cfg)) == len(cfg)
        and permutation_parity(cfg, inst.final) == "odd"
    ):
        return Verdict(False, PARITY_OBSTRUCTION)
    return Verdict(True, NO_OBSTRUCTION)


def decide(inst, max_states=DEFAULT_MAX_STATES):
    """Decide a star-swap-graph instance without searching its state space.

    Pipeline: recenter so blanks are color 1, check color counts (globally
    and blank counts per base component), align the blank sets, split the
    tokens into equivalence classes, and settle each class on its own.
    """
    if star_center(inst.swap) is None:
        raise NotStarError("decide requires a star swap graph")
    if color_counts(inst.initial, inst.swap.k) != color_counts(inst.final, inst.swap.k):
        return Verdict(False, COUNTS_MISMATCH)
    work = recenter(inst)

    for comp in components(work.base):
        if sum(1 for v in comp if work.initial[v] == 1) != sum(
            1 for v in comp if work.final[v] == 1
        ):
            # blanks cannot change components, so per-component counts must agree
            return Verdict(False, COUNTS_MISMATCH)

    normalized, _ = normalize_blanks(work)
    verdicts = []
    solvable = True
    for sub in build_sub_instances(normalized):
        sub_verdict = decide_transitive(sub, max_states)
        solvable = solvable and sub_verdict.solvable
        verdicts.append(
            ClassVerdict(cls=sub.cls, solvable=sub_verdict.solvable, reason=sub_verdict.reason)
        )
    return Verdict(
        solvable=solvable,
        reason=NO_OBSTRUCTION if solvable else CLASS_FAILURE,
        classes=tuple(verdicts),
    )
