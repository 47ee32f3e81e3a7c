"""Core domain model for constrained colored token swapping.

Vertices are 0-based, colors are 1-based. A swap of two adjacent tokens is
legal exactly when their colors are adjacent in the swap graph; since the
swap graph is simple, two tokens of the same color can never swap.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import IllegalSwapError

Configuration = tuple  # tuple[int, ...], one color per vertex
Edge = tuple  # tuple[int, int], endpoints
SwapSequence = tuple  # tuple[Edge, ...]


def _normalize_edges(edges, n, what, lo=0):
    """Canonicalize an edge list: sorted endpoint pairs, sorted overall.

    Rejects self-loops, duplicates, and endpoints outside [lo, lo + n).
    """
    seen = set()
    norm = []
    for e in edges:
        u, v = e
        if u == v:
            raise ValueError(f"{what}: self-loop at {u}")
        if not (lo <= u < lo + n and lo <= v < lo + n):
            raise ValueError(f"{what}: endpoint out of range in {(u, v)}")
        if u > v:
            u, v = v, u
        if (u, v) in seen:
            raise ValueError(f"{what}: duplicate edge {(u, v)}")
        seen.add((u, v))
        norm.append((u, v))
    return tuple(sorted(norm))


@dataclass(frozen=True)
class BaseGraph:
    """Simple undirected graph hosting the tokens."""

    n: int
    edges: tuple
    labels: tuple | None = None

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        object.__setattr__(self, "edges", _normalize_edges(self.edges, self.n, "base_graph"))
        if self.labels is not None:
            labels = tuple(self.labels)
            if len(labels) != self.n:
                raise ValueError("base_graph: labels length must equal n")
            object.__setattr__(self, "labels", labels)

    @cached_property
    def adjacency(self):
        adj = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def edge_set(self):
        return frozenset(self.edges)

    def degree(self, v):
        return len(self.adjacency[v])


@dataclass(frozen=True)
class SwapGraph:
    """Simple undirected graph on colors 1..k; its edges are the legal color pairs."""

    k: int
    edges: tuple
    labels: tuple | None = None

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("color count must be at least 1")
        object.__setattr__(self, "edges", _normalize_edges(self.edges, self.k, "swap_graph", lo=1))
        if self.labels is not None:
            labels = tuple(self.labels)
            if len(labels) != self.k:
                raise ValueError("swap_graph: labels length must equal k")
            object.__setattr__(self, "labels", labels)

    @cached_property
    def adjacency(self):
        adj = [[] for _ in range(self.k + 1)]
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def edge_set(self):
        return frozenset(self.edges)

    def allows(self, c1, c2):
        if c1 > c2:
            c1, c2 = c2, c1
        return (c1, c2) in self.edge_set


def _check_configuration(config, n, k, what):
    config = tuple(config)
    if len(config) != n:
        raise ValueError(f"{what}: expected {n} colors, got {len(config)}")
    for v, c in enumerate(config):
        if not (1 <= c <= k):
            raise ValueError(f"{what}[{v}]: color {c} outside 1..{k}")
    return config


@dataclass(frozen=True)
class Instance:
    """A puzzle: base graph, swap graph, and the two configurations."""

    base: BaseGraph
    swap: SwapGraph
    initial: tuple
    final: tuple
    name: str = ""

    def __post_init__(self):
        object.__setattr__(
            self, "initial", _check_configuration(self.initial, self.base.n, self.swap.k, "initial")
        )
        object.__setattr__(
            self, "final", _check_configuration(self.final, self.base.n, self.swap.k, "final")
        )


@dataclass(frozen=True)
class ValidationReport:
    base_connected: bool
    counts_match: bool
    colors_present: bool
    findings: tuple

    @property
    def ok(self):
        return not self.findings


def report_to_dict(report):
    return {
        "ok": report.ok,
        "base_connected": report.base_connected,
        "counts_match": report.counts_match,
        "colors_present": report.colors_present,
        "findings": list(report.findings),
    }


def color_counts(config, k):
    counts = [0] * (k + 1)
    for c in config:
        counts[c] += 1
    return tuple(counts[1:])


def validate(inst):
    """Check the instance facts that parsing alone cannot enforce."""
    findings = []

    counts_match = color_counts(inst.initial, inst.swap.k) == color_counts(inst.final, inst.swap.k)
    if not counts_match:
        findings.append("initial and final configurations disagree on color counts")

    from .graphs import is_connected

    base_connected = is_connected(inst.base)
    if not base_connected:
        findings.append("base graph is not connected")

    used = set(inst.initial)
    colors_present = all(c in used for c in range(1, inst.swap.k + 1))
    if not colors_present:
        missing = sorted(set(range(1, inst.swap.k + 1)) - used)
        findings.append(f"colors never used by the initial configuration: {missing}")

    return ValidationReport(
        base_connected=base_connected,
        counts_match=counts_match,
        colors_present=colors_present,
        findings=tuple(findings),
    )


def legal_swaps(config, inst):
    """All base edges whose endpoint colors may swap under the swap graph."""
    allowed = inst.swap.edge_set
    out = set()
    for u, v in inst.base.edges:
        a, b = config[u], config[v]
        if a > b:
            a, b = b, a
        if (a, b) in allowed:
            out.add((u, v))
    return out


def apply_swap(config, edge, inst):
    """Apply one swap, rejecting it if the endpoint colors are not adjacent colors."""
    u, v = edge
    if u > v:
        u, v = v, u
    if (u, v) not in inst.base.edge_set:
        raise IllegalSwapError(f"{(u, v)} is not a base edge", None)
    if not inst.swap.allows(config[u], config[v]):
        raise IllegalSwapError(
            f"colors {config[u]} and {config[v]} may not swap", (config[u], config[v])
        )
    out = list(config)
    out[u], out[v] = out[v], out[u]
    return tuple(out)


def apply_sequence(config, seq, inst):
    for edge in seq:
        config = apply_swap(config, edge, inst)
    return config


@dataclass(frozen=True)
class ComponentInstance:
    """One sub-instance of a decomposition, with maps back to the parent."""

    instance: Instance
    vertices: tuple  # parent vertex id per sub vertex
    colors: tuple  # parent color per sub color (sub color c maps to colors[c-1])


@dataclass(frozen=True)
class Decomposition:
    parts: tuple
    forced_unsolvable: bool


def decompose_by_swap_components(inst):
    """Split an instance along the connected components of its swap graph.

    Colors unused by the initial configuration are pruned first.  Each
    remaining component yields one sub-instance over the vertices carrying
    its colors.  Tokens never leave their component, so if a component's
    vertex set differs between initial and final the whole instance is
    unsolvable; that is reported via the forced_unsolvable flag.
    """
    from .graphs import components_of_swap

    used = set(inst.initial) | set(inst.final)
    comps = [sorted(c) for c in components_of_swap(inst.swap) if used & set(c)]
    comps.sort()

    parts = []
    forced = False
    for comp in comps:
        comp_set = set(comp)
        verts_i = [v for v, c in enumerate(inst.initial) if c in comp_set]
        verts_f = [v for v, c in enumerate(inst.final) if c in comp_set]
        if verts_i != verts_f:
            forced = True
            continue

        vmap = {old: new for new, old in enumerate(verts_i)}
        cmap = {old: new + 1 for new, old in enumerate(comp)}
        sub_edges = [
            (vmap[u], vmap[v]) for u, v in inst.base.edges if u in vmap and v in vmap
        ]
        sub_base = BaseGraph(
            n=len(verts_i),
            edges=tuple(sub_edges),
            labels=tuple(inst.base.labels[v] for v in verts_i) if inst.base.labels else None,
        )
        sub_swap = SwapGraph(
            k=len(comp),
            edges=tuple(
                (cmap[a], cmap[b]) for a, b in inst.swap.edges if a in cmap and b in cmap
            ),
            labels=tuple(inst.swap.labels[c - 1] for c in comp) if inst.swap.labels else None,
        )
        sub = Instance(
            base=sub_base,
            swap=sub_swap,
            initial=tuple(cmap[inst.initial[v]] for v in verts_i),
            final=tuple(cmap[inst.final[v]] for v in verts_i),
            name=f"{inst.name}::colors-{'-'.join(map(str, comp))}" if inst.name else "",
        )
        parts.append(ComponentInstance(instance=sub, vertices=tuple(verts_i), colors=tuple(comp)))

    return Decomposition(parts=tuple(parts), forced_unsolvable=forced)
