"""Exhaustive breadth-first search over configurations.

This is the ground truth the polynomial decision procedure is checked
against. States are canonicalized to one byte per vertex (two bytes when a
swap graph somehow has more than 255 colors), so the visited set stays
compact even for millions of states.
"""
from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass

from .errors import StateLimitError

SOLVABLE = "solvable"
UNSOLVABLE = "unsolvable"
LIMIT_EXCEEDED = "limit_exceeded"

DEFAULT_MAX_STATES = 10_000_000


@dataclass(frozen=True)
class SearchOutcome:
    status: str
    witness: tuple | None
    states_explored: int

    @property
    def solvable(self):
        return self.status == SOLVABLE


def outcome_to_dict(outcome):
    """JSON-ready dict. Witness entries are swap pairs for configuration
    searches and plain edge indices for orientation searches."""
    witness = None
    if outcome.witness is not None:
        witness = [list(move) if isinstance(move, tuple) else move for move in outcome.witness]
    return {
        "status": outcome.status,
        "witness": witness,
        "states_explored": outcome.states_explored,
    }


def serialize_outcome(outcome):
    return json.dumps(outcome_to_dict(outcome), indent=2, sort_keys=True)


def encode_config(config, k):
    if k <= 255:
        return bytes(config)
    out = bytearray()
    for c in config:
        out += c.to_bytes(2, "little")
    return bytes(out)


def decode_key(key, k):
    if k <= 255:
        return tuple(key)
    return tuple(int.from_bytes(key[i : i + 2], "little") for i in range(0, len(key), 2))


def _legal_matrix(swap):
    """Flat lookup table: legal[a * (k + 1) + b] for colors a, b."""
    k = swap.k
    legal = bytearray((k + 1) * (k + 1))
    for a, b in swap.edges:
        legal[a * (k + 1) + b] = 1
        legal[b * (k + 1) + a] = 1
    return legal


def solve_bfs(inst, max_states=DEFAULT_MAX_STATES):
    """Shortest witness via BFS, expanding swaps in sorted edge order.

    states_explored counts distinct visited configurations, the initial one
    included. The outcome is LimitExceeded as soon as the visited set would
    grow past max_states.
    """
    k = inst.swap.k
    wide = k > 255
    start = encode_config(inst.initial, k)
    goal = encode_config(inst.final, k)
    if start == goal:
        return SearchOutcome(SOLVABLE, (), 1)

    edges = inst.base.edges
    legal = _legal_matrix(inst.swap)
    kk = k + 1

    parents = {start: None}
    queue = deque([start])
    while queue:
        state = queue.popleft()
        for u, v in edges:
            if wide:
                a = int.from_bytes(state[2 * u : 2 * u + 2], "little")
                b = int.from_bytes(state[2 * v : 2 * v + 2], "little")
            else:
                a = state[u]
                b = state[v]
            if not legal[a * kk + b]:
                continue
            child = bytearray(state)
            if wide:
                child[2 * u : 2 * u + 2] = b.to_bytes(2, "little")
                child[2 * v : 2 * v + 2] = a.to_bytes(2, "little")
            else:
                child[u] = b
                child[v] = a
            child = bytes(child)
            if child in parents:
                continue
            if len(parents) >= max_states:
                return SearchOutcome(LIMIT_EXCEEDED, None, len(parents))
            parents[child] = (state, (u, v))
            if child == goal:
                moves = []
                cur = child
                while parents[cur] is not None:
                    cur, move = parents[cur]
                    moves.append(move)
                moves.reverse()
                return SearchOutcome(SOLVABLE, tuple(moves), len(parents))
            queue.append(child)
    return SearchOutcome(UNSOLVABLE, None, len(parents))


def reachable_configs(inst, max_states=DEFAULT_MAX_STATES):
    """Every configuration reachable from the initial one, as canonical keys."""
    k = inst.swap.k
    if k > 255:
        raise StateLimitError(0)  # keys would be ambiguous; nothing here needs k > 255
    start = encode_config(inst.initial, k)
    edges = inst.base.edges
    legal = _legal_matrix(inst.swap)
    kk = k + 1

    seen = {start}
    queue = deque([start])
    while queue:
        state = queue.popleft()
        for u, v in edges:
            a = state[u]
            b = state[v]
            if not legal[a * kk + b]:
                continue
            child = bytearray(state)
            child[u] = b
            child[v] = a
            child = bytes(child)
            if child not in seen:
                if len(seen) >= max_states:
                    raise StateLimitError(len(seen))
                seen.add(child)
                queue.append(child)
    return frozenset(seen)


def verify_sequence(inst, seq):
    """Replay a swap sequence; True iff every swap is legal and the final
    configuration is reached."""
    from .errors import IllegalSwapError
    from .model import apply_swap

    config = inst.initial
    for edge in seq:
        try:
            config = apply_swap(config, tuple(edge), inst)
        except IllegalSwapError:
            return False
    return config == inst.final


def solvable_symmetric_check(inst, max_states=DEFAULT_MAX_STATES):
    """Solve in both directions and report whether the answers agree."""
    from .model import Instance

    forward = solve_bfs(inst, max_states)
    backward = solve_bfs(
        Instance(base=inst.base, swap=inst.swap, initial=inst.final, final=inst.initial,
                 name=inst.name),
        max_states,
    )
    if LIMIT_EXCEEDED in (forward.status, backward.status):
        raise StateLimitError(max(forward.states_explored, backward.states_explored))
    return forward.status == backward.status
