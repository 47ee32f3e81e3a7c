"""Constraint graph to swapping instance compilation."""
import itertools

import pytest

from ccts.generators import ncl_fixture
from ccts.model import Instance, color_counts
from ccts.ncl import flip, is_valid_config, legal_flips, solve_ncl_bfs
from ccts.oracle import reachable_configs, solve_bfs, verify_sequence
from ccts.reduction import (
    P4,
    build_and_gadget,
    build_edge_gadget,
    build_or_gadget,
    decode_orientation,
    encode_orientation,
    flip_script,
    layout_from_dict,
    layout_to_dict,
    pad_to_cubic,
    parse_layout,
    reduce,
    serialize_layout,
)


def test_swap_graph_is_a_path_on_four_colors():
    assert P4.k == 4 and P4.edges == ((1, 2), (2, 3), (3, 4))


def test_edge_gadget_tokens_encode_direction():
    count, edges, toward_u = build_edge_gadget(True)
    assert count == 6 and (1, 4) in edges  # the chord pairs x2 with x5
    assert toward_u == (1, 1, 3, 1, 4, 1)
    _, _, toward_v = build_edge_gadget(False)
    assert toward_v == (1, 4, 1, 3, 1, 1)
    # the two encodings use the same multiset of colors
    assert sorted(toward_u) == sorted(toward_v)


def test_or_gadget_token_count_tracks_in_degree():
    for indeg in (1, 2, 3):
        count, edges, tokens = build_or_gadget(indeg)
        assert count == 3 and len(edges) == 3
        assert tokens.count(2) == indeg - 1


def test_and_gadget_states():
    _, _, down = build_and_gadget(True, True, False)
    assert down == (3, 2, 4, 1, 4, 2)
    _, _, up = build_and_gadget(False, True, True)
    assert up == (2, 4, 2, 4, 1, 3)
    with pytest.raises(ValueError):
        build_and_gadget(False, True, False)  # in-weight below threshold


def _solvability_matches(name):
    fx = ncl_fixture(name)
    out = reduce(fx)
    assert not out.forced_unsolvable
    assert decode_orientation(out, out.instance.initial) == fx.initial
    assert decode_orientation(out, out.instance.final) == fx.final
    assert solve_bfs(out.instance).solvable == solve_ncl_bfs(fx).solvable
    return out


def test_reduction_preserves_solvability():
    out = _solvability_matches("or2")
    assert out.instance.base.n == 24
    out = _solvability_matches("and2")
    assert out.instance.base.n == 30
    _solvability_matches("and_or")


def test_encode_rejects_connection_mismatch():
    fx = ncl_fixture("or2")
    out = reduce(fx)
    with pytest.raises(ValueError):
        encode_orientation(out, (0, 0, 0))  # starves node 1


def test_every_reachable_config_decodes():
    fx = ncl_fixture("or2")
    out = reduce(fx)
    reach = reachable_configs(out.instance)
    assert len(reach) == 72
    decoded = {decode_orientation(out, cfg) for cfg in reach}
    # more swap states than orientations: gadget shuffles are invisible
    assert all(is_valid_config(fx.graph, o) for o in decoded)
    assert decoded == {
        o
        for o in itertools.product(*[(u, v) for u, v, _ in fx.graph.edges])
        if is_valid_config(fx.graph, o)
    }


def test_flip_scripts_walk_between_canonical_encodings():
    for name in ("or2", "and_or"):
        fx = ncl_fixture(name)
        out = reduce(fx)
        seen = set()
        frontier = [fx.initial]
        while frontier:
            o = frontier.pop()
            if o in seen:
                continue
            seen.add(o)
            for i in sorted(legal_flips(fx.graph, o)):
                script = flip_script(out, o, i)
                flipped = flip(fx.graph, o, i)
                probe = Instance(
                    base=out.instance.base,
                    swap=out.instance.swap,
                    initial=encode_orientation(out, o),
                    final=encode_orientation(out, flipped),
                )
                assert verify_sequence(probe, script), (name, o, i)
                frontier.append(flipped)


def test_flip_script_rejects_bad_input():
    fx = ncl_fixture("or2")
    out = reduce(fx)
    with pytest.raises(ValueError):
        flip_script(out, (0, 0, 0), 0)
    with pytest.raises(ValueError):
        flip_script(out, fx.final, 2)


def test_padding_makes_every_degree_three():
    for name, padded_n in (("or2", 84), ("and2", 116)):
        fx = ncl_fixture(name)
        out = reduce(fx, cubic=True)
        base = out.instance.base
        assert base.n == padded_n
        assert all(base.degree(v) == 3 for v in range(base.n))
        assert solve_bfs(out.instance).solvable == solve_ncl_bfs(fx).solvable
        # dummies are recorded and blank on both sides
        assert out.layout.dummies
        for v in out.layout.dummies:
            assert out.instance.initial[v] == 1 and out.instance.final[v] == 1


def test_padding_keeps_color_counts_balanced():
    fx = ncl_fixture("or2")
    out = reduce(fx, cubic=True)
    assert color_counts(out.instance.initial, 4) == color_counts(out.instance.final, 4)


def test_pad_is_idempotent_on_cubic_outputs():
    fx = ncl_fixture("or2")
    out = reduce(fx)
    once = pad_to_cubic(out)
    twice = pad_to_cubic(once)
    assert twice.instance == once.instance and twice.layout == once.layout


def test_layout_round_trip():
    fx = ncl_fixture("and_or")
    out = reduce(fx, cubic=True)
    text = serialize_layout(out.layout)
    again = parse_layout(text)
    assert again == out.layout
    assert layout_from_dict(layout_to_dict(out.layout)) == out.layout
    kinds = sorted({g.kind for g in out.layout.gadgets})
    assert kinds == ["and", "edge", "or"]
