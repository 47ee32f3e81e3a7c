"""Core model: graphs, configurations, swap legality, decomposition."""
import pytest

from ccts.errors import IllegalSwapError
from ccts.model import (
    BaseGraph,
    Instance,
    SwapGraph,
    apply_sequence,
    apply_swap,
    color_counts,
    decompose_by_swap_components,
    legal_swaps,
    report_to_dict,
    validate,
)


def _path_instance():
    # P3 with a star swap graph centered on color 1
    base = BaseGraph(n=3, edges=((0, 1), (1, 2)))
    swap = SwapGraph(k=3, edges=((1, 2), (1, 3)))
    return Instance(base=base, swap=swap, initial=(1, 2, 3), final=(2, 1, 3))


def test_edges_are_normalized():
    g = BaseGraph(n=4, edges=((3, 1), (0, 2), (2, 1)))
    assert g.edges == ((0, 2), (1, 2), (1, 3))
    assert g.adjacency[2] == (0, 1)
    assert g.degree(2) == 2


def test_bad_graphs_are_rejected():
    with pytest.raises(ValueError):
        BaseGraph(n=3, edges=((0, 0),))
    with pytest.raises(ValueError):
        BaseGraph(n=3, edges=((0, 3),))
    with pytest.raises(ValueError):
        BaseGraph(n=3, edges=((0, 1), (1, 0)))
    with pytest.raises(ValueError):
        SwapGraph(k=2, edges=((0, 1),))  # colors are 1-based
    with pytest.raises(ValueError):
        BaseGraph(n=2, edges=(), labels=("only one",))


def test_configuration_bounds_checked():
    base = BaseGraph(n=2, edges=((0, 1),))
    swap = SwapGraph(k=2, edges=((1, 2),))
    with pytest.raises(ValueError):
        Instance(base=base, swap=swap, initial=(1,), final=(1, 2))
    with pytest.raises(ValueError):
        Instance(base=base, swap=swap, initial=(1, 3), final=(1, 2))


def test_swap_graph_allows_is_symmetric_and_irreflexive():
    swap = SwapGraph(k=3, edges=((1, 2),))
    assert swap.allows(1, 2) and swap.allows(2, 1)
    assert not swap.allows(1, 1)  # simple graph: same color never swaps
    assert not swap.allows(2, 3)


def test_color_counts():
    assert color_counts((1, 2, 2, 3), 4) == (1, 2, 1, 0)


def test_validate_clean_instance():
    report = validate(_path_instance())
    assert report.ok
    assert report_to_dict(report) == {
        "ok": True,
        "base_connected": True,
        "counts_match": True,
        "colors_present": True,
        "findings": [],
    }


def test_validate_reports_findings():
    base = BaseGraph(n=4, edges=((0, 1), (2, 3)))
    swap = SwapGraph(k=3, edges=((1, 2), (1, 3)))
    inst = Instance(base=base, swap=swap, initial=(1, 1, 2, 2), final=(1, 2, 1, 1))
    report = validate(inst)
    assert not report.ok
    assert not report.base_connected
    assert not report.counts_match
    assert not report.colors_present  # color 3 never used
    assert len(report.findings) == 3


def test_legal_swaps_and_apply():
    inst = _path_instance()
    assert legal_swaps(inst.initial, inst) == {(0, 1)}  # 2-3 not adjacent colors
    after = apply_swap(inst.initial, (1, 0), inst)  # edge order does not matter
    assert after == (2, 1, 3)
    assert legal_swaps(after, inst) == {(0, 1), (1, 2)}


def test_apply_swap_rejections():
    inst = _path_instance()
    with pytest.raises(IllegalSwapError):
        apply_swap(inst.initial, (0, 2), inst)  # not a base edge
    with pytest.raises(IllegalSwapError) as err:
        apply_swap(inst.initial, (1, 2), inst)  # colors 2, 3 may not swap
    assert err.value.colors == (2, 3)


def test_apply_sequence_reaches_goal():
    inst = _path_instance()
    assert apply_sequence(inst.initial, ((0, 1),), inst) == inst.final


def test_decompose_splits_along_swap_components():
    # two disjoint swap pairs: colors {1,2} and {3,4}
    base = BaseGraph(n=4, edges=((0, 1), (1, 2), (2, 3)))
    swap = SwapGraph(k=4, edges=((1, 2), (3, 4)))
    inst = Instance(base=base, swap=swap, initial=(1, 2, 3, 4), final=(2, 1, 4, 3),
                    name="pair")
    deco = decompose_by_swap_components(inst)
    assert not deco.forced_unsolvable
    assert len(deco.parts) == 2
    first, second = deco.parts
    assert first.vertices == (0, 1) and first.colors == (1, 2)
    assert first.instance.initial == (1, 2) and first.instance.final == (2, 1)
    assert first.instance.name == "pair::colors-1-2"
    assert second.vertices == (2, 3) and second.colors == (3, 4)
    # the bridging edge (1, 2) joins different components, so it is dropped
    assert first.instance.base.edges == ((0, 1),)
    assert second.instance.base.edges == ((0, 1),)


def test_decompose_flags_component_vertex_mismatch():
    # a color-{3,4} token must end where a color-{1,2} token started
    base = BaseGraph(n=2, edges=((0, 1),))
    swap = SwapGraph(k=4, edges=((1, 2), (3, 4)))
    inst = Instance(base=base, swap=swap, initial=(1, 3), final=(3, 1))
    deco = decompose_by_swap_components(inst)
    assert deco.forced_unsolvable
    assert deco.parts == ()


def test_decompose_prunes_unused_colors():
    base = BaseGraph(n=2, edges=((0, 1),))
    swap = SwapGraph(k=5, edges=((1, 2), (4, 5)))
    inst = Instance(base=base, swap=swap, initial=(1, 2), final=(2, 1))
    deco = decompose_by_swap_components(inst)
    assert len(deco.parts) == 1
    assert deco.parts[0].colors == (1, 2)
