"""Generated instance families."""
import pytest

from ccts.generators import (
    FIXTURE_NAMES,
    cycle_instance,
    grid_instance,
    ncl_fixture,
    star_random_instance,
    t0_instance,
    teaser_instance,
)
from ccts.graphs import is_connected, is_cycle, is_t0
from ccts.model import validate
from ccts.ncl import validate_ncl
from ccts.oracle import solve_bfs
from ccts.star import star_center


def test_grid_shape_and_layout():
    inst, layout = grid_instance(3, 4)
    assert inst.base.n == 12 and len(inst.base.edges) == 17
    assert inst.swap.k == 12 and star_center(inst.swap) == 1
    assert layout[5] == (1, 1)  # vertex r*cols + c sits at (c, r)
    assert validate(inst).ok
    with pytest.raises(ValueError):
        grid_instance(1, 1)


def test_grid_seeded_goal_is_deterministic():
    a, _ = grid_instance(2, 3, seed=9)
    b, _ = grid_instance(2, 3, seed=9)
    assert a == b
    c, _ = grid_instance(2, 3, seed=10)
    assert sorted(c.final) == sorted(a.final)


def test_cycle_rotation_is_always_solvable():
    for n, blanks, shift in ((3, 1, 1), (6, 2, 3), (8, 1, 5)):
        inst, layout = cycle_instance(n, blanks=blanks, shift=shift)
        assert is_cycle(inst.base) and len(layout) == n
        assert inst.initial.count(1) == blanks
        assert solve_bfs(inst).solvable, (n, blanks, shift)
    with pytest.raises(ValueError):
        cycle_instance(2)
    with pytest.raises(ValueError):
        cycle_instance(5, blanks=5)


def test_t0_instance_sits_on_the_exceptional_graph():
    inst, layout = t0_instance()
    assert is_t0(inst.base) and len(layout) == 7
    assert inst.initial == tuple(range(1, 8)) and inst.final == inst.initial


def test_star_random_is_connected_and_balanced():
    for seed in range(10):
        inst, layout = star_random_instance(7, 3, seed)
        assert layout is None
        assert is_connected(inst.base)
        assert star_center(inst.swap) is not None
        assert sorted(inst.initial) == sorted(inst.final)
        assert validate(inst).ok
    assert star_random_instance(7, 3, 4) == star_random_instance(7, 3, 4)


def test_teaser_is_solvable_and_labeled():
    inst, layout = teaser_instance()
    assert inst.base.n == 8 and len(layout) == 8
    assert inst.swap.labels == ("fox", "caterpillar", "farmer", "chicken")
    out = solve_bfs(inst)
    assert out.solvable and len(out.witness) == 20


def test_ncl_fixtures_are_well_formed():
    for name in FIXTURE_NAMES:
        fx = ncl_fixture(name)
        assert validate_ncl(fx.graph) == []
    with pytest.raises(ValueError):
        ncl_fixture("or3")
