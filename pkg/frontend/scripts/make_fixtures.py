"""Regenerate the frontend contract fixtures from the Python package.

The browser tests run offline; everything they assert against the server
contract is captured here from the real implementation: legality tables come
from legal_swaps, the teaser witness from the exact solver, and the response
bodies from the actual HTTP app. Rerun after changing any wire format:

    python3 frontend/scripts/make_fixtures.py
"""
from __future__ import annotations

import itertools
import json
import random
from pathlib import Path

from fastapi.testclient import TestClient

from ccts import (
    Instance,
    apply_sequence,
    instance_to_dict,
    legal_swaps,
    reachable_configs,
    solve_bfs,
)
from ccts.generators import (
    cycle_instance,
    grid_instance,
    star_random_instance,
    t0_instance,
    teaser_instance,
)
from ccts.server import create_app

HERE = Path(__file__).resolve().parent
FIXTURES = HERE.parent / "tests" / "fixtures"
INSTANCE_DIR = HERE.parent.parent / "instances"


def write(name, payload):
    path = FIXTURES / name
    path.write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    print(f"wrote {path.relative_to(HERE.parent)}")


def legality_fixture():
    rng = random.Random(20240817)
    entries = []
    for inst, layout in (teaser_instance(), grid_instance(2, 3), cycle_instance(6),
                         t0_instance(), star_random_instance(7, 3, 5)):
        configs = [inst.initial, inst.final]
        current = inst.initial
        for _ in range(6):
            moves = legal_swaps(current, inst)
            if not moves:
                break
            current = apply_sequence(current, [rng.choice(sorted(moves))], inst)
            configs.append(current)
        entries.append({
            "doc": instance_to_dict(inst, layout=layout),
            "cases": [
                {"config": list(config), "legal": [list(e) for e in sorted(legal_swaps(config, inst))]}
                for config in configs
            ],
        })
    write("legality.json", {"instances": entries})


def teaser_fixture():
    inst, layout = teaser_instance()
    outcome = solve_bfs(inst)
    assert outcome.solvable
    write("teaser.json", {
        "doc": instance_to_dict(inst, layout=layout),
        "witness": [list(e) for e in outcome.witness],
        "states_explored": outcome.states_explored,
    })
    return inst, layout, outcome.witness


def first_unreachable(inst):
    reached = reachable_configs(inst)
    counts = tuple(sorted(inst.initial))
    for candidate in sorted(set(itertools.permutations(inst.initial))):
        if tuple(sorted(candidate)) == counts and bytes(candidate) not in reached:
            return candidate
    raise AssertionError("every count-matching configuration is reachable")


def server_fixture(teaser, layout, witness):
    client = TestClient(create_app(instance_dir=str(INSTANCE_DIR)))
    captured = {}

    def capture(key, response):
        captured[key] = {"status": response.status_code, "body": response.json()}

    capture("listing", client.get("/api/instances"))
    capture("instance_teaser", client.get("/api/instances/teaser"))
    capture("instance_missing", client.get("/api/instances/nope"))

    doc = instance_to_dict(teaser, layout=layout)
    near_goal = dict(doc)
    near_goal["initial"] = list(apply_sequence(teaser.initial, witness[:-1], teaser))
    capture("solve_near_goal", client.post("/api/solve", json={"instance": near_goal}))

    at_goal = dict(doc)
    at_goal["initial"] = list(teaser.final)
    capture("solve_at_goal", client.post("/api/solve", json={"instance": at_goal}))

    stuck = dict(doc)
    stuck["initial"] = list(first_unreachable(teaser))
    capture("solve_unsolvable", client.post("/api/solve", json={"instance": stuck}))

    capture("solve_budget", client.post(
        "/api/solve", json={"id": "teaser", "max_states": 5_000_000}))
    capture("solve_truncated", client.post(
        "/api/solve", json={"instance": doc, "max_states": 10}))
    capture("decide_grid", client.post(
        "/api/decide", json={"instance": instance_to_dict(grid_instance(2, 3)[0])}))
    write("server_responses.json", captured)


def main():
    FIXTURES.mkdir(parents=True, exist_ok=True)
    legality_fixture()
    inst, layout, witness = teaser_fixture()
    server_fixture(inst, layout, witness)


if __name__ == "__main__":
    main()
