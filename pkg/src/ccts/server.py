"""HTTP API over the solvers plus static hosting for the web UI.

The instance store is a directory of JSON files served verbatim, so extra
presentation fields such as vertex coordinates survive the round trip to
the browser. The store is read-only: nothing here ever writes to it.
"""
from __future__ import annotations

import json
from pathlib import Path

from fastapi import Body, FastAPI, HTTPException
from fastapi.responses import Response
from fastapi.staticfiles import StaticFiles

from .errors import NotStarError, ParseError
from .jsonio import instance_from_dict
from .oracle import outcome_to_dict, solve_bfs
from .star import decide, verdict_to_dict

DEFAULT_MAX_STATES_CAP = 2_000_000


def _instance_files(instance_dir):
    files = []
    for path in sorted(Path(instance_dir).glob("*.json")):
        if not path.name.endswith(".layout.json"):
            files.append(path)
    return files


def create_app(instance_dir="instances", max_states_cap=DEFAULT_MAX_STATES_CAP,
               static_dir=None):
    app = FastAPI(title="ccts")
    instance_dir = Path(instance_dir)

    def _load_raw(instance_id):
        if "/" in instance_id or "\\" in instance_id or instance_id.startswith("."):
            raise HTTPException(status_code=404, detail="unknown instance")
        path = instance_dir / f"{instance_id}.json"
        if not path.is_file():
            raise HTTPException(status_code=404, detail="unknown instance")
        return path.read_text(encoding="utf-8")

    def _instance_from_payload(payload):
        if "instance" in payload:
            data = payload["instance"]
        elif "id" in payload:
            data = json.loads(_load_raw(payload["id"]))
        else:
            raise HTTPException(status_code=422,
                                detail="payload needs an 'id' or an inline 'instance'")
        try:
            return instance_from_dict(data)
        except (ParseError, TypeError, AttributeError) as exc:
            raise HTTPException(status_code=422, detail=str(exc)) from exc

    @app.get("/api/instances")
    def list_instances():
        entries = []
        for path in _instance_files(instance_dir):
            try:
                data = json.loads(path.read_text(encoding="utf-8"))
                name = data.get("name", "")
            except (OSError, json.JSONDecodeError):
                continue
            entries.append({"id": path.stem, "name": name})
        return entries

    @app.get("/api/instances/{instance_id}")
    def get_instance(instance_id: str):
        return Response(content=_load_raw(instance_id), media_type="application/json")

    @app.post("/api/solve")
    def solve(payload: dict = Body(...)):
        inst = _instance_from_payload(payload)
        max_states = payload.get("max_states", max_states_cap)
        if not isinstance(max_states, int) or max_states < 1:
            raise HTTPException(status_code=422, detail="max_states must be a positive integer")
        if max_states > max_states_cap:
            raise HTTPException(status_code=429,
                                detail=f"max_states capped at {max_states_cap}")
        return outcome_to_dict(solve_bfs(inst, max_states=max_states))

    @app.post("/api/decide")
    def decide_endpoint(payload: dict = Body(...)):
        inst = _instance_from_payload(payload)
        try:
            verdict = decide(inst)
        except NotStarError as exc:
            raise HTTPException(status_code=422, detail=str(exc)) from exc
        return verdict_to_dict(verdict)

    if static_dir is not None and Path(static_dir).is_dir():
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")

    return app
