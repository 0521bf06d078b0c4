"""HTTP what-if service: upload sequences, read profiles, run simplification."""

from __future__ import annotations

import json
import threading
import uuid
from collections import OrderedDict
from pathlib import Path

from fastapi import FastAPI, Request, Response
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from . import __version__
from .metrics import analysis_to_dict, compute_profile
from .pipeline import SimplifyConfig, result_to_dict, simplify
from .sequence import MotionFormatError, from_dict, to_dict

MAX_BODY_BYTES = 64 * 1024 * 1024
DEFAULT_CAPACITY = 32


class SessionStore:
    """Bounded id -> session map with LRU eviction; thread-safe."""

    def __init__(self, capacity: int = DEFAULT_CAPACITY):
        self._capacity = capacity
        self._lock = threading.Lock()
        self._entries: OrderedDict[str, dict] = OrderedDict()

    def put(self, seq) -> str:
        session_id = uuid.uuid4().hex
        with self._lock:
            self._entries[session_id] = {"sequence": seq, "profile": None, "result": None}
            while len(self._entries) > self._capacity:
                self._entries.popitem(last=False)
        return session_id

    def get(self, session_id: str) -> dict | None:
        with self._lock:
            entry = self._entries.get(session_id)
            if entry is not None:
                self._entries.move_to_end(session_id)
            return entry

    def __len__(self) -> int:
        with self._lock:
            return len(self._entries)


def create_app(
    capacity: int = DEFAULT_CAPACITY,
    static_dir: str | None = None,
    allow_remote_cors: bool = False,
) -> FastAPI:
    app = FastAPI(title="motionsimp", version=__version__)
    store = SessionStore(capacity)
    app.state.store = store

    if allow_remote_cors:
        from fastapi.middleware.cors import CORSMiddleware

        app.add_middleware(CORSMiddleware, allow_origins=["*"], allow_methods=["*"],
                           allow_headers=["*"])

    @app.get("/healthz")
    def healthz():
        return {"status": "ok", "version": __version__}

    @app.post("/sequences", status_code=201)
    async def upload(request: Request):
        body = await request.body()
        if len(body) > MAX_BODY_BYTES:
            return JSONResponse({"error": "payload too large"}, status_code=413)
        try:
            seq = from_dict(json.loads(body))
        except (json.JSONDecodeError, MotionFormatError, ValueError) as exc:
            return JSONResponse({"error": str(exc)}, status_code=400)
        return {"id": store.put(seq)}

    @app.get("/sequences/{session_id}/profile")
    def profile(session_id: str):
        entry = store.get(session_id)
        if entry is None:
            return JSONResponse({"error": "unknown sequence id"}, status_code=404)
        if entry["profile"] is None:
            entry["profile"] = compute_profile(entry["sequence"])
        payload = analysis_to_dict(entry["sequence"], entry["profile"])
        return Response(json.dumps(payload, sort_keys=True), media_type="application/json")

    @app.post("/sequences/{session_id}/simplify")
    def run_simplify(session_id: str, config: dict):
        entry = store.get(session_id)
        if entry is None:
            return JSONResponse({"error": "unknown sequence id"}, status_code=404)
        try:
            cfg = config_from_dict(config)
        except (TypeError, ValueError) as exc:
            return JSONResponse({"error": str(exc)}, status_code=422)
        result = simplify(entry["sequence"], cfg)
        entry["result"] = result
        payload = result_to_dict(result)
        payload["motion"] = to_dict(result.motion)
        return Response(json.dumps(payload, sort_keys=True), media_type="application/json")

    if static_dir and Path(static_dir).is_dir():
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="studio")

    return app


_CONFIG_FIELDS = {
    "epsilon": float,
    "alpha": float,
    "k": float,
    "lambda_slow": int,
    "psi_target": lambda v: None if v is None else float(v),
    "sg_window": int,
    "sg_order": int,
}


def config_from_dict(data: dict) -> SimplifyConfig:
    """SimplifyConfig from a JSON object; unknown keys are rejected."""
    kwargs = {}
    for key, value in data.items():
        if key in _CONFIG_FIELDS:
            kwargs[key] = _CONFIG_FIELDS[key](value)
        elif key == "tau":
            kwargs["tau"] = tuple(None if v is None else float(v) for v in value)
        elif key == "min_len":
            kwargs["min_len"] = tuple(None if v is None else int(v) for v in value)
        elif key == "flip_vector":
            kwargs["flip_vector"] = tuple(int(v) for v in value)
        elif key == "criteria_enabled":
            kwargs["criteria_enabled"] = tuple(bool(v) for v in value)
        else:
            raise ValueError(f"unknown config key {key!r}")
    return SimplifyConfig(**kwargs)
