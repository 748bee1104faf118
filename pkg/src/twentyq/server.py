"""HTTP JSON API for playing games and fetching analysis reports.

Sessions live in process memory behind per-session locks, expire after an
idle timeout, and are addressed by random 128-bit hex tokens.  Static
files (the web UI build) can be mounted at the root.
"""

from __future__ import annotations

import json
import os
import threading
import time
from typing import Optional

from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware
from fastapi.requests import Request
from fastapi.responses import JSONResponse
from fastapi.staticfiles import StaticFiles

from . import game
from .analysis import analyze, bar_bet_distribution
from .core import Distribution, parse_distribution
from .errors import LimitExceededError, SessionFinishedError, ValidationError
from .game import GameSession
from .optimal_search import max_objects

DEFAULT_TTL_SECS = 3600.0
TTL_ENV = "TQ_SESSION_TTL_SECS"

_DEV_ORIGINS = [
    "http://localhost:3000",
    "http://localhost:5173",
    "http://localhost:8000",
    "http://127.0.0.1:3000",
    "http://127.0.0.1:5173",
    "http://127.0.0.1:8000",
]


def session_ttl() -> float:
    raw = os.environ.get(TTL_ENV)
    if raw:
        try:
            value = float(raw)
        except ValueError:
            return DEFAULT_TTL_SECS
        if value > 0:
            return value
    return DEFAULT_TTL_SECS


class SessionStore:
    """Thread-safe session map with idle expiry."""

    def __init__(self, ttl: float):
        self.ttl = ttl
        self._map: dict[str, GameSession] = {}
        self._touched: dict[str, float] = {}
        self._locks: dict[str, threading.Lock] = {}
        self._guard = threading.Lock()

    def _expired(self, session_id: str, now: float) -> bool:
        return now - self._touched.get(session_id, 0.0) > self.ttl

    def sweep(self) -> None:
        now = time.monotonic()
        with self._guard:
            stale = [sid for sid in self._map if self._expired(sid, now)]
            for sid in stale:
                self._map.pop(sid, None)
                self._touched.pop(sid, None)
                self._locks.pop(sid, None)

    def put(self, session: GameSession) -> None:
        with self._guard:
            self._map[session.id] = session
            self._touched[session.id] = time.monotonic()
            self._locks.setdefault(session.id, threading.Lock())

    def get(self, session_id: str) -> Optional[GameSession]:
        now = time.monotonic()
        with self._guard:
            if session_id not in self._map or self._expired(session_id, now):
                return None
            self._touched[session_id] = now
            return self._map[session_id]

    def lock_for(self, session_id: str) -> threading.Lock:
        with self._guard:
            return self._locks.setdefault(session_id, threading.Lock())


def _session_json(session: GameSession) -> dict:
    stats = game.expected_questions(session)
    last_question: Optional[str] = game.current_question(session)
    return {
        "id": session.id,
        "state": session.state,
        "question": last_question,
        "question_number": session.question_count + 1
        if session.state == game.ACTIVE
        else session.question_count,
        "question_count": session.question_count,
        "won_object": session.won_object,
        "final_answer": "yes" if session.state == game.WON else None,
        "transcript": [
            {"question": t.question, "labels": list(t.labels), "answer": t.answer}
            for t in session.transcript
        ],
        "expected_questions": stats.l_yes,
        "entropy": stats.entropy_bits,
        "entropy_plus_one": stats.entropy_plus_one,
    }


def _error(status: int, message: str) -> JSONResponse:
    return JSONResponse(status_code=status, content={"error": message})


def create_app(
    static_dir: Optional[str] = None,
    ttl: Optional[float] = None,
    presets: Optional[dict[str, Distribution]] = None,
    cors_origins: Optional[list[str]] = None,
) -> FastAPI:
    app = FastAPI(title="twentyq", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware,
        allow_origins=cors_origins if cors_origins is not None else _DEV_ORIGINS,
        allow_methods=["*"],
        allow_headers=["*"],
    )
    store = SessionStore(ttl if ttl is not None else session_ttl())
    app.state.store = store
    known_presets = {"barbet": bar_bet_distribution()}
    if presets:
        known_presets.update(presets)

    def _resolve_dist(body: dict) -> Distribution:
        preset = body.get("preset")
        if preset is not None:
            if preset not in known_presets:
                raise ValidationError(f"unknown preset {preset!r}")
            return known_presets[preset]
        return parse_distribution(
            {"labels": body.get("labels"), "probs": body.get("probs")}
        )

    @app.post("/api/sessions")
    async def create_session(request: Request):
        store.sweep()
        try:
            body = await request.json()
        except json.JSONDecodeError:
            return _error(400, "request body must be JSON")
        if not isinstance(body, dict):
            return _error(400, "request body must be a JSON object")
        try:
            dist = _resolve_dist(body)
            session = game.start_session(dist)
        except LimitExceededError as exc:
            return _error(422, str(exc))
        except ValidationError as exc:
            return _error(400, str(exc))
        store.put(session)
        return JSONResponse(status_code=201, content=_session_json(session))

    @app.get("/api/sessions/{session_id}")
    async def get_session(session_id: str):
        session = store.get(session_id)
        if session is None:
            return _error(404, "no such session")
        return JSONResponse(content=_session_json(session))

    @app.post("/api/sessions/{session_id}/answers")
    async def post_answer(session_id: str, request: Request):
        try:
            body = await request.json()
        except json.JSONDecodeError:
            return _error(400, "request body must be JSON")
        if not isinstance(body, dict):
            return _error(400, "request body must be a JSON object")
        reply = body.get("answer")
        if reply not in ("yes", "no"):
            return _error(400, 'the answer must be "yes" or "no"')
        asked = body.get("question_number")
        with store.lock_for(session_id):
            session = store.get(session_id)
            if session is None:
                return _error(404, "no such session")
            if session.state != game.ACTIVE:
                return _error(409, f"session is already {session.state}")
            if asked is not None and asked != session.question_count + 1:
                return _error(
                    409,
                    f"question {asked} is not pending"
                    f" (current is {session.question_count + 1})",
                )
            try:
                advanced = game.answer(session, reply)
            except SessionFinishedError as exc:
                return _error(409, str(exc))
            store.put(advanced)
        return JSONResponse(content=_session_json(advanced))

    @app.get("/api/analysis")
    async def get_analysis(dist: Optional[str] = None):
        if not dist:
            return _error(400, 'pass ?dist=<preset> or ?dist={"labels":...,"probs":...}')
        try:
            if dist.lstrip().startswith("{"):
                try:
                    decoded = json.loads(dist)
                except json.JSONDecodeError:
                    return _error(400, "dist is not valid JSON")
                target = parse_distribution(decoded)
            elif dist in known_presets:
                target = known_presets[dist]
            else:
                return _error(400, f"unknown preset {dist!r}")
            report = analyze(target, limit=max_objects())
        except ValidationError as exc:
            return _error(400, str(exc))
        return JSONResponse(content=report.to_json())

    if static_dir:
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="static")

    return app
