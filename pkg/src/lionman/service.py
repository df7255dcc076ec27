"""Live-play session service.

A client drives the lion inside the disk; the server answers every tick with
the man's strictly-causal response (the boundary evader in the disk, the
antipodal evader on the circle). The wire protocol:

* ``POST /session``            -> {"id", "dt", "init": {"t", "lion", "man"}}
* ``WS   /session/{id}``       client {"t": float, "lion": [x, y]}
                               server {"t", "man": [x, y], "dist", "captured"}
* ``GET  /session/{id}/trace`` -> JSONL, same schema as the core trace format

The man's reply at tick j is a pure function of accepted lion samples at
ticks < j (strict mode). The game has no built-in speed; an optional speed
cap (disk radii per second) clamps client displacement per tick. With the
cap off a teleporting client can capture - that is documented behavior, not
a bug.
"""

from __future__ import annotations

import asyncio
import json
import uuid
from dataclasses import dataclass, field
from typing import Optional

from fastapi import FastAPI, WebSocket, WebSocketDisconnect
from fastapi.responses import JSONResponse, PlainTextResponse

from .core import History
from .disk import BesicovitchMan, CircleSpace, DiskSpace, DomainError, FixedPointFreeMan

TIME_SLACK = 1e-9

__all__ = ["ServiceSettings", "Session", "create_app"]


@dataclass
class ServiceSettings:
    dt: float = 1.0 / 60.0
    speed_cap: Optional[float] = None
    tolerance: float = 1e-9
    static_dir: Optional[str] = None


@dataclass
class Session:
    id: str
    space: object
    dt: float
    tolerance: float
    speed_cap: Optional[float]
    strategy: object
    times: list = field(default_factory=list)
    lion: list = field(default_factory=list)
    man: list = field(default_factory=list)
    dists: list = field(default_factory=list)
    captured: bool = False
    lock: asyncio.Lock = field(default_factory=asyncio.Lock)

    @property
    def expected_t(self) -> float:
        return len(self.times) * self.dt

    def clamp_input(self, p: complex) -> complex:
        if self.speed_cap is not None and self.lion:
            prev = self.lion[-1]
            step = p - prev
            limit = self.speed_cap * self.dt
            if abs(step) > limit:
                p = prev + step * (limit / abs(step))
        return self.space.clamp(p)

    def step(self, p: complex) -> dict:
        """Accept one lion sample; the man's reply uses strictly-earlier samples."""
        t = self.expected_t
        lion_p = self.clamp_input(p)
        # visible window: every already-accepted sample (times < t)
        man_p = self.strategy.move(t, History(self.space, self.times, self.lion, len(self.lion)))
        self.times.append(t)
        self.lion.append(lion_p)
        self.man.append(man_p)
        d = abs(man_p - lion_p)
        self.dists.append(d)
        if d <= self.tolerance:
            self.captured = True
        return {
            "t": t,
            "man": [man_p.real, man_p.imag],
            "dist": d,
            "captured": self.captured,
        }

    def trace_jsonl(self) -> str:
        lines = []
        for i, t in enumerate(self.times):
            lines.append(
                json.dumps(
                    {
                        "step": i,
                        "t": t,
                        "lion": [self.lion[i].real, self.lion[i].imag],
                        "man": [self.man[i].real, self.man[i].imag],
                        "dist": self.dists[i],
                        "captured": self.captured and i == len(self.times) - 1,
                    },
                    separators=(",", ":"),
                )
            )
        return "\n".join(lines) + "\n"


def _new_session(kind: str, settings: ServiceSettings, overrides: dict) -> Session:
    dt = float(overrides.get("dt", settings.dt))
    tolerance = float(overrides.get("tolerance", settings.tolerance))
    cap = overrides.get("speed_cap", settings.speed_cap)
    cap = None if cap is None else float(cap)
    if kind == "disk":
        space = DiskSpace()
        lion0, strategy = 0j, BesicovitchMan()
    elif kind == "circle":
        space = CircleSpace()
        lion0 = 1 + 0j
        strategy = FixedPointFreeMan(lambda z: -z, space, lion0)
    else:
        raise ValueError(f"unsupported space kind {kind!r}")
    session = Session(
        id=uuid.uuid4().hex,
        space=space,
        dt=dt,
        tolerance=tolerance,
        speed_cap=cap,
        strategy=strategy,
    )
    strategy.reset()
    man0 = strategy.move(0.0, History(space, [], [], 0))
    session.times.append(0.0)
    session.lion.append(lion0)
    session.man.append(man0)
    session.dists.append(abs(man0 - lion0))
    return session


def create_app(settings: Optional[ServiceSettings] = None) -> FastAPI:
    settings = settings or ServiceSettings()
    app = FastAPI(title="lionman service")
    sessions: dict[str, Session] = {}

    @app.get("/health")
    async def health():
        return {"ok": True}

    @app.post("/session")
    async def create_session(body: Optional[dict] = None):
        body = body or {}
        kind = body.get("space", "disk")
        try:
            session = _new_session(kind, settings, body)
        except (ValueError, TypeError) as exc:
            return JSONResponse({"error": str(exc)}, status_code=400)
        sessions[session.id] = session
        return {
            "id": session.id,
            "dt": session.dt,
            "init": {
                "t": 0.0,
                "lion": [session.lion[0].real, session.lion[0].imag],
                "man": [session.man[0].real, session.man[0].imag],
            },
        }

    @app.get("/session/{sid}/trace")
    async def get_trace(sid: str):
        session = sessions.get(sid)
        if session is None:
            return JSONResponse({"error": "unknown session"}, status_code=404)
        return PlainTextResponse(session.trace_jsonl(), media_type="application/x-ndjson")

    @app.websocket("/session/{sid}")
    async def play(ws: WebSocket, sid: str):
        session = sessions.get(sid)
        await ws.accept()
        if session is None:
            await ws.send_text(json.dumps({"error": "unknown session"}))
            await ws.close()
            return
        try:
            while True:
                raw = await ws.receive_text()
                async with session.lock:  # one in-flight step per session
                    try:
                        frame = json.loads(raw)
                        t = float(frame["t"])
                        x, y = frame["lion"]
                        p = complex(float(x), float(y))
                    except (KeyError, TypeError, ValueError, json.JSONDecodeError):
                        await ws.send_text(json.dumps({"error": "bad_frame"}))
                        continue
                    if session.captured:
                        await ws.send_text(json.dumps({"error": "gone"}))
                        await ws.close()
                        return
                    expected = session.expected_t
                    if abs(t - expected) > TIME_SLACK:
                        await ws.send_text(
                            json.dumps({"error": "out_of_order", "expected_t": expected})
                        )
                        continue
                    try:
                        reply = session.step(p)
                    except DomainError:
                        await ws.send_text(json.dumps({"error": "invalid_position"}))
                        continue
                    await ws.send_text(json.dumps(reply))
                    if session.captured:
                        await ws.close()
                        return
        except WebSocketDisconnect:
            return

    if settings.static_dir:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=settings.static_dir, html=True), name="ui")

    return app
