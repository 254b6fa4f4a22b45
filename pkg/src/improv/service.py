"""Live session service: one websocket connection owns one independent
improvisation session.

Protocol (one JSON object per text frame):
  server -> client  {"type":"hello","version":1,"seed":12345}
  client -> server  {"type":"hello","seed":7}            optional seed override
  client -> server  {"type":"note_in","pitch":60,"dur_ms":250,"vel":96}
  server -> client  {"type":"note_out","tick":41,"pitch":62,"dur_ms":500,"vel":58}
  server -> client  {"type":"ack","tick":41}             note_in with no emission, or set_params
  client -> server  {"type":"set_params","alpha":0.5,"beta":"4/5","tau":16}
  client -> server  {"type":"snapshot_request"}
  server -> client  {"type":"snapshot", ...session snapshot fields...}
  server -> client  {"type":"error","msg":"..."}

gamma, c, and n are structural and fixed at session start; set_params only
accepts alpha, beta, tau. Unknown or malformed messages get an error reply
without closing the connection. GET /healthz answers "ok".
"""

from __future__ import annotations

import asyncio
import itertools
import json
from fractions import Fraction

from fastapi import FastAPI, WebSocket, WebSocketDisconnect
from fastapi.responses import PlainTextResponse

from .events import NoteEvent, Params
from .session import ImprovSession

PROTOCOL_VERSION = 1


def _parse_beta_field(value) -> Fraction:
    if isinstance(value, str):
        num, den = value.split("/")
        return Fraction(int(num), int(den))
    return Fraction(value)


class _Connection:
    """Per-connection state; all session access is serialized by a lock so a
    metronome task never interleaves with message handling."""

    def __init__(self, params: Params, seed: int):
        self.session = ImprovSession(params, seed)
        self.seed = seed
        self.lock = asyncio.Lock()

    def handle(self, msg: dict) -> list[dict]:
        mtype = msg.get("type")
        if mtype == "note_in":
            return self._note_in(msg)
        if mtype == "set_params":
            return self._set_params(msg)
        if mtype == "snapshot_request":
            return [{"type": "snapshot", **self.session.snapshot()}]
        return [{"type": "error", "msg": f"unknown message type {mtype!r}"}]

    def _note_in(self, msg: dict) -> list[dict]:
        try:
            event = NoteEvent(int(msg["pitch"]), int(msg["dur_ms"]), int(msg["vel"]))
        except (KeyError, TypeError, ValueError) as exc:
            return [{"type": "error", "msg": f"malformed note_in: {exc}"}]
        tick = self.session.tick_index
        try:
            emitted = self.session.tick(event)
        except ValueError as exc:
            return [{"type": "error", "msg": str(exc)}]
        if not emitted:
            return [{"type": "ack", "tick": tick}]
        return [
            {"type": "note_out", "tick": tick, "pitch": e.pitch, "dur_ms": e.dur_ms, "vel": e.vel}
            for e in emitted
        ]

    def _set_params(self, msg: dict) -> list[dict]:
        frozen = {"gamma", "c", "n"} & msg.keys()
        if frozen:
            return [{"type": "error", "msg": f"immutable parameter(s): {sorted(frozen)}"}]
        try:
            beta = _parse_beta_field(msg["beta"]) if "beta" in msg else None
            self.session.update_params(
                alpha=msg.get("alpha"), beta=beta, tau=msg.get("tau"))
        except (ValueError, TypeError) as exc:
            return [{"type": "error", "msg": f"bad set_params: {exc}"}]
        return [{"type": "ack", "tick": self.session.tick_index}]


def create_app(default_params: Params | None = None, seed_base: int = 0,
               metronome_ms: int | None = None) -> FastAPI:
    params = default_params or Params()
    seed_counter = itertools.count(seed_base)
    app = FastAPI()

    @app.get("/healthz", response_class=PlainTextResponse)
    async def healthz() -> str:
        return "ok"

    @app.websocket("/ws")
    async def ws_session(ws: WebSocket):
        await ws.accept()
        conn = _Connection(params, next(seed_counter))
        await ws.send_text(json.dumps(
            {"type": "hello", "version": PROTOCOL_VERSION, "seed": conn.seed}))

        async def metronome():
            while True:
                await asyncio.sleep(metronome_ms / 1e3)
                async with conn.lock:
                    tick = conn.session.tick_index
                    emitted = conn.session.tick(None)
                for e in emitted:
                    await ws.send_text(json.dumps(
                        {"type": "note_out", "tick": tick,
                         "pitch": e.pitch, "dur_ms": e.dur_ms, "vel": e.vel}))

        beat = asyncio.create_task(metronome()) if metronome_ms else None
        try:
            while True:
                raw = await ws.receive_text()
                try:
                    msg = json.loads(raw)
                except json.JSONDecodeError:
                    await ws.send_text(json.dumps(
                        {"type": "error", "msg": "frame is not valid JSON"}))
                    continue
                if msg.get("type") == "hello":
                    # client-supplied seed: restart the session with it
                    seed = int(msg.get("seed", conn.seed))
                    async with conn.lock:
                        conn.session = ImprovSession(conn.session.params, seed)
                        conn.seed = seed
                    await ws.send_text(json.dumps(
                        {"type": "hello", "version": PROTOCOL_VERSION, "seed": seed}))
                    continue
                async with conn.lock:
                    replies = conn.handle(msg)
                for reply in replies:
                    await ws.send_text(json.dumps(reply))
        except WebSocketDisconnect:
            pass
        finally:
            if beat:
                beat.cancel()

    return app


def serve(port: int, default_params: Params | None = None, host: str = "127.0.0.1",
          seed_base: int = 0, metronome_ms: int | None = None) -> None:
    """Run the service until stopped."""
    import uvicorn

    app = create_app(default_params, seed_base=seed_base, metronome_ms=metronome_ms)
    uvicorn.run(app, host=host, port=port, log_level="warning")
