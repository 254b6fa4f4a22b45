"""Event-stream text format, batch replay, and latency benchmarking.

Stream format, one record per line: `t pitch dur_ms vel`, four base-10
integers separated by single spaces; `#` starts a comment line. Ticks are
strictly increasing (at most one input note per time-unit).
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .events import NoteEvent, Params, validate_event
from .session import ImprovSession


class StreamFormatError(ValueError):
    pass


@dataclass(frozen=True)
class TimedEvent:
    t: int
    event: NoteEvent


def parse_stream(text: str | Iterable[str]) -> list[TimedEvent]:
    """Parse a stream file body (or iterable of lines) into timed events."""
    if isinstance(text, str):
        lines = text.splitlines()
    else:
        lines = [ln.rstrip("\n") for ln in text]
    events: list[TimedEvent] = []
    last_t = -1
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 4:
            raise StreamFormatError(f"line {lineno}: expected 4 fields, got {len(parts)}")
        try:
            t, pitch, dur_ms, vel = (int(p) for p in parts)
        except ValueError:
            raise StreamFormatError(f"line {lineno}: non-integer field") from None
        if t < 0:
            raise StreamFormatError(f"line {lineno}: negative tick {t}")
        if t == last_t:
            raise StreamFormatError(f"line {lineno}: duplicate tick {t}")
        if t < last_t:
            raise StreamFormatError(f"line {lineno}: tick {t} out of order")
        event = NoteEvent(pitch, dur_ms, vel)
        bad = validate_event(event)
        if bad is not None:
            raise StreamFormatError(f"line {lineno}: field {bad!r} out of range")
        events.append(TimedEvent(t, event))
        last_t = t
    return events


def write_stream(events: Iterable[TimedEvent]) -> str:
    """Canonical serialization; parse(write(x)) == x."""
    return "".join(f"{te.t} {te.event.pitch} {te.event.dur_ms} {te.event.vel}\n" for te in events)


def run_batch(
    p: Params,
    seed: int,
    inputs: list[TimedEvent],
    max_tick: int | None = None,
    step_on_silence: bool = True,
) -> list[TimedEvent]:
    """Replay an input stream through a fresh session, tick 0..max_tick.

    max_tick defaults to the last input tick. Deterministic for fixed
    (params, seed, inputs).
    """
    if max_tick is None:
        max_tick = inputs[-1].t if inputs else -1
    session = ImprovSession(p, seed, step_on_silence=step_on_silence)
    by_tick = {te.t: te.event for te in inputs}
    out: list[TimedEvent] = []
    for t in range(max_tick + 1):
        emitted = session.tick(by_tick.get(t))
        out.extend(TimedEvent(t, e) for e in emitted)
    return out


def bench(
    p: Params,
    seed: int,
    inputs: list[TimedEvent],
    max_tick: int | None = None,
    step_on_silence: bool = True,
) -> dict:
    """Per-tick wall-time report (I/O excluded): mean, p50, p95, max, counts."""
    if max_tick is None:
        max_tick = inputs[-1].t if inputs else -1
    session = ImprovSession(p, seed, step_on_silence=step_on_silence)
    by_tick = {te.t: te.event for te in inputs}
    samples_ms = []
    emissions = 0
    for t in range(max_tick + 1):
        event = by_tick.get(t)
        start = time.perf_counter()
        emitted = session.tick(event)
        samples_ms.append((time.perf_counter() - start) * 1e3)
        emissions += len(emitted)
    if not samples_ms:
        return {"ticks": 0, "inputs": 0, "emissions": 0,
                "mean_ms": 0.0, "p50_ms": 0.0, "p95_ms": 0.0, "max_ms": 0.0}
    arr = np.asarray(samples_ms)
    return {
        "ticks": len(samples_ms),
        "inputs": len(inputs),
        "emissions": emissions,
        "mean_ms": float(arr.mean()),
        "p50_ms": float(np.percentile(arr, 50)),
        "p95_ms": float(np.percentile(arr, 95)),
        "max_ms": float(arr.max()),
    }
