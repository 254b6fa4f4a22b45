#!/usr/bin/env python3
"""End-to-end batch run: feed a motif stream, get an improvised stream.

The engine learns one input note per tick. Once n notes are in, every tick
also emits one improvised note whose velocity follows the player's current
dynamics. The whole run is reproducible from (params, seed, input).
"""

import random

from improv import NoteEvent, Params, TimedEvent, bench, run_batch, write_stream

motif = [67, 67, 69, 67, 72, 71]
rnd = random.Random(1)
inputs = [
    TimedEvent(t, NoteEvent(motif[t % len(motif)], 250, 45 + rnd.randrange(60)))
    for t in range(48)
]

params = Params(n=8, tau=8)
out = run_batch(params, seed=2026, inputs=inputs, max_tick=64)

print(f"learned {len(inputs)} notes, improvised {len(out)}; first emission at tick "
      f"{out[0].t}")
print("\nimprovised stream (tick pitch dur vel):")
print(write_stream(out[:12]), "...")

again = run_batch(params, seed=2026, inputs=inputs, max_tick=64)
print(f"re-run with the same seed is identical: {out == again}")

report = bench(params, seed=2026, inputs=inputs, max_tick=64)
print(f"\nper-tick latency: mean {report['mean_ms']:.3f} ms, "
      f"p95 {report['p95_ms']:.3f} ms over {report['ticks']} ticks")
