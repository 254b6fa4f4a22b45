#!/usr/bin/env python3
"""Current dynamics and intensity rescaling.

Each stream (human and machine) keeps the mean of its last tau velocities.
Machine output velocity is rescaled by user_avg / machine_avg, so a softly
playing human gets a softly improvising machine.
"""

from improv import compute_factor, rescale, window_new

user = window_new(4)
for vel in (10, 21, 32, 5):
    user.push(vel)

machine = window_new(8)
machine_notes = [54, 65, 30, 58, 91]
for vel in machine_notes:
    machine.push(vel)

print(f"user average:    {float(user.average):.2f}")
print(f"machine average: {float(machine.average):.2f}")

factor, _ = compute_factor(user.average, machine.average)
print(f"rescale factor:  {float(factor):.4f}")
print(f"machine notes {machine_notes} become "
      f"{[rescale(v, factor) for v in machine_notes]}")

print("\nsliding-window behavior (tau=4):")
w = window_new(4)
for vel in (28, 28, 38, 25, 40, 30):
    avg = w.push(vel)
    print(f"  push {vel}: window {w.contents()}, sum {w.sum}, avg {float(avg):.2f}")
