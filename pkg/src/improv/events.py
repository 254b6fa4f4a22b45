"""Note events and engine parameters."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

_U32 = 2**32 - 1


@dataclass(frozen=True)
class NoteEvent:
    """One musical event: MIDI pitch, duration in ms, velocity.

    Velocity 0 is deliberately excluded: it means note-off in MIDI and the
    engine deals only in sounding notes.
    """

    pitch: int
    dur_ms: int
    vel: int


def validate_event(e: NoteEvent) -> str | None:
    """Return None if the event is valid, else the name of the bad field."""
    if not 0 <= e.pitch <= 127:
        return "pitch"
    if e.dur_ms < 1:
        return "dur_ms"
    if not 1 <= e.vel <= 127:
        return "vel"
    return None


def check_event(e: NoteEvent) -> None:
    """Raise ValueError naming the offending field if the event is invalid."""
    bad = validate_event(e)
    if bad is not None:
        raise ValueError(f"invalid note event: field {bad!r} out of range ({e})")


@dataclass(frozen=True)
class Params:
    """Tunable engine parameters.

    alpha  recombination factor: weight of the suffix branch when choosing
           a continuation (higher favors recombined variations)
    beta   decay multiplier applied to a link weight each time it is chosen;
           stored as an exact rational so decay stays integer-exact
    gamma  initial weight of a non-first factor link leaving a state
    c      initial weight of a state's first factor link (c >> gamma)
    tau    sliding-window length for the running intensity average
    n      notes to learn before the simulation may start
    """

    alpha: float = 0.5
    beta: Fraction = field(default_factory=lambda: Fraction(4, 5))
    gamma: int = 10_000
    c: int = 1_000_000
    tau: int = 16
    n: int = 10

    def __post_init__(self):
        if not 0.0 <= self.alpha <= 1.0:
            raise ValueError(f"alpha must be in [0,1], got {self.alpha}")
        beta = Fraction(self.beta)
        if not 0 < beta < 1:
            raise ValueError(f"beta must be in (0,1), got {beta}")
        if not (0 <= beta.numerator <= _U32 and 0 < beta.denominator <= _U32):
            raise ValueError("beta numerator/denominator must fit in 32 bits")
        object.__setattr__(self, "beta", beta)
        if not 1 <= self.gamma <= self.c:
            raise ValueError(f"need 1 <= gamma <= c, got gamma={self.gamma} c={self.c}")
        if self.tau < 1:
            raise ValueError(f"tau must be >= 1, got {self.tau}")
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
