"""The two-phase improvisation engine.

Learning ticks extend the oracle, link weights, contexts, and the user
dynamics window; simulation ticks sample the continuation distribution,
decay the chosen link, advance the traversal state, rescale intensity
against the user's current dynamics, and emit one note. Improvisation is
gated until n notes have been learned and never leaves the built prefix.
"""

from __future__ import annotations

import logging

from .dynamics import DynamicsWindow, compute_factor, rescale
from .events import NoteEvent, Params, check_event
from .oracle import FactorOracle
from .rng import SplitMix64
from .weights import LinkWeights, phi, sample

log = logging.getLogger(__name__)


class ImprovSession:
    """Single-owner improvisation state: one oracle, one weight table, one
    traversal position, one seeded generator."""

    def __init__(self, params: Params, seed: int, step_on_silence: bool = True):
        self.params = params
        self.oracle = FactorOracle()
        self.weights = LinkWeights()
        self.user_dyn = DynamicsWindow(params.tau)
        self.comp_dyn = DynamicsWindow(params.tau)
        self.k: int | None = None
        self.go = 0
        self.started = False
        self.rng = SplitMix64(seed)
        self.tick_index = 0
        self.step_on_silence = step_on_silence

    def learn(self, e: NoteEvent) -> None:
        """Add one user note: oracle insertion, weight registration for every
        link the insertion created, user dynamics update."""
        check_event(e)  # reject before touching any state
        self.oracle.add_symbol(e)
        for src, sym in self.oracle.last_created_links:
            self.weights.register_link(src, sym, self.params)
        self.user_dyn.push(e.vel)
        self.go += 1

    def step(self) -> NoteEvent | None:
        """One simulation step; None while fewer than n notes are learned."""
        if self.go < self.params.n:
            return None
        if not self.started:
            self.started = True
            self.k = self.params.n
        dist = phi(self.oracle, self.weights, self.k, self.params)
        if not dist:
            # defensive: every state below m has an outgoing link, so this
            # can only fire transiently
            log.warning("empty distribution at state %d; resetting to %d", self.k, self.params.n)
            self.k = self.params.n
            dist = phi(self.oracle, self.weights, self.k, self.params)
            if not dist:
                return None
        choice = sample(dist, self.rng)
        self.weights.apply_decay(choice.source, choice.symbol, self.params)
        self.k = choice.target
        base = self.oracle.payload[choice.target]
        factor, _ = compute_factor(self.user_dyn.average, self.comp_dyn.average)
        vel = rescale(base.vel, factor)
        self.comp_dyn.push(vel)
        return NoteEvent(base.pitch, base.dur_ms, vel)

    def tick(self, event: NoteEvent | None = None) -> list[NoteEvent]:
        """One discrete time-unit: learn the input if any, then simulate.

        The simulation is armed one tick after the n-th learn, so the first
        emission never shares a tick with the note that completed the gate.
        """
        ready = self.go >= self.params.n
        if event is not None:
            self.learn(event)
        out: list[NoteEvent] = []
        if ready and (event is not None or self.step_on_silence):
            emitted = self.step()
            if emitted is not None:
                out.append(emitted)
        self.tick_index += 1
        return out

    def update_params(self, alpha: float | None = None, beta=None, tau: int | None = None) -> None:
        """Live-tune alpha/beta/tau; gamma, c, and n are fixed per session."""
        p = self.params
        new = Params(
            alpha=p.alpha if alpha is None else alpha,
            beta=p.beta if beta is None else beta,
            gamma=p.gamma,
            c=p.c,
            tau=p.tau if tau is None else tau,
            n=p.n,
        )
        self.params = new
        if tau is not None:
            self.user_dyn.resize(new.tau)
            self.comp_dyn.resize(new.tau)

    def snapshot(self) -> dict:
        """Read-only, JSON-serializable view of the session between ticks."""
        snap = self.oracle.inspect()
        for link in snap["links"]:
            link["w"] = self.weights.weight(link["from"], link["sym"])
        user_avg = self.user_dyn.average
        comp_avg = self.comp_dyn.average
        p = self.params
        return {
            "m": snap["m"],
            "k": self.k,
            "go": self.go,
            "started": self.started,
            "tick_index": self.tick_index,
            "user_avg": None if user_avg is None else float(user_avg),
            "comp_avg": None if comp_avg is None else float(comp_avg),
            "links": snap["links"],
            "suffix": snap["suffix"],
            "lrs": snap["lrs"],
            "params": {
                "alpha": p.alpha,
                "beta": f"{p.beta.numerator}/{p.beta.denominator}",
                "gamma": p.gamma,
                "c": p.c,
                "tau": p.tau,
                "n": p.n,
            },
        }


def session_new(params: Params, seed: int, step_on_silence: bool = True) -> ImprovSession:
    return ImprovSession(params, seed, step_on_silence=step_on_silence)
