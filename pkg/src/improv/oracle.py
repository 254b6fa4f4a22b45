"""On-line Factor Oracle construction with suffix links and repeated-suffix
lengths (lrs), plus recognition and inspection queries.

One state is appended per learned event; state i carries the i-th event as
its payload. Factor links are labeled by pitch; suffix links are unlabeled
backward pointers with S(0) = -1.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .events import NoteEvent, check_event


class FactorOracle:
    def __init__(self):
        self.delta: list[dict[int, int]] = [{}]  # per-state symbol -> target
        self.suffix: list[int] = [-1]
        self.lrs: list[int] = [0]
        self.payload: list[NoteEvent | None] = [None]
        self.walk_steps = 0  # total suffix-walk loop iterations, for linearity checks
        self._last_created: list[tuple[int, int]] = []

    @property
    def state_count(self) -> int:
        return len(self.suffix)

    @property
    def m(self) -> int:
        """Number of learned symbols (states are 0..m)."""
        return len(self.suffix) - 1

    def link_count(self) -> int:
        return sum(len(d) for d in self.delta)

    @property
    def last_created_links(self) -> list[tuple[int, int]]:
        """(source, symbol) links created by the most recent add_symbol,
        primary link first, then suffix-walk links in walk order."""
        return list(self._last_created)

    def add_symbol(self, e: NoteEvent) -> int:
        """Append one event; returns the new state id. Amortized O(1)."""
        check_event(e)
        sigma = e.pitch
        m = self.m
        new = m + 1
        self.delta.append({})
        self.payload.append(e)
        self.delta[m][sigma] = new
        created = [(m, sigma)]

        # walk the suffix chain, adding missing transitions toward the new state
        k = self.suffix[m]
        pi1 = m
        while k > -1 and sigma not in self.delta[k]:
            self.delta[k][sigma] = new
            created.append((k, sigma))
            pi1 = k
            k = self.suffix[k]
            self.walk_steps += 1

        if k == -1:
            s = 0
        else:
            s = self.delta[k][sigma]
        self.suffix.append(s)
        self.lrs.append(0 if s == 0 else self._length_common_suffix(pi1, s - 1) + 1)
        self._last_created = created
        return new

    def _length_common_suffix(self, pi1: int, pi2: int) -> int:
        if pi2 == self.suffix[pi1]:
            return self.lrs[pi1]
        while self.suffix[pi2] != self.suffix[pi1]:
            pi2 = self.suffix[pi2]
        return min(self.lrs[pi1], self.lrs[pi2])

    def recognizes(self, word: Iterable[int]) -> bool:
        """True iff walking factor links from state 0 consumes the whole word."""
        state = 0
        for sym in word:
            nxt = self.delta[state].get(sym)
            if nxt is None:
                return False
            state = nxt
        return True

    def inspect(self) -> dict:
        """Read-only, JSON-serializable structural snapshot."""
        links = [
            {"from": src, "sym": sym, "to": dst}
            for src, d in enumerate(self.delta)
            for sym, dst in sorted(d.items())
        ]
        return {
            "m": self.m,
            "links": links,
            "suffix": list(self.suffix),
            "lrs": list(self.lrs),
        }


def oracle_new() -> FactorOracle:
    return FactorOracle()


def naive_lrs(seq: Sequence[int], i: int) -> int:
    """Brute-force longest repeated suffix: largest l such that the suffix
    seq[i-l+1..i] (1-indexed) occurs as a factor of seq[1..i-1]. O(i^3)."""
    if not 1 <= i <= len(seq):
        raise IndexError(f"position {i} out of range for sequence of length {len(seq)}")
    text = bytes(seq[: i - 1])
    for l in range(i - 1, 0, -1):
        if bytes(seq[i - l : i]) in text:
            return l
    return 0
