"""Integer link weights with exact per-state totals, decay/reward updates,
and the traversal distribution mixing a state's factor links with the
factor links of its suffix target.

All weights are positive integers and every state's total equals the sum of
its link weights exactly; probabilities are formed as exact rationals only
when a distribution is built.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .events import Params
from .oracle import FactorOracle
from .rng import SplitMix64


class DuplicateLinkError(ValueError):
    pass


class UnknownLinkError(KeyError):
    pass


@dataclass(frozen=True)
class Choice:
    """One continuation option: follow (source, symbol) to target."""

    source: int
    symbol: int
    target: int
    prob: Fraction


class LinkWeights:
    def __init__(self):
        self._by_state: dict[int, dict[int, int]] = {}
        self._total: dict[int, int] = {}

    def weight(self, state: int, symbol: int) -> int:
        try:
            return self._by_state[state][symbol]
        except KeyError:
            raise UnknownLinkError((state, symbol)) from None

    def total(self, state: int) -> int:
        return self._total.get(state, 0)

    def out_symbols(self, state: int) -> list[int]:
        return sorted(self._by_state.get(state, ()))

    def register_link(self, state: int, symbol: int, p: Params) -> None:
        """Weight a newly created factor link: c for a state's first link,
        gamma afterwards. O(1)."""
        links = self._by_state.setdefault(state, {})
        if symbol in links:
            raise DuplicateLinkError(f"link ({state}, {symbol}) already registered")
        amount = p.gamma if links else p.c
        links[symbol] = amount
        self._total[state] = self._total.get(state, 0) + amount

    def apply_decay(self, state: int, symbol: int, p: Params) -> None:
        """Multiply a chosen link's weight by beta (floored, clamped at 1),
        keeping the state total exactly in sync. O(1)."""
        links = self._by_state.get(state)
        if links is None or symbol not in links:
            raise UnknownLinkError((state, symbol))
        w = links[symbol]
        w2 = max(1, (p.beta.numerator * w) // p.beta.denominator)
        links[symbol] = w2
        self._total[state] -= w - w2


def phi(o: FactorOracle, lw: LinkWeights, k: int, p: Params) -> list[Choice]:
    """Continuation distribution at state k.

    Mixes the links leaving k (branch weight 1) with the links leaving the
    suffix target S(k), rewarded by alpha * (lrs(k) + 1). Returns choices in
    canonical order (source ascending, then symbol ascending); probabilities
    are exact rationals summing to 1. Empty list when no link is reachable.
    """
    if k >= o.state_count:
        raise IndexError(f"state {k} out of range")
    a_links = o.delta[k]
    sk = o.suffix[k]
    b_links = o.delta[sk] if sk >= 0 else {}

    w_a = Fraction(1) if a_links else Fraction(0)
    w_b = Fraction(p.alpha) * (o.lrs[k] + 1) if b_links else Fraction(0)
    if w_a == 0 and w_b == 0:
        if not b_links:
            return []
        w_b = Fraction(1)  # alpha == 0 with only the suffix branch alive
    denom = w_a + w_b

    choices = []
    for source, links, w_x in ((sk, b_links, w_b), (k, a_links, w_a)):
        if w_x == 0:
            continue
        tot = lw.total(source)
        for sym in sorted(links):
            pr = w_x * Fraction(lw.weight(source, sym), tot) / denom
            choices.append(Choice(source, sym, links[sym], pr))
    choices.sort(key=lambda ch: (ch.source, ch.symbol))
    return choices


def sample(dist: list[Choice], rng: SplitMix64) -> Choice:
    """Inverse-transform sampling over the canonical choice order.
    Consumes exactly one uniform draw."""
    if not dist:
        raise ValueError("cannot sample from an empty distribution")
    u = Fraction(rng.next_float())
    cum = Fraction(0)
    for ch in dist:
        cum += ch.prob
        if u < cum:
            return ch
    return dist[-1]
