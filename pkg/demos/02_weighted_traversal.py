#!/usr/bin/env python3
"""How the continuation distribution is built and how decay reshapes it.

Every factor link carries an integer weight: c for a state's first link,
gamma for later ones. The distribution at state k mixes k's own links with
the links of its suffix target, the latter rewarded by alpha * (lrs + 1).
Choosing a link multiplies its weight by beta, so heavily used paths fade.
"""

from fractions import Fraction

from improv import FactorOracle, LinkWeights, NoteEvent, Params, phi, rng_new, sample

params = Params(alpha=0.5, beta=Fraction(4, 5), gamma=100, c=10_000)

oracle = FactorOracle()
weights = LinkWeights()
for pitch in (60, 62, 60, 60, 62):
    oracle.add_symbol(NoteEvent(pitch, 250, 80))
    for src, sym in oracle.last_created_links:
        weights.register_link(src, sym, params)

k = 1
print(f"distribution at state {k} (suffix target {oracle.suffix[k]}):")
for choice in phi(oracle, weights, k, params):
    print(f"  via ({choice.source}, {choice.symbol}) -> {choice.target}"
          f"  p = {choice.prob} = {float(choice.prob):.4f}")

print("\nsampling 10 choices with a fixed seed:")
rng = rng_new(7)
for _ in range(10):
    choice = sample(phi(oracle, weights, k, params), rng)
    weights.apply_decay(choice.source, choice.symbol, params)
    print(f"  chose ({choice.source}, {choice.symbol});"
          f" its weight is now {weights.weight(choice.source, choice.symbol)}")

print("\nnote how repeated choices lose probability mass:")
for choice in phi(oracle, weights, k, params):
    print(f"  ({choice.source}, {choice.symbol}): {float(choice.prob):.4f}")
