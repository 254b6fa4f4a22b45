#!/usr/bin/env python3
"""Build a factor oracle note by note and watch its structure grow.

The oracle gains one state per note. Forward (factor) links are labeled by
pitch; each state also gets an unlabeled suffix link pointing backwards,
and an lrs value: how long a suffix ending here is shared with the suffix
ending at the link's target.
"""

from improv import FactorOracle, NoteEvent

PITCHES = [67, 67, 69, 67, 72, 71]  # G G A G C B

oracle = FactorOracle()
for i, pitch in enumerate(PITCHES, start=1):
    oracle.add_symbol(NoteEvent(pitch, 250, 80))
    print(f"after note {i} (pitch {pitch}):")
    print(f"  new links: {oracle.last_created_links}")
    print(f"  suffix:    {oracle.suffix}")
    print(f"  lrs:       {oracle.lrs}")

print("\nfull structure:")
for link in oracle.inspect()["links"]:
    print(f"  state {link['from']} --{link['sym']}--> state {link['to']}")

print("\nrecognition (walks along factor links):")
for word in ([67, 69], [69, 67, 72], [72, 67]):
    print(f"  {word}: {oracle.recognizes(word)}")
