"""Real-time machine improvisation engine.

Learns a note stream into a factor oracle with weighted links, then
improvises by probabilistic traversal with weight decay, context-rewarded
recombination, and loudness-coherent intensity rescaling.
"""

from .dynamics import DynamicsWindow, compute_factor, rescale, window_new
from .events import NoteEvent, Params, check_event, validate_event
from .oracle import FactorOracle, naive_lrs, oracle_new
from .rng import SplitMix64, rng_new
from .session import ImprovSession, session_new
from .streams import TimedEvent, bench, parse_stream, run_batch, write_stream
from .weights import Choice, LinkWeights, phi, sample

__all__ = [
    "Choice",
    "DynamicsWindow",
    "FactorOracle",
    "ImprovSession",
    "LinkWeights",
    "NoteEvent",
    "Params",
    "SplitMix64",
    "TimedEvent",
    "bench",
    "check_event",
    "compute_factor",
    "naive_lrs",
    "oracle_new",
    "parse_stream",
    "phi",
    "rescale",
    "rng_new",
    "run_batch",
    "sample",
    "session_new",
    "validate_event",
    "window_new",
    "write_stream",
]

__version__ = "0.1.0"
