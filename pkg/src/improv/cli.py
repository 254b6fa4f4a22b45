"""Command line front-end: batch replay, latency benchmarking, session
inspection, and the live websocket service."""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .events import Params
from .session import ImprovSession
from .streams import bench, parse_stream, run_batch, write_stream


def _parse_beta(text: str) -> Fraction:
    try:
        num, den = text.split("/")
        return Fraction(int(num), int(den))
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"beta must be NUM/DEN, got {text!r}")


def _parse_bool(text: str) -> bool:
    lowered = text.lower()
    if lowered in ("true", "1", "yes"):
        return True
    if lowered in ("false", "0", "no"):
        return False
    raise argparse.ArgumentTypeError(f"expected a boolean, got {text!r}")


def _add_param_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--input", required=True, help="input event stream file")
    sub.add_argument("--seed", type=int, default=0, help="64-bit RNG seed")
    sub.add_argument("--alpha", type=float, default=0.5)
    sub.add_argument("--beta", type=_parse_beta, default=Fraction(4, 5), metavar="NUM/DEN")
    sub.add_argument("--gamma", type=int, default=10_000)
    sub.add_argument("--c", type=int, default=1_000_000)
    sub.add_argument("--tau", type=int, default=16)
    sub.add_argument("--n", type=int, default=10)
    sub.add_argument("--max-tick", type=int, default=None)
    sub.add_argument("--step-on-silence", type=_parse_bool, default=True, metavar="BOOL")


def _params_from(args: argparse.Namespace) -> Params:
    return Params(alpha=args.alpha, beta=args.beta, gamma=args.gamma,
                  c=args.c, tau=args.tau, n=args.n)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="improv", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="replay an input stream, write the improvised stream")
    _add_param_flags(run)
    run.add_argument("--output", required=True, help="output event stream file")

    bench_p = sub.add_parser("bench", help="measure per-tick latency")
    _add_param_flags(bench_p)
    bench_p.add_argument("--output", default=None, help="optional JSON report file")

    inspect_p = sub.add_parser("inspect", help="print the session snapshot at a tick")
    _add_param_flags(inspect_p)
    inspect_p.add_argument("--at-tick", type=int, required=True)

    serve = sub.add_parser("serve", help="run the live websocket session service")
    serve.add_argument("--port", type=int, default=8765)
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--seed", type=int, default=0, help="base for the per-session seed counter")
    serve.add_argument("--metronome-ms", type=int, default=None,
                       help="optional period for silent ticks")
    serve.add_argument("--alpha", type=float, default=0.5)
    serve.add_argument("--beta", type=_parse_beta, default=Fraction(4, 5), metavar="NUM/DEN")
    serve.add_argument("--gamma", type=int, default=10_000)
    serve.add_argument("--c", type=int, default=1_000_000)
    serve.add_argument("--tau", type=int, default=16)
    serve.add_argument("--n", type=int, default=10)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "run":
            inputs = parse_stream(Path(args.input).read_text())
            out = run_batch(_params_from(args), args.seed, inputs,
                            max_tick=args.max_tick, step_on_silence=args.step_on_silence)
            Path(args.output).write_text(write_stream(out))
        elif args.command == "bench":
            inputs = parse_stream(Path(args.input).read_text())
            report = bench(_params_from(args), args.seed, inputs,
                           max_tick=args.max_tick, step_on_silence=args.step_on_silence)
            text = json.dumps(report, indent=2)
            if args.output:
                Path(args.output).write_text(text + "\n")
            print(text)
        elif args.command == "inspect":
            inputs = parse_stream(Path(args.input).read_text())
            session = ImprovSession(_params_from(args), args.seed,
                                    step_on_silence=args.step_on_silence)
            by_tick = {te.t: te.event for te in inputs}
            for t in range(args.at_tick + 1):
                session.tick(by_tick.get(t))
            print(json.dumps(session.snapshot(), indent=2))
        elif args.command == "serve":
            from .service import serve as run_service
            params = Params(alpha=args.alpha, beta=args.beta, gamma=args.gamma,
                            c=args.c, tau=args.tau, n=args.n)
            run_service(args.port, params, host=args.host, seed_base=args.seed,
                        metronome_ms=args.metronome_ms)
    except Exception as exc:  # surface a diagnostic, not a traceback
        print(f"improv: error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
