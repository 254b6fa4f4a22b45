import json
import subprocess
import sys
from fractions import Fraction

import pytest

from improv.events import NoteEvent, Params
from improv.streams import (
    StreamFormatError,
    TimedEvent,
    bench,
    parse_stream,
    run_batch,
    write_stream,
)


def small_params(n=2):
    return Params(alpha=0.5, beta=Fraction(4, 5), gamma=100, c=10_000, tau=4, n=n)


def make_stream(count, start=0):
    return [
        TimedEvent(start + i, NoteEvent(60 + (i * 5) % 7, 100 + i % 3, 40 + (i * 11) % 80))
        for i in range(count)
    ]


def test_parse_two_lines():
    events = parse_stream("0 60 500 100\n3 62 250 90\n")
    assert events == [
        TimedEvent(0, NoteEvent(60, 500, 100)),
        TimedEvent(3, NoteEvent(62, 250, 90)),
    ]


def test_comments_and_blank_lines_skipped():
    events = parse_stream("# header\n\n0 60 500 100\n  # trailing comment line\n")
    assert len(events) == 1


def test_round_trip_canonical():
    text = "0 60 500 100\n3 62 250 90\n"
    assert write_stream(parse_stream(text)) == text
    noisy = "# c\n0 60 500 100\n\n3 62 250 90\n"
    assert parse_stream(write_stream(parse_stream(noisy))) == parse_stream(noisy)


@pytest.mark.parametrize(
    "text,needle",
    [
        ("0 60 500\n", "line 1"),
        ("0 60 500 100\n0 62 250 90\n", "duplicate tick"),
        ("5 60 500 100\n2 62 250 90\n", "out of order"),
        ("0 x 500 100\n", "non-integer"),
        ("0 200 500 100\n", "pitch"),
        ("-1 60 500 100\n", "negative tick"),
    ],
)
def test_parse_errors(text, needle):
    with pytest.raises(StreamFormatError, match=needle):
        parse_stream(text)


def test_run_batch_gate():
    inputs = make_stream(2)
    out = run_batch(small_params(n=2), 7, inputs, max_tick=10)
    assert out
    assert min(te.t for te in out) >= 2


def test_run_batch_empty_input():
    assert run_batch(small_params(), 7, []) == []


def test_run_batch_deterministic():
    inputs = make_stream(50)
    a = write_stream(run_batch(small_params(), 7, inputs))
    b = write_stream(run_batch(small_params(), 7, inputs))
    assert a == b


def test_run_batch_one_emission_per_tick():
    out = run_batch(small_params(), 7, make_stream(50), max_tick=80)
    ticks = [te.t for te in out]
    assert len(ticks) == len(set(ticks))
    assert ticks == sorted(ticks)


def test_run_batch_emission_count_bound():
    n = 2
    inputs = make_stream(300)
    out = run_batch(small_params(n=n), 7, inputs)
    assert len(out) <= 300 - n + 1


def test_bench_report_shape():
    report = bench(small_params(), 7, make_stream(300))
    assert report["ticks"] >= 300
    assert report["p95_ms"] >= report["p50_ms"]
    assert report["max_ms"] >= report["mean_ms"] >= 0
    assert report["inputs"] == 300


def test_cli_run_and_inspect(tmp_path):
    inp = tmp_path / "in.stream"
    inp.write_text(write_stream(make_stream(30)))
    out1 = tmp_path / "out1.stream"
    out2 = tmp_path / "out2.stream"
    base = [sys.executable, "-m", "improv.cli"]
    flags = ["--seed", "7", "--n", "2", "--gamma", "100", "--c", "10000", "--tau", "4"]
    for out in (out1, out2):
        r = subprocess.run(base + ["run", "--input", str(inp), "--output", str(out)] + flags,
                           capture_output=True, text=True)
        assert r.returncode == 0, r.stderr
    assert out1.read_bytes() == out2.read_bytes()
    assert parse_stream(out1.read_text())

    r = subprocess.run(base + ["inspect", "--input", str(inp), "--at-tick", "5"] + flags,
                       capture_output=True, text=True)
    assert r.returncode == 0, r.stderr
    snap = json.loads(r.stdout)
    assert snap["m"] == 6 and snap["go"] == 6

    r = subprocess.run(base + ["bench", "--input", str(inp)] + flags,
                       capture_output=True, text=True)
    assert r.returncode == 0, r.stderr
    report = json.loads(r.stdout)
    assert report["ticks"] == 30


def test_cli_error_exit_code(tmp_path):
    bad = tmp_path / "bad.stream"
    bad.write_text("0 60 500\n")
    r = subprocess.run(
        [sys.executable, "-m", "improv.cli", "run", "--input", str(bad),
         "--output", str(tmp_path / "o")],
        capture_output=True, text=True)
    assert r.returncode != 0
    assert "error" in r.stderr
