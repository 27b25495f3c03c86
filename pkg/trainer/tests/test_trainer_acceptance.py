"""Trainer acceptance gate: one criterion per test, one printed PASS/FAIL
line each (run with ``pytest trainer/tests/test_trainer_acceptance.py -v -s``).

These tests exercise the cross-component file contract, so unlike the
trainer library they import the sketch package directly: the library under
test still only touches it through exported files.
"""

from pathlib import Path

import numpy as np

from predictor_trainer.dataset import build_dataset
from predictor_trainer.export import export_predictions
from predictor_trainer.metrics import evaluate_f1
from predictor_trainer.traces import read_trace
from predictor_trainer.train import Hyperparams, predict_bits, train

from winfreq.lwcss import LWCSS
from winfreq.oracles import FileOracle, build_gap_table
from winfreq.workload import read_trace as sketch_read_trace

REPO_ROOT = Path(__file__).resolve().parents[2]
FIXTURE = REPO_ROOT / "fixtures" / "trace_1k.txt"

PERIODS = (2, 4, 9, 20, 44, 95, 206, 445, 963, 2048)


def check(tag: str, thunk) -> None:
    try:
        ok, detail = thunk()
    except Exception as exc:
        ok, detail = False, f"crashed: {type(exc).__name__}: {exc}"
    print(f"\n[{tag}] {'PASS' if ok else 'FAIL'} - {detail}")
    assert ok, f"{tag}: {detail}"


def periodic_trace(n: int) -> list[str]:
    """Item i arrives every PERIODS[i] ticks; simultaneous arrivals are
    serialized in period order."""
    trace: list[str] = []
    t = 0
    while len(trace) < n:
        for p in PERIODS:
            if t % p == 0:
                trace.append(f"p{p}")
        t += 1
    return trace[:n]


class _BitsOracle:
    """In-memory twin of a prediction file."""

    def __init__(self, bits) -> None:
        self.bits = bits

    def predict(self, item, position: int) -> bool:
        return bool(self.bits[position])


def test_a9_trainer_sanity_and_roundtrip(tmp_path):
    def thunk():
        n, w = 100_000, 256
        trace = periodic_trace(n)
        dataset = build_dataset(trace, window=w, context_len=16, split=0.7)
        model = train(dataset, Hyperparams(epochs=3, seed=0))
        test_bits = predict_bits(model.module, dataset.features[dataset.split_idx:])
        f1 = evaluate_f1(test_bits, dataset.test_labels)["f1"]
        baseline = evaluate_f1(
            np.ones_like(dataset.test_labels), dataset.test_labels
        )["f1"]

        pred_path = tmp_path / "periodic.pred"
        bits = export_predictions(model, trace, w, str(pred_path))
        file_f1 = evaluate_f1(bits[dataset.split_idx:], dataset.test_labels)["f1"]

        oracle = FileOracle(str(pred_path), n)
        from_file = LWCSS(w, 1 / 16, oracle, track_events=True)
        from_memory = LWCSS(w, 1 / 16, _BitsOracle(bits), track_events=True)
        for item in trace:
            from_file.update(item)
            from_memory.update(item)
        identical_logs = (
            from_file.forward_log == from_memory.forward_log
            and from_file.skip_log == from_memory.skip_log
        )
        queries_match = all(
            from_file.query(f"p{p}") == from_memory.query(f"p{p}") for p in PERIODS
        )

        ok = (
            f1 >= 0.9
            and abs(file_f1 - f1) <= 0.02
            and len(bits) == n
            and identical_logs
            and queries_match
        )
        return ok, (
            f"periodic trace ({len(PERIODS)} items, periods 2..2048, N={n}, "
            f"W={w}): test F1 {f1:.4f} (floor 0.90; constant-true baseline "
            f"{baseline:.4f}, best epoch {model.best_epoch}); exported file "
            f"recomputes to F1 {file_f1:.4f}; file-driven sketch logs "
            f"{'identical to' if identical_logs else 'DIFFER from'} "
            f"in-memory-driven ({len(from_file.forward_log)} forwards, "
            f"{len(from_file.skip_log)} skips)"
        )
    check("A9", thunk)


def test_a10_label_golden_cross_component():
    def thunk():
        w = 64
        trace = read_trace(str(FIXTURE))
        sketch_trace = sketch_read_trace(str(FIXTURE))
        if trace != sketch_trace:
            return False, "the two packages parsed the shared fixture differently"
        dataset = build_dataset(trace, window=w, context_len=8, split=0.7)
        expected = build_gap_table(sketch_trace).labels(w)
        exact = np.array_equal(dataset.labels.astype(bool), expected)
        positives = int(expected.sum())
        return exact, (
            f"shared fixture {FIXTURE.name} ({len(trace)} arrivals, W={w}): "
            f"dataset labels {'bit-exact equal' if exact else 'DIFFER'} vs "
            f"sketch-side gap thresholding ({positives} positives)"
        )
    check("A10", thunk)
