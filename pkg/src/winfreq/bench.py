"""Experiment harness: accuracy, throughput and workload-shape runs.

Every run variant streams a trace through a sketch next to an exact
window counter, asserting the additive error bound inline, and emits
rows with the fixed schema::

    variant,eps,w,memory_bytes,rmse,updates_per_sec,queries_per_sec,oracle_f1,seed

Rows for infeasible configurations keep their identity columns, leave
the metric columns empty and are logged; the run continues.
"""

from __future__ import annotations

import csv
import logging
import math
import time
from dataclasses import dataclass, field, replace

from .lwcss import LWCSS
from .oracles import (
    ConstantOracle,
    FileOracle,
    FlipOracle,
    GapTable,
    GaussianNoiseOracle,
    PerfectOracle,
    Predictor,
    build_gap_table,
    prediction_f1,
)
from .wcss import WCSS
from .workload import ExactWindowCounter, Trace, gen_zipf, read_trace, singles_ratio

log = logging.getLogger(__name__)

CSV_HEADER = "variant,eps,w,memory_bytes,rmse,updates_per_sec,queries_per_sec,oracle_f1,seed"

VARIANTS = ("wcss", "lwcss")


@dataclass
class ExperimentConfig:
    """One declarative experiment: workload, sketch grid, oracle, output.

    The workload is either a trace file (``trace`` + ``trace_format``,
    identical across seeds) or synthetic Zipf (``zipf`` = (universe,
    length, alpha), regenerated per seed).
    """

    window: int
    eps: list[float]
    variants: list[str] = field(default_factory=lambda: list(VARIANTS))
    oracle: str = "perfect"
    seeds: list[int] = field(default_factory=lambda: [0, 1, 2, 3, 4])
    trace: str | None = None
    trace_format: str = "lines"
    zipf: tuple[int, int, float] | None = None
    out: str | None = None
    id_bytes: int = 8

    def validate(self) -> None:
        if self.window < 4:
            raise ValueError("window must be at least 4")
        if not self.eps:
            raise ValueError("at least one eps required")
        if not self.variants:
            raise ValueError("at least one variant required")
        for v in self.variants:
            if v not in VARIANTS:
                raise ValueError(f"unknown variant: {v!r}")
        if not self.seeds:
            raise ValueError("at least one seed required")
        if (self.trace is None) == (self.zipf is None):
            raise ValueError("exactly one of trace or zipf must be set")


@dataclass
class ResultRow:
    variant: str
    eps: float
    w: int
    seed: int
    memory_bytes: int | None = None
    rmse: float | None = None
    updates_per_sec: float | None = None
    queries_per_sec: float | None = None
    oracle_f1: float | None = None
    error: str | None = None  # not serialized; empty metric cells signal it

    def csv_values(self) -> list[str]:
        return [
            self.variant,
            repr(self.eps),
            str(self.w),
            "" if self.memory_bytes is None else str(self.memory_bytes),
            "" if self.rmse is None else f"{self.rmse:.6f}",
            "" if self.updates_per_sec is None else f"{self.updates_per_sec:.2f}",
            "" if self.queries_per_sec is None else f"{self.queries_per_sec:.2f}",
            "" if self.oracle_f1 is None else f"{self.oracle_f1:.6f}",
            str(self.seed),
        ]


def write_csv(rows: list[ResultRow], path: str) -> None:
    """Serialize rows under the fixed header. Output is byte-stable for a
    fixed (config, seeds) apart from the timing columns."""
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(CSV_HEADER.split(","))
        for row in rows:
            writer.writerow(row.csv_values())


def build_workload(config: ExperimentConfig, seed: int) -> Trace:
    if config.trace is not None:
        return read_trace(config.trace, config.trace_format)
    universe, length, alpha = config.zipf  # type: ignore[misc]
    return gen_zipf(universe, length, alpha, seed)


def parse_oracle_spec(spec: str) -> tuple[str, str | None]:
    kind, _, arg = spec.partition(":")
    kind = kind.strip()
    if kind not in ("perfect", "gaussian", "flip", "constant", "file"):
        raise ValueError(f"unknown oracle spec: {spec!r}")
    if kind == "perfect" and arg:
        raise ValueError("perfect oracle takes no argument")
    if kind != "perfect" and not arg:
        raise ValueError(f"oracle spec {kind!r} needs an argument, e.g. {kind}:X")
    return kind, arg or None


def build_oracle(spec: str, table: GapTable, window: int, seed: int) -> Predictor:
    """Instantiate a predictor from its spec string.

    Forms: ``perfect``, ``gaussian:SIGMA``, ``flip:P`` (flips a perfect
    oracle), ``constant:true|false``, ``file:PATH``.
    """
    kind, arg = parse_oracle_spec(spec)
    if kind == "perfect":
        return PerfectOracle(table, window)
    if kind == "gaussian":
        return GaussianNoiseOracle(table, window, float(arg), seed)
    if kind == "flip":
        return FlipOracle(PerfectOracle(table, window), float(arg), seed)
    if kind == "constant":
        lowered = arg.lower()
        if lowered not in ("true", "false", "0", "1"):
            raise ValueError(f"constant oracle argument must be true/false: {arg!r}")
        return ConstantOracle(lowered in ("true", "1"))
    return FileOracle(arg, len(table))


def oracle_bits(oracle: Predictor, trace: Trace) -> list[bool]:
    """Materialize per-position predictions for scoring."""
    predict = oracle.predict
    return [predict(item, t) for t, item in enumerate(trace)]


def _new_sketch(variant: str, window: int, eps: float, oracle: Predictor, id_bytes: int):
    if variant == "wcss":
        return WCSS(window, eps, id_bytes)
    return LWCSS(window, eps, oracle, id_bytes=id_bytes)


def _stream_cell(sketch, trace: Trace, window: int, eps: float) -> tuple[float, int]:
    """One accuracy pass: update, query the arriving item on sketch and
    exact counter, accumulate squared error, track peak model memory.
    Asserts the additive bound 0 <= estimate - exact <= eps*W inline."""
    exact = ExactWindowCounter(window)
    eps_w = eps * window
    update = sketch.update
    query = sketch.query
    ex_update = exact.update
    ex_query = exact.query
    mem = sketch.memory_bytes
    sq_sum = 0.0
    peak = 0
    for pos, item in enumerate(trace):
        update(item)
        ex_update(item)
        d = query(item) - ex_query(item)
        if d < 0 or d > eps_w:
            raise AssertionError(
                f"error bound violated at position {pos}: item {item!r}, "
                f"estimate-exact={d}, allowed [0, {eps_w}]"
            )
        sq_sum += d * d
        m = mem()
        if m > peak:
            peak = m
    return math.sqrt(sq_sum / len(trace)), peak


def rmse_run(config: ExperimentConfig) -> list[ResultRow]:
    """Accuracy grid: one row per (variant, eps, seed)."""
    config.validate()
    rows: list[ResultRow] = []
    for seed in config.seeds:
        trace = build_workload(config, seed)
        table = build_gap_table(trace)
        labels = table.labels(config.window).tolist()
        for variant in config.variants:
            oracle = None
            f1 = None
            if variant == "lwcss":
                oracle = build_oracle(config.oracle, table, config.window, seed)
                f1 = prediction_f1(oracle_bits(oracle, trace), labels)
            for eps in config.eps:
                row = ResultRow(variant=variant, eps=eps, w=config.window, seed=seed)
                try:
                    sketch = _new_sketch(variant, config.window, eps, oracle, config.id_bytes)
                    row.rmse, row.memory_bytes = _stream_cell(sketch, trace, config.window, eps)
                    row.oracle_f1 = f1
                except ValueError as exc:
                    row.error = str(exc)
                    log.warning(
                        "skipping infeasible cell variant=%s eps=%s w=%s: %s",
                        variant, eps, config.window, exc,
                    )
                rows.append(row)
    if config.out:
        write_csv(rows, config.out)
    return rows


def window_sweep(config: ExperimentConfig, w_list: list[int]) -> list[ResultRow]:
    """rmse_run repeated across window sizes; rows carry their W."""
    if not w_list:
        raise ValueError("at least one window size required")
    rows: list[ResultRow] = []
    for w in w_list:
        rows.extend(rmse_run(replace(config, window=w, out=None)))
    if config.out:
        write_csv(rows, config.out)
    return rows


class _CyclingOracle(Predictor):
    """Throughput-only wrapper: repeats a finite prediction table when the
    op count exceeds the trace length."""

    __slots__ = ("base", "length")

    def __init__(self, base: Predictor, length: int) -> None:
        self.base = base
        self.length = length

    def predict(self, item, position: int) -> bool:
        return self.base.predict(item, position % self.length)


MIN_THROUGHPUT_OPS = 1_000_000
THROUGHPUT_REPS = 3


def throughput_run(config: ExperimentConfig, ops: int = MIN_THROUGHPUT_OPS) -> list[ResultRow]:
    """Timed pure-update and pure-query passes, median of 3 repetitions.

    Oracle lookups are part of the measured update cost; trace generation
    and oracle precomputation are not.  Uses the first configured seed.
    """
    config.validate()
    ops = max(ops, MIN_THROUGHPUT_OPS)
    seed = config.seeds[0]
    trace = build_workload(config, seed)
    table = build_gap_table(trace)
    labels = table.labels(config.window).tolist()
    n = len(trace)
    # item sequence for exactly `ops` operations, cycling the trace
    reps = -(-ops // n)
    stream = (trace * reps)[:ops]
    rows: list[ResultRow] = []
    for variant in config.variants:
        oracle = None
        f1 = None
        if variant == "lwcss":
            oracle = build_oracle(config.oracle, table, config.window, seed)
            f1 = prediction_f1(oracle_bits(oracle, trace), labels)
            if ops > n:
                oracle = _CyclingOracle(oracle, n)
        for eps in config.eps:
            row = ResultRow(variant=variant, eps=eps, w=config.window, seed=seed)
            try:
                update_rates = []
                query_rates = []
                sketch = None
                for _ in range(THROUGHPUT_REPS):
                    sketch = _new_sketch(variant, config.window, eps, oracle, config.id_bytes)
                    update = sketch.update
                    t0 = time.perf_counter()
                    for item in stream:
                        update(item)
                    update_rates.append(ops / (time.perf_counter() - t0))
                    query = sketch.query
                    t0 = time.perf_counter()
                    for item in stream:
                        query(item)
                    query_rates.append(ops / (time.perf_counter() - t0))
                update_rates.sort()
                query_rates.sort()
                row.updates_per_sec = update_rates[THROUGHPUT_REPS // 2]
                row.queries_per_sec = query_rates[THROUGHPUT_REPS // 2]
                row.memory_bytes = sketch.memory_bytes()
                row.oracle_f1 = f1
            except ValueError as exc:
                row.error = str(exc)
                log.warning(
                    "skipping infeasible cell variant=%s eps=%s w=%s: %s",
                    variant, eps, config.window, exc,
                )
            rows.append(row)
    if config.out:
        write_csv(rows, config.out)
    return rows


def singles_sweep(trace: Trace, f_list: list[int], denominator: str = "distinct") -> list[tuple[int, float]]:
    """Average singles ratio for each frame size in ``f_list``."""
    if not f_list:
        raise ValueError("at least one frame size required")
    return [(f, singles_ratio(trace, f, denominator)) for f in f_list]


def write_singles_csv(results: list[tuple[int, float]], path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["frame_size", "avg_singles_ratio"])
        for frame_size, ratio in results:
            writer.writerow([str(frame_size), f"{ratio:.6f}"])
