"""Trace generation, trace loading and exact sliding-window counting.

A trace is a plain list of string keys, one per arrival, in stream order.
"""

from __future__ import annotations

import csv
from collections import Counter, deque
from typing import Hashable

import numpy as np

Trace = list[str]


def gen_zipf(universe: int, length: int, alpha: float, seed: int) -> Trace:
    """Zipf-distributed trace: rank R drawn with probability proportional
    to R**-alpha over ranks 1..universe, emitted as key ``item<R>``.

    Deterministic for a fixed (universe, length, alpha, seed).
    """
    if universe < 1:
        raise ValueError("universe must be at least 1")
    if length < 1:
        raise ValueError("length must be at least 1")
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    ranks = np.arange(1, universe + 1, dtype=np.float64)
    cdf = np.cumsum(ranks ** -alpha)
    cdf /= cdf[-1]
    rng = np.random.default_rng(seed)
    draws = np.searchsorted(cdf, rng.random(length), side="right") + 1
    return [f"item{r}" for r in draws]


def read_trace(path: str, format: str = "lines") -> Trace:
    """Load a trace file.

    ``lines``: each nonempty line is one item key.
    ``pairs``: two-column CSV; the key is ``src + "→" + dst``.
    """
    if format == "lines":
        items = []
        with open(path, "r", encoding="utf-8") as fh:
            for line in fh:
                key = line.rstrip("\n").rstrip("\r")
                if key:
                    items.append(key)
    elif format == "pairs":
        items = []
        with open(path, "r", encoding="utf-8", newline="") as fh:
            for lineno, row in enumerate(csv.reader(fh), start=1):
                if not row:
                    continue
                if len(row) != 2:
                    raise ValueError(
                        f"{path}: line {lineno}: expected 2 columns, got {len(row)}"
                    )
                items.append(f"{row[0]}→{row[1]}")
    else:
        raise ValueError(f"unknown trace format: {format!r}")
    if not items:
        raise ValueError(f"{path}: trace is empty")
    return items


class ExactWindowCounter:
    """Exact frequencies over the last ``window`` arrivals (ground truth).

    A ring buffer holds the live window; ``counts`` holds the multiset of
    its contents. Both update and query are O(1).
    """

    __slots__ = ("window", "counts", "_buf")

    def __init__(self, window: int) -> None:
        if window < 1:
            raise ValueError("window must be at least 1")
        self.window = window
        self.counts: dict[Hashable, int] = {}
        self._buf: deque = deque()

    def update(self, item: Hashable) -> None:
        buf = self._buf
        counts = self.counts
        buf.append(item)
        counts[item] = counts.get(item, 0) + 1
        if len(buf) > self.window:
            old = buf.popleft()
            n = counts[old] - 1
            if n:
                counts[old] = n
            else:
                del counts[old]

    def query(self, item: Hashable) -> int:
        return self.counts.get(item, 0)

    def __len__(self) -> int:
        return len(self._buf)


def singles_ratio(trace: Trace, frame_size: int, denominator: str = "distinct") -> float:
    """Mean, over disjoint frames of ``frame_size`` arrivals, of the share
    of keys occurring exactly once in the frame.

    ``denominator`` picks the base: ``distinct`` divides by the number of
    distinct keys in the frame, ``arrivals`` by the frame length.  A
    trailing partial frame is dropped.
    """
    if frame_size < 1:
        raise ValueError("frame_size must be at least 1")
    if frame_size > len(trace):
        raise ValueError(
            f"frame_size {frame_size} exceeds trace length {len(trace)}"
        )
    if denominator not in ("distinct", "arrivals"):
        raise ValueError(f"unknown denominator: {denominator!r}")
    ratios = []
    for start in range(0, len(trace) - frame_size + 1, frame_size):
        counts = Counter(trace[start : start + frame_size])
        singles = sum(1 for v in counts.values() if v == 1)
        base = len(counts) if denominator == "distinct" else frame_size
        ratios.append(singles / base)
    return float(np.mean(ratios))
