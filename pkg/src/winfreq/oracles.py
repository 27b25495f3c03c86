"""Next-arrival predictors and the gap table they are scored against.

For a trace position t, the gap is the distance to the next occurrence
of the same key (``NO_NEXT`` when there is none).  A predictor answers
one question per arrival: will this key show up again within the next
``window`` arrivals?  The true answer is ``gap <= window``; predictors
here range from that exact answer down to constant noise, so a sketch's
behaviour can be studied across the whole prediction-quality spectrum.
"""

from __future__ import annotations

import sys
from typing import Sequence

import numpy as np

from .workload import Trace

# Gap value meaning "never occurs again"; larger than any real window.
NO_NEXT = sys.maxsize


class GapTable:
    """Per-position next-occurrence distances for one trace."""

    __slots__ = ("gaps",)

    def __init__(self, gaps: np.ndarray) -> None:
        self.gaps = gaps

    def __len__(self) -> int:
        return len(self.gaps)

    def labels(self, window: int) -> np.ndarray:
        """Boolean array: does position t's key recur within ``window``?"""
        return self.gaps <= window


def build_gap_table(trace: Trace) -> GapTable:
    """Single backward scan with a last-seen map; O(len(trace))."""
    n = len(trace)
    if n == 0:
        raise ValueError("trace is empty")
    gaps = [0] * n
    nxt: dict = {}
    for t in range(n - 1, -1, -1):
        item = trace[t]
        seen = nxt.get(item)
        gaps[t] = NO_NEXT if seen is None else seen - t
        nxt[item] = t
    return GapTable(np.array(gaps, dtype=np.int64))


class Predictor:
    """Interface: ``predict(item, position)`` answers whether ``item``
    recurs within the window starting after ``position``."""

    def predict(self, item, position: int) -> bool:
        raise NotImplementedError


class PerfectOracle(Predictor):
    """Answers from the gap table; exact by construction.

    Raises IndexError for positions outside the table.
    """

    __slots__ = ("_bits",)

    def __init__(self, table: GapTable, window: int) -> None:
        self._bits = (table.gaps <= window).tolist()

    def predict(self, item, position: int) -> bool:
        return self._bits[position]

    def __len__(self) -> int:
        return len(self._bits)


class GaussianNoiseOracle(Predictor):
    """Gap table blurred with N(0, sigma^2) noise before thresholding.

    sigma = 0 reproduces the perfect oracle.  Noise is drawn once from
    ``seed``, so predictions are deterministic per (seed, position).
    """

    __slots__ = ("_bits",)

    def __init__(self, table: GapTable, window: int, sigma: float, seed: int) -> None:
        if sigma < 0:
            raise ValueError("sigma must be nonnegative")
        noise = np.random.default_rng(seed).normal(0.0, sigma, len(table)) if sigma > 0 else 0.0
        self._bits = ((table.gaps + noise) <= window).tolist()

    def predict(self, item, position: int) -> bool:
        return self._bits[position]

    def __len__(self) -> int:
        return len(self._bits)


class FlipOracle(Predictor):
    """Wraps another predictor, inverting each position's answer
    independently with probability ``p`` (deterministic per seed)."""

    __slots__ = ("base", "_flips")

    def __init__(self, base: Predictor, p: float, seed: int, length: int | None = None) -> None:
        if not 0.0 <= p <= 1.0:
            raise ValueError("p must be in [0, 1]")
        if length is None:
            try:
                length = len(base)  # type: ignore[arg-type]
            except TypeError:
                raise ValueError("length required when base has no length") from None
        self.base = base
        self._flips = (np.random.default_rng(seed).random(length) < p).tolist()

    def predict(self, item, position: int) -> bool:
        return self.base.predict(item, position) ^ self._flips[position]

    def __len__(self) -> int:
        return len(self._flips)


class ConstantOracle(Predictor):
    """Always the same answer. False turns a learned sketch into its
    admit-on-second-sight fallback; True makes it forward everything."""

    __slots__ = ("value",)

    def __init__(self, value: bool) -> None:
        self.value = bool(value)

    def predict(self, item, position: int) -> bool:
        return self.value


class FileOracle(Predictor):
    """Predictions parsed from a file: one ASCII ``0`` or ``1`` per line,
    LF line endings, exactly ``expected_len`` lines."""

    __slots__ = ("_bits",)

    def __init__(self, path: str, expected_len: int) -> None:
        bits = []
        with open(path, "r", encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, start=1):
                token = line.rstrip("\n")
                if token == "0":
                    bits.append(False)
                elif token == "1":
                    bits.append(True)
                else:
                    raise ValueError(
                        f"{path}: line {lineno}: expected '0' or '1', got {token!r}"
                    )
        if len(bits) != expected_len:
            raise ValueError(
                f"{path}: expected {expected_len} predictions, found {len(bits)}"
            )
        self._bits = bits

    def predict(self, item, position: int) -> bool:
        return self._bits[position]

    def __len__(self) -> int:
        return len(self._bits)


def write_prediction_file(bits: Sequence[bool], path: str) -> None:
    """Inverse of FileOracle: one '0'/'1' per line, LF endings."""
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for b in bits:
            fh.write("1\n" if b else "0\n")


def prediction_f1(predicted: Sequence[bool], actual: Sequence[bool]) -> float:
    """F1 of the positive ("recurs within window") class.

    Returns 0.0 when there are no true or predicted positives.
    """
    if len(predicted) != len(actual):
        raise ValueError("prediction/label length mismatch")
    tp = fp = fn = 0
    for p, a in zip(predicted, actual):
        if p:
            if a:
                tp += 1
            else:
                fp += 1
        elif a:
            fn += 1
    denom = 2 * tp + fp + fn
    return 2 * tp / denom if denom else 0.0
