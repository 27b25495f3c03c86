"""Labeled dataset construction.

Each trace position t becomes one example: the context is the last
``context_len`` keys up to and including t (left-padded at the stream
start), and the label says whether t's key arrives again within ``window``
subsequent arrivals.

The split is chronological: positions before the split index form the
train set, the suffix is the test set. The vocabulary is built from train
positions only; keys first seen in the test suffix map to the unknown id.
"""

from collections import Counter
from dataclasses import dataclass, field

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

from .gaps import within_window_labels
from .traces import ARROW

PAD_ID = 0
UNK_ID = 1

EMBEDDING_MODES = ("endpoint", "pair")


def _tokens(item: str, mode: str) -> tuple[str, ...]:
    if mode == "pair":
        return (item,)
    src, sep, dst = item.partition(ARROW)
    return (src, dst) if sep else (item, item)


def build_vocab(trace: list[str], mode: str, cap: int) -> dict[str, int]:
    """Frequency-ranked token ids (ties by first appearance), starting at 2;
    0 is padding, 1 the unknown bucket. At most ``cap`` tokens are kept."""
    counts: Counter = Counter()
    first_seen: dict[str, int] = {}
    pos = 0
    for item in trace:
        for tok in _tokens(item, mode):
            counts[tok] += 1
            if tok not in first_seen:
                first_seen[tok] = pos
            pos += 1
    ranked = sorted(counts, key=lambda t: (-counts[t], first_seen[t]))
    return {tok: i + 2 for i, tok in enumerate(ranked[:cap])}


def encode_contexts(
    trace: list[str], vocab: dict[str, int], mode: str, context_len: int
) -> np.ndarray:
    """Context id matrix for every position: (N, L) in pair mode,
    (N, L, 2) in endpoint mode. Position t's row ends with t's own ids."""
    channels = 1 if mode == "pair" else 2
    ids = np.empty((len(trace), channels), dtype=np.int64)
    get = vocab.get
    for t, item in enumerate(trace):
        for c, tok in enumerate(_tokens(item, mode)):
            ids[t, c] = get(tok, UNK_ID)
    pad = np.full((context_len - 1, channels), PAD_ID, dtype=np.int64)
    padded = np.concatenate([pad, ids]) if context_len > 1 else ids
    windows = sliding_window_view(padded, context_len, axis=0)
    # sliding_window_view yields (N, channels, L); put L before channels
    contexts = np.ascontiguousarray(windows.transpose(0, 2, 1))
    return contexts[:, :, 0] if mode == "pair" else contexts


@dataclass
class LabeledDataset:
    features: np.ndarray
    labels: np.ndarray
    split_idx: int
    vocab: dict[str, int] = field(repr=False)
    mode: str = "endpoint"
    window: int = 0
    context_len: int = 0

    @property
    def vocab_size(self) -> int:
        return len(self.vocab) + 2

    @property
    def train_labels(self) -> np.ndarray:
        return self.labels[: self.split_idx]

    @property
    def test_labels(self) -> np.ndarray:
        return self.labels[self.split_idx:]

    def class_balance(self) -> tuple[int, int]:
        """(positives, total) across all positions."""
        return int(self.labels.sum()), len(self.labels)


def build_dataset(
    trace: list[str],
    window: int,
    context_len: int = 16,
    split: float = 0.7,
    mode: str = "endpoint",
    vocab_cap: int = 100_000,
) -> LabeledDataset:
    if context_len < 1:
        raise ValueError("context_len must be >= 1")
    if not 0.0 < split < 1.0:
        raise ValueError("split must be in (0, 1)")
    if mode not in EMBEDDING_MODES:
        raise ValueError(f"unknown embedding mode: {mode!r}")
    if len(trace) < context_len + 1:
        raise ValueError(
            f"trace too short: {len(trace)} positions, need at least {context_len + 1}"
        )
    split_idx = int(len(trace) * split)
    split_idx = max(1, min(split_idx, len(trace) - 1))
    vocab = build_vocab(trace[:split_idx], mode, vocab_cap)
    features = encode_contexts(trace, vocab, mode, context_len)
    labels = within_window_labels(trace, window).astype(np.uint8)
    return LabeledDataset(
        features=features,
        labels=labels,
        split_idx=split_idx,
        vocab=vocab,
        mode=mode,
        window=window,
        context_len=context_len,
    )
