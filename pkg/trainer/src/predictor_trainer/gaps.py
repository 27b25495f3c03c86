"""Next-occurrence distances, the ground truth behind every label."""

import sys

import numpy as np

NO_NEXT = sys.maxsize


def next_arrival_gaps(trace: list[str]) -> np.ndarray:
    """gaps[t] = how many arrivals until trace[t]'s key shows up again,
    NO_NEXT if it never does. Single backward scan, O(len(trace))."""
    n = len(trace)
    if n == 0:
        raise ValueError("trace is empty")
    gaps = np.empty(n, dtype=np.int64)
    nxt: dict = {}
    for t in range(n - 1, -1, -1):
        item = trace[t]
        seen = nxt.get(item)
        gaps[t] = NO_NEXT if seen is None else seen - t
        nxt[item] = t
    return gaps


def within_window_labels(trace: list[str], window: int) -> np.ndarray:
    """Boolean array: does position t's key recur within ``window`` arrivals?"""
    if window < 1:
        raise ValueError("window must be >= 1")
    return next_arrival_gaps(trace) <= window
