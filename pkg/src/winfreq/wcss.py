"""Sliding-window frequency sketch with an additive error guarantee.

The stream is cut into frames of ``window`` arrivals and each frame into
``k`` blocks of ``s = window / k`` arrivals.  A Space-Saving summary of
``k`` counters is rebuilt every frame; whenever an item's in-frame count
crosses a multiple of ``s`` ("overflows"), its id is appended to the
youngest of ``k + 1`` block queues and tallied in an overflow census.
Queues are rotated once per block and drained one id per arrival, so a
record lives for roughly one window and the census approximates the
number of overflows inside the live window.

For every item, ``query`` returns an estimate ``est`` with

    true_window_count <= est <= true_window_count + eps * window.
"""

from __future__ import annotations

from collections import deque
from math import ceil
from typing import Hashable

from .space_saving import SpaceSaving

# Flat allowance, per sketch, for the Python object shells around the
# tracked tables. Counter entries and queued ids are costed explicitly.
OVERHEAD_BYTES = 64


def pick_block_count(window: int, eps: float) -> int:
    """Smallest divisor of ``window`` that is at least ceil(4 / eps).

    Using a divisor keeps blocks aligned with frames; requiring at least
    ceil(4/eps) caps the worst-case slack, 4 * block_size, at
    eps * window.
    """
    if window < 4:
        raise ValueError("window must be at least 4")
    if not 0.0 < eps <= 1.0:
        raise ValueError("eps must be in (0, 1]")
    lo = ceil(4.0 / eps)
    if lo > window:
        raise ValueError(
            f"infeasible eps: no divisor k of window={window} with "
            f"ceil(4/eps)={lo} <= k <= window"
        )
    for k in range(lo, window + 1):
        if window % k == 0:
            return k
    raise AssertionError("unreachable: window divides itself")


class WCSS:
    """Window Compact Space-Saving sketch.

    State:
      ``ss``               per-frame Space-Saving summary (k counters)
      ``overflow_counts``  census of ids currently held in the queues
      ``queues``           exactly k + 1 block queues, oldest first
      ``frame_pos``        arrivals into the current frame, in [0, window)
    """

    __slots__ = (
        "window",
        "eps",
        "block_count",
        "block_size",
        "frame_pos",
        "ss",
        "overflow_counts",
        "queues",
        "id_bytes",
        "_live_records",
    )

    def __init__(self, window: int, eps: float, id_bytes: int = 8) -> None:
        k = pick_block_count(window, eps)
        self.window = window
        self.eps = eps
        self.block_count = k
        self.block_size = window // k
        self.frame_pos = 0
        self.ss = SpaceSaving(k)
        self.overflow_counts: dict[Hashable, int] = {}
        self.queues: deque = deque(deque() for _ in range(k + 1))
        self.id_bytes = id_bytes
        self._live_records = 0

    def _roll(self, pos: int) -> None:
        # Frame boundary: restart the per-frame summary. Block boundary:
        # retire the oldest queue (drained by now) and open a fresh one.
        # Then age one record out of the surviving oldest queue.
        if pos == 0:
            self.ss.flush()
        if pos % self.block_size == 0:
            self.queues.popleft()
            self.queues.append(deque())
        oldest = self.queues[0]
        if oldest:
            old = oldest.popleft()
            census = self.overflow_counts
            n = census[old] - 1
            if n:
                census[old] = n
            else:
                del census[old]
            self._live_records -= 1

    def update(self, item: Hashable) -> None:
        """Process one arrival."""
        pos = self.frame_pos
        self._roll(pos)
        count = self.ss.insert(item)
        if count % self.block_size == 0:
            self.queues[-1].append(item)
            census = self.overflow_counts
            census[item] = census.get(item, 0) + 1
            self._live_records += 1
        self.frame_pos = (pos + 1) % self.window

    def tick(self) -> None:
        """Advance the window clock one arrival without counting an item.

        Runs the frame/block/aging maintenance of ``update`` but feeds
        nothing to the summary. Used by filters that suppress an arrival
        yet must keep this sketch's window aligned with the real stream.
        """
        pos = self.frame_pos
        self._roll(pos)
        self.frame_pos = (pos + 1) % self.window

    def query(self, item: Hashable) -> int:
        """Windowed estimate; see the module docstring for the guarantee."""
        s = self.block_size
        hits = self.overflow_counts.get(item)
        if hits is None:
            return 2 * s + self.ss.query(item)
        return s * (hits + 2) + self.ss.query(item) % s

    def memory_bytes(self) -> int:
        """Model-based footprint in bytes.

        Each Space-Saving counter costs id_bytes + 8, each queued id
        id_bytes, each census entry id_bytes + 8, plus a flat overhead.
        """
        ids = self.id_bytes
        return (
            self.block_count * (ids + 8)
            + self._live_records * ids
            + len(self.overflow_counts) * (ids + 8)
            + OVERHEAD_BYTES
        )
