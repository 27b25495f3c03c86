"""Learned filtering layer over the windowed sketch.

A predictor screens each arrival: keys it expects to recur within the
window are counted by an inner WCSS; the rest are only noted in a
per-frame Bloom filter and skipped.  A key the predictor keeps rejecting
is re-admitted the second time it shows up inside one frame (the Bloom
filter remembers the first sighting), so any single key loses at most
one arrival per frame and at most two over any stretch of ``window``
consecutive arrivals, no matter how wrong the predictor is.

The inner sketch runs at the tightened error budget ``eps - 2/window``
and every estimate is raised by 2 to cover those missed arrivals, which
preserves the WCSS guarantee

    true_window_count <= est <= true_window_count + eps * window

for ANY predictor. A good predictor does not change the bound; it frees
inner counters from single-shot keys, which is what improves accuracy.
"""

from __future__ import annotations

from typing import Hashable

from .bloom import BloomFilter
from .oracles import Predictor
from .wcss import WCSS

# Default Bloom sizing: 8 bits per inner counter, 3 probes. At one frame
# of distinct skipped keys this stays in the low-percent false-positive
# range, and a false positive only re-admits a real arrival early.
BLOOM_BITS_PER_COUNTER = 8
BLOOM_HASHES = 3


class LWCSS:
    """WCSS behind a predictor-driven admission filter.

    ``track_events=True`` records the stream positions of skipped and
    forwarded arrivals in ``skip_log`` / ``forward_log`` (off by default;
    the lists grow with the stream).
    """

    __slots__ = (
        "window",
        "eps",
        "inner",
        "predictor",
        "bloom",
        "position",
        "skip_log",
        "forward_log",
    )

    def __init__(
        self,
        window: int,
        eps: float,
        predictor: Predictor,
        bloom_bits: int | None = None,
        bloom_hashes: int = BLOOM_HASHES,
        id_bytes: int = 8,
        track_events: bool = False,
    ) -> None:
        if eps <= 2.0 / window:
            raise ValueError("epsilon must exceed 2/W")
        self.window = window
        self.eps = eps
        self.inner = WCSS(window, eps - 2.0 / window, id_bytes)
        self.predictor = predictor
        if bloom_bits is None:
            bloom_bits = BLOOM_BITS_PER_COUNTER * self.inner.block_count
        self.bloom = BloomFilter(bloom_bits, bloom_hashes)
        self.position = 0
        self.skip_log: list[int] | None = [] if track_events else None
        self.forward_log: list[int] | None = [] if track_events else None

    def update(self, item: Hashable) -> None:
        """Process one arrival: forward it or skip it, but always advance
        the inner window clock by exactly one.

        The skip branch resolves "seen this frame?" and "remember it" in
        one Bloom hashing pass (check_add); semantically it is contains
        followed by add.
        """
        pos = self.position
        inner = self.inner
        if inner.frame_pos == 0:
            self.bloom.flush()
        if self.predictor.predict(item, pos):
            inner.update(item)
            if self.forward_log is not None:
                self.forward_log.append(pos)
        elif self.bloom.check_add(item):
            inner.update(item)
            if self.forward_log is not None:
                self.forward_log.append(pos)
        else:
            inner.tick()
            if self.skip_log is not None:
                self.skip_log.append(pos)
        self.position = pos + 1

    def query(self, item: Hashable) -> int:
        """Windowed estimate; +2 covers arrivals the filter skipped."""
        return self.inner.query(item) + 2

    def memory_bytes(self) -> int:
        """Inner sketch footprint plus the Bloom filter's bit array."""
        return self.inner.memory_bytes() + (self.bloom.bits + 7) // 8
