"""Space-Saving frequency summary with a fixed number of counters.

Keeps at most ``capacity`` (item, count) pairs.  When a new item arrives
and every counter is taken, the item with the smallest count is evicted
and the newcomer inherits that count plus one.  Estimates never
undershoot the true count and overshoot by at most ``inserted / capacity``.
"""

from __future__ import annotations

from typing import Hashable


class SpaceSaving:
    """Fixed-capacity counter set with O(1) insert and query.

    Counts are kept in ``counts`` (item -> estimate).  ``_buckets`` groups
    monitored items by count so the minimum-count item is found without a
    scan: it maps count -> insertion-ordered dict of items, and ``_min``
    tracks the smallest populated count (0 when empty).
    """

    __slots__ = ("capacity", "counts", "inserted", "_buckets", "_min")

    def __init__(self, capacity: int) -> None:
        if capacity < 1:
            raise ValueError("capacity must be at least 1")
        self.capacity = capacity
        self.counts: dict[Hashable, int] = {}
        self.inserted = 0
        self._buckets: dict[int, dict[Hashable, None]] = {}
        self._min = 0

    def insert(self, item: Hashable) -> int:
        """Record one arrival of ``item``; returns its stored count."""
        counts = self.counts
        buckets = self._buckets
        c = counts.get(item)
        if c is not None:
            counts[item] = c + 1
            bucket = buckets[c]
            del bucket[item]
            if not bucket:
                del buckets[c]
                if self._min == c:
                    # c+1 is populated and everything else was > c
                    self._min = c + 1
            nxt = buckets.get(c + 1)
            if nxt is None:
                buckets[c + 1] = {item: None}
            else:
                nxt[item] = None
        elif len(counts) < self.capacity:
            counts[item] = 1
            one = buckets.get(1)
            if one is None:
                buckets[1] = {item: None}
            else:
                one[item] = None
            self._min = 1
        else:
            m = self._min
            bucket = buckets[m]
            victim, _ = bucket.popitem()
            del counts[victim]
            if not bucket:
                del buckets[m]
                self._min = m + 1
            counts[item] = m + 1
            nxt = buckets.get(m + 1)
            if nxt is None:
                buckets[m + 1] = {item: None}
            else:
                nxt[item] = None
        self.inserted += 1
        return counts[item]

    def query(self, item: Hashable) -> int:
        """Estimated count of ``item``.

        Unmonitored items get the minimum over all ``capacity`` counters.
        While some counters are still free that minimum is 0, and rightly
        so: nothing has been evicted yet, so an unmonitored item truly
        has count 0.  Once full it is the smallest stored count, which
        the eviction rule keeps at or above any evicted item's count.
        """
        c = self.counts.get(item)
        if c is not None:
            return c
        return self._min if len(self.counts) == self.capacity else 0

    def flush(self) -> None:
        """Drop all counters and reset the arrival tally."""
        self.counts = {}
        self._buckets = {}
        self._min = 0
        self.inserted = 0

    def __len__(self) -> int:
        return len(self.counts)

    def __contains__(self, item: Hashable) -> bool:
        return item in self.counts
