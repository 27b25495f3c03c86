"""Small Bloom filter over a flat bit array.

Hashing goes through blake2b rather than Python's ``hash`` so membership
bits do not depend on the interpreter's per-process hash seed: any
experiment driving a sketch through this filter stays reproducible
across processes.  The probe sequence is double hashing,
``(h1 + i * h2) mod bits``, from one 16-byte digest.
"""

from __future__ import annotations

from hashlib import blake2b


class BloomFilter:
    __slots__ = ("bits", "hashes", "added", "_array")

    def __init__(self, bits: int, hashes: int) -> None:
        if bits < 8:
            raise ValueError("bits must be at least 8")
        if not 1 <= hashes <= 16:
            raise ValueError("hashes must be in 1..16")
        self.bits = bits
        self.hashes = hashes
        self.added = 0
        self._array = bytearray((bits + 7) // 8)

    def _probes(self, item) -> list:
        data = item if isinstance(item, bytes) else str(item).encode("utf-8")
        digest = blake2b(data, digest_size=16).digest()
        h1 = int.from_bytes(digest[:8], "little")
        # force h2 odd so probes don't collapse onto one slot
        h2 = int.from_bytes(digest[8:], "little") | 1
        m = self.bits
        return [(h1 + i * h2) % m for i in range(self.hashes)]

    def add(self, item) -> None:
        array = self._array
        for idx in self._probes(item):
            array[idx >> 3] |= 1 << (idx & 7)
        self.added += 1

    def contains(self, item) -> bool:
        """True if ``item`` may have been added since the last flush;
        never False for an item that actually was (no false negatives)."""
        array = self._array
        for idx in self._probes(item):
            if not array[idx >> 3] & (1 << (idx & 7)):
                return False
        return True

    def check_add(self, item) -> bool:
        """contains-then-add in a single hashing pass: True if ``item``
        already reported present; otherwise sets its bits and returns
        False.  Equivalent to ``contains or add`` but hashes once."""
        array = self._array
        probes = self._probes(item)
        hit = True
        for idx in probes:
            if not array[idx >> 3] & (1 << (idx & 7)):
                hit = False
                break
        if hit:
            return True
        for idx in probes:
            array[idx >> 3] |= 1 << (idx & 7)
        self.added += 1
        return False

    def flush(self) -> None:
        """Clear every bit and the add tally."""
        self._array = bytearray(len(self._array))
        self.added = 0
