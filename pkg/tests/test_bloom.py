"""Bloom filter: one-sided error, flush, analytic false-positive rate,
and hashing that is stable across processes."""

import math
import subprocess
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from winfreq import BloomFilter


def test_empty_contains_nothing():
    bf = BloomFilter(1024, 3)
    assert not bf.contains("x")
    assert not bf.contains("anything at all")


def test_no_false_negatives_small():
    bf = BloomFilter(1024, 3)
    bf.add("x")
    assert bf.contains("x")


@settings(max_examples=60, deadline=None)
@given(keys=st.lists(st.text(min_size=1, max_size=12), min_size=1, max_size=120))
def test_no_false_negatives_property(keys):
    bf = BloomFilter(2048, 3)
    for key in keys:
        bf.add(key)
    assert all(bf.contains(key) for key in keys)


def test_flush_clears():
    bf = BloomFilter(256, 3)
    bf.add("x")
    bf.flush()
    assert not bf.contains("x")
    assert bf.added == 0


def test_added_tally():
    bf = BloomFilter(256, 2)
    bf.add("a")
    bf.add("b")
    assert bf.added == 2


def test_check_add_matches_contains_then_add():
    a = BloomFilter(512, 3)
    b = BloomFilter(512, 3)
    keys = [f"key{i % 40}" for i in range(200)]
    for key in keys:
        fused = a.check_add(key)
        plain = b.contains(key)
        if not plain:
            b.add(key)
        assert fused == plain
        assert a._array == b._array
    assert a.added == b.added


def test_parameter_validation():
    with pytest.raises(ValueError):
        BloomFilter(4, 3)
    with pytest.raises(ValueError):
        BloomFilter(1024, 0)
    with pytest.raises(ValueError):
        BloomFilter(1024, 17)


def test_false_positive_rate_near_analytic():
    # 100 keys into m=1024, h=3: fp ~ (1 - e^{-hn/m})^h; sample fresh keys
    m, h, n = 1024, 3, 100
    bf = BloomFilter(m, h)
    for i in range(n):
        bf.add(f"member{i}")
    probes = 20_000
    false_hits = sum(bf.contains(f"fresh{j}") for j in range(probes))
    expected = (1 - math.exp(-h * n / m)) ** h
    assert false_hits / probes == pytest.approx(expected, abs=0.05)


def test_bit_pattern_stable_across_processes():
    # hashing must not depend on the interpreter's per-process hash seed
    script = (
        "from winfreq import BloomFilter\n"
        "bf = BloomFilter(512, 3)\n"
        "for i in range(40): bf.add(f'key{i}')\n"
        "print(bf._array.hex())\n"
    )
    outs = {
        subprocess.run(
            [sys.executable, "-c", script],
            capture_output=True, text=True, check=True,
            env={"PYTHONHASHSEED": str(seed), "PATH": "/usr/bin:/bin"},
        ).stdout.strip()
        for seed in (1, 2)
    }
    local = BloomFilter(512, 3)
    for i in range(40):
        local.add(f"key{i}")
    outs.add(local._array.hex())
    assert len(outs) == 1


def test_bytes_and_str_inputs_accepted():
    bf = BloomFilter(256, 3)
    bf.add(b"raw")
    assert bf.contains(b"raw")
    bf.add("text")
    assert bf.contains("text")
