"""Frequency estimation over sliding windows.

Core pieces: a fixed-memory windowed sketch (WCSS), a learning-augmented
variant that filters arrivals through a next-arrival predictor (LWCSS),
the predictor family itself, exact baselines, workload tooling and a
benchmark harness exposed through the ``winfreq`` CLI.
"""

from .bloom import BloomFilter
from .lwcss import LWCSS
from .oracles import (
    NO_NEXT,
    ConstantOracle,
    FileOracle,
    FlipOracle,
    GapTable,
    GaussianNoiseOracle,
    PerfectOracle,
    Predictor,
    build_gap_table,
    prediction_f1,
    write_prediction_file,
)
from .space_saving import SpaceSaving
from .wcss import WCSS, pick_block_count
from .workload import ExactWindowCounter, gen_zipf, read_trace, singles_ratio

__all__ = [
    "BloomFilter",
    "ConstantOracle",
    "ExactWindowCounter",
    "FileOracle",
    "FlipOracle",
    "GapTable",
    "GaussianNoiseOracle",
    "LWCSS",
    "NO_NEXT",
    "PerfectOracle",
    "Predictor",
    "SpaceSaving",
    "WCSS",
    "build_gap_table",
    "gen_zipf",
    "pick_block_count",
    "prediction_f1",
    "read_trace",
    "singles_ratio",
    "write_prediction_file",
]

__version__ = "0.1.0"
