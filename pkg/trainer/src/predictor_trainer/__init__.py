"""Offline trainer producing prediction files for the winfreq sketches.

The only coupling to the sketch package is through files: a trace file in,
a prediction file (one '0'/'1' per trace position) and a JSON metrics
report out.
"""

from .dataset import LabeledDataset, build_dataset, build_vocab, encode_contexts
from .export import export_predictions, write_metrics_json
from .gaps import NO_NEXT, next_arrival_gaps, within_window_labels
from .metrics import evaluate_f1
from .model import NextArrivalLSTM
from .traces import read_trace
from .train import Hyperparams, TrainedModel, predict_bits, train

__version__ = "0.1.0"

__all__ = [
    "LabeledDataset",
    "build_dataset",
    "build_vocab",
    "encode_contexts",
    "export_predictions",
    "write_metrics_json",
    "NO_NEXT",
    "next_arrival_gaps",
    "within_window_labels",
    "evaluate_f1",
    "NextArrivalLSTM",
    "read_trace",
    "Hyperparams",
    "TrainedModel",
    "predict_bits",
    "train",
    "__version__",
]
