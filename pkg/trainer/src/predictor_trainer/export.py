"""Artifact writers: the prediction file consumed by the sketch package's
file-backed oracle (one ASCII '0'/'1' per line, LF endings, exactly one
line per trace position) and the JSON metrics report."""

import json

import numpy as np

from .dataset import encode_contexts
from .train import TrainedModel, predict_bits

METRIC_KEYS = ("f1", "precision", "recall", "positives", "total")


def export_predictions(
    model: TrainedModel, trace: list[str], window: int, path: str
) -> np.ndarray:
    """Run the model over every trace position and write the prediction
    file. Returns the bit array that was written."""
    if window != model.window:
        raise ValueError(
            f"model was trained for window={model.window}, asked to export for {window}"
        )
    features = encode_contexts(trace, model.vocab, model.mode, model.context_len)
    bits = predict_bits(model.module, features)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for bit in bits:
            fh.write("1\n" if bit else "0\n")
    return bits


def write_metrics_json(metrics: dict, path: str) -> None:
    report = {key: metrics[key] for key in METRIC_KEYS}
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(report, fh, indent=2)
        fh.write("\n")
