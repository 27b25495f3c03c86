"""Training loop: BCE-with-logits loss, Adam, chronological validation
carve-out from the train split, checkpoint at the best validation F1."""

from dataclasses import dataclass, field

import numpy as np
import torch
from torch import nn

from .dataset import LabeledDataset
from .metrics import evaluate_f1
from .model import NextArrivalLSTM


@dataclass
class Hyperparams:
    epochs: int = 10
    batch_size: int = 256
    hidden_size: int = 32
    embed_dim: int = 16
    lr: float = 1e-3
    val_fraction: float = 0.1
    seed: int = 0


@dataclass
class TrainedModel:
    module: NextArrivalLSTM = field(repr=False)
    vocab: dict[str, int] = field(repr=False)
    mode: str
    window: int
    context_len: int
    best_epoch: int
    history: list[float]


def predict_bits(
    module: NextArrivalLSTM, features: np.ndarray, batch_size: int = 4096
) -> np.ndarray:
    """Thresholded (0.5) predictions for a context matrix, as uint8."""
    module.eval()
    out = np.empty(len(features), dtype=np.uint8)
    with torch.no_grad():
        for lo in range(0, len(features), batch_size):
            batch = torch.from_numpy(features[lo:lo + batch_size])
            logits = module(batch)
            out[lo:lo + len(batch)] = (logits >= 0.0).numpy().astype(np.uint8)
    return out


def train(dataset: LabeledDataset, hp: Hyperparams = Hyperparams()) -> TrainedModel:
    split = dataset.split_idx
    if split < 2:
        raise ValueError("train split too small to carve out validation")
    train_labels = dataset.train_labels
    if train_labels.min() == train_labels.max():
        raise ValueError("train split contains a single class; nothing to classify")

    val_len = max(1, int(split * hp.val_fraction))
    fit_end = split - val_len
    if fit_end < 1:
        raise ValueError("validation carve-out leaves no training data")

    torch.manual_seed(hp.seed)
    module = NextArrivalLSTM(
        vocab_size=dataset.vocab_size,
        embed_dim=hp.embed_dim,
        hidden_size=hp.hidden_size,
        channels=1 if dataset.mode == "pair" else 2,
    )
    loss_fn = nn.BCEWithLogitsLoss()
    optimizer = torch.optim.Adam(module.parameters(), lr=hp.lr)

    features = torch.from_numpy(dataset.features[:fit_end])
    targets = torch.from_numpy(train_labels[:fit_end].astype(np.float32))
    val_features = dataset.features[fit_end:split]
    val_labels = train_labels[fit_end:split]

    shuffler = torch.Generator().manual_seed(hp.seed)
    history: list[float] = []
    best_f1 = -1.0
    best_epoch = -1
    best_state = None
    for epoch in range(hp.epochs):
        module.train()
        order = torch.randperm(fit_end, generator=shuffler)
        for lo in range(0, fit_end, hp.batch_size):
            idx = order[lo:lo + hp.batch_size]
            optimizer.zero_grad()
            loss = loss_fn(module(features[idx]), targets[idx])
            loss.backward()
            optimizer.step()
        val_f1 = evaluate_f1(predict_bits(module, val_features), val_labels)["f1"]
        history.append(val_f1)
        if val_f1 > best_f1:
            best_f1 = val_f1
            best_epoch = epoch
            best_state = {k: v.detach().clone() for k, v in module.state_dict().items()}

    module.load_state_dict(best_state)
    module.eval()
    return TrainedModel(
        module=module,
        vocab=dataset.vocab,
        mode=dataset.mode,
        window=dataset.window,
        context_len=dataset.context_len,
        best_epoch=best_epoch,
        history=history,
    )
