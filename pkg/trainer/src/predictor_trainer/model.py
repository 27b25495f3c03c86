"""Sequence classifier: embedding, one LSTM layer, a dense head producing
a single logit. The prediction for a position is read from the LSTM output
at the last context step (the arrival being classified)."""

import torch
from torch import nn


class NextArrivalLSTM(nn.Module):
    def __init__(
        self,
        vocab_size: int,
        embed_dim: int = 16,
        hidden_size: int = 32,
        channels: int = 1,
    ) -> None:
        super().__init__()
        self.channels = channels
        self.embed = nn.Embedding(vocab_size, embed_dim, padding_idx=0)
        self.lstm = nn.LSTM(embed_dim * channels, hidden_size, batch_first=True)
        self.head = nn.Linear(hidden_size, 1)

    def forward(self, contexts: torch.Tensor) -> torch.Tensor:
        # (B, L) int64 in pair mode, (B, L, channels) in endpoint mode
        x = self.embed(contexts)
        if self.channels > 1:
            x = x.flatten(2)
        out, _ = self.lstm(x)
        return self.head(out[:, -1, :]).squeeze(-1)
