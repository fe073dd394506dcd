from __future__ import annotations

import numpy as np

from autodiff import ops
from autodiff.module import Module
from autodiff.rng import derive_generator
from autodiff.tensor import Tensor
from layers.dropout import Dropout
from layers.feed_forward import FeedForward
from layers.layer_norm import LayerNorm
from layers.multi_head_attention import MultiHeadAttention


class EncoderLayer(Module):
    """Pre-norm transformer layer: x + MHA(LN(x)), then + FFN(LN(·))."""

    def __init__(self, dim: int, heads: int, feedforward_dim: int, dropout: float, rng: np.random.Generator) -> None:
        super().__init__()
        self.attention_norm = self.add_child("attention_norm", LayerNorm(dim))
        self.attention = self.add_child("attention", MultiHeadAttention(dim, heads, rng))
        self.feed_forward_norm = self.add_child("feed_forward_norm", LayerNorm(dim))
        self.feed_forward = self.add_child("feed_forward", FeedForward(dim, feedforward_dim, dropout, rng))
        self.attention_dropout = self.add_child("attention_dropout", Dropout(dropout, derive_generator(rng)))
        self.feed_forward_dropout = self.add_child("feed_forward_dropout", Dropout(dropout, derive_generator(rng)))

    def forward(self, x: Tensor) -> Tensor:
        x = ops.add(x, self.attention_dropout.forward(self.attention.forward(self.attention_norm.forward(x))))
        return ops.add(x, self.feed_forward_dropout.forward(self.feed_forward.forward(self.feed_forward_norm.forward(x))))
