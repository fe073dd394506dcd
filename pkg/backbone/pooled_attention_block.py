from __future__ import annotations

import numpy as np

from autodiff import ops
from autodiff.module import Module
from autodiff.rng import derive_generator
from autodiff.tensor import Tensor
from backbone.configuration.backbone_settings import BackboneSettings
from layers.dropout import Dropout
from layers.feed_forward import FeedForward
from layers.layer_norm import LayerNorm
from layers.multi_head_attention import MultiHeadAttention


class PooledAttentionBlock(Module):
    """
    Attention block whose query path is mean-pooled by `stride` while keys and values
    see every token, so the latent sequence shrinks to ⌈L/stride⌉ rows.

        pooled = pool(x)
        h      = LN(pooled + MHA(pooled, x))
        out    = LN(h + FFN(h))
    """

    def __init__(self, settings: BackboneSettings, stride: int, rng: np.random.Generator) -> None:
        super().__init__()
        self.stride = stride
        dim = settings.embed_dim

        self.attention = self.add_child("attention", MultiHeadAttention(dim, settings.heads, rng))
        self.attention_norm = self.add_child("attention_norm", LayerNorm(dim))
        self.feed_forward = self.add_child("feed_forward", FeedForward(dim, settings.feedforward_dim, settings.dropout, rng))
        self.feed_forward_norm = self.add_child("feed_forward_norm", LayerNorm(dim))
        self.attention_dropout = self.add_child("attention_dropout", Dropout(settings.dropout, derive_generator(rng)))
        self.feed_forward_dropout = self.add_child("feed_forward_dropout", Dropout(settings.dropout, derive_generator(rng)))

    def forward(self, x: Tensor) -> Tensor:
        pooled = ops.mean_pool_tokens(x, self.stride)
        attended = self.attention_dropout.forward(self.attention.forward(pooled, x))
        h = self.attention_norm.forward(ops.add(pooled, attended))
        expanded = self.feed_forward_dropout.forward(self.feed_forward.forward(h))
        return self.feed_forward_norm.forward(ops.add(h, expanded))
