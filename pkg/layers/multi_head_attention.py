from __future__ import annotations

import numpy as np

from autodiff import ops
from autodiff.errors import DimensionError, ParameterError
from autodiff.module import Module
from autodiff.tensor import Tensor
from layers.attention import scaled_dot_product_attention
from layers.linear import Linear


class AttentionHead(Module):
    def __init__(self, dim: int, head_dim: int, rng: np.random.Generator) -> None:
        super().__init__()
        self.query = self.add_child("query", Linear(dim, head_dim, rng, bias=False))
        self.key = self.add_child("key", Linear(dim, head_dim, rng, bias=False))
        self.value = self.add_child("value", Linear(dim, head_dim, rng, bias=False))

    def forward(self, query_source: Tensor, key_value_source: Tensor) -> Tensor:
        return scaled_dot_product_attention(
            self.query.forward(query_source),
            self.key.forward(key_value_source),
            self.value.forward(key_value_source),
        )


class MultiHeadAttention(Module):
    """
    h independent heads with d_k = d_v = D/h, concatenated on the feature axis and
    projected by W^o. Self-attention when key_value_source is omitted.
    """

    def __init__(self, dim: int, heads: int, rng: np.random.Generator) -> None:
        super().__init__()
        if heads < 1 or dim % heads:
            raise ParameterError(f"dim {dim} is not divisible by {heads} heads")

        self.dim = dim
        self.head_count = heads
        self.head_dim = dim // heads
        self.heads = [self.add_child(f"head{i}", AttentionHead(dim, self.head_dim, rng)) for i in range(heads)]
        self.output = self.add_child("output", Linear(heads * self.head_dim, dim, rng, bias=False))

    def forward(self, query_source: Tensor, key_value_source: Tensor | None = None) -> Tensor:
        source = query_source if key_value_source is None else key_value_source
        for x in (query_source, source):
            if x.ndim != 2 or x.shape[1] != self.dim:
                raise DimensionError(f"multi-head attention expects [L×{self.dim}], got {x.shape}")

        outputs = [head.forward(query_source, source) for head in self.heads]
        merged = outputs[0] if len(outputs) == 1 else ops.concat(outputs, axis=1)
        return self.output.forward(merged)
